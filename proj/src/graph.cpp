#include "graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace ivfg {

std::string to_string(const DegreePair& d) {
    std::string out = d.closed ? "deg[" : "deg(";
    out += format_rational(d.mu);
    out += ", ";
    out += format_rational(d.nu);
    out += d.closed ? "]" : ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const DegreePair& d) {
    return os << to_string(d);
}

namespace {

bool valid_id(const std::string& id) {
    if (id.empty())
        return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok)
            return false;
    }
    return true;
}

std::string edge_label(const Graph::EdgeKey& k) {
    return "edge '" + k.first + "'-'" + k.second + "'";
}

} // namespace

Graph Graph::build(std::string name,
                   std::vector<std::pair<std::string, Interval>> vertices,
                   std::vector<std::tuple<std::string, std::string, Interval>> edges) {
    std::vector<std::string> violations;

    Graph g;
    g.name_ = std::move(name);

    for (auto& [id, m] : vertices) {
        if (!valid_id(id)) {
            violations.push_back("invalid vertex id '" + id + "'");
            continue;
        }
        if (!g.membership_.emplace(id, m).second)
            violations.push_back("duplicate vertex '" + id + "'");
    }

    for (auto& [a, b, m] : edges) {
        const EdgeKey key = edge_key(a, b);
        bool known = true;
        for (const std::string& end : {key.first, key.second}) {
            if (g.membership_.count(end) == 0) {
                violations.push_back(edge_label(key) + ": unknown vertex '" + end + "'");
                known = false;
            }
            if (key.first == key.second)
                break;
        }
        if (!known)
            continue;
        if (a == b) {
            violations.push_back(edge_label(key) + ": self-loop");
            continue;
        }
        if (g.edges_.count(key)) {
            violations.push_back("duplicate " + edge_label(key));
            continue;
        }
        const Interval bound = rmin(g.membership_.at(key.first), g.membership_.at(key.second));
        if (m.lo() <= 0)
            violations.push_back(edge_label(key) + ": lower bound " + format_rational(m.lo()) +
                                 " must be positive");
        if (m.lo() > bound.lo())
            violations.push_back(edge_label(key) + ": lower bound " + format_rational(m.lo()) +
                                 " exceeds min of endpoint lower bounds " +
                                 format_rational(bound.lo()));
        if (m.hi() > bound.hi())
            violations.push_back(edge_label(key) + ": upper bound " + format_rational(m.hi()) +
                                 " exceeds min of endpoint upper bounds " +
                                 format_rational(bound.hi()));
        g.edges_.emplace(key, m);
    }

    if (!violations.empty())
        throw ValidationError("invalid graph", violations);

    g.ids_.reserve(g.membership_.size());
    for (const auto& [id, m] : g.membership_)
        g.ids_.push_back(id);

    g.adjacency_.assign(g.ids_.size(), {});
    for (const auto& [key, m] : g.edges_) {
        const std::size_t i = g.vertex_index(key.first);
        const std::size_t j = g.vertex_index(key.second);
        g.adjacency_[i].push_back(j);
        g.adjacency_[j].push_back(i);
    }
    for (auto& row : g.adjacency_)
        std::sort(row.begin(), row.end());

    return g;
}

bool Graph::has_vertex(const std::string& id) const {
    return membership_.count(id) != 0;
}

std::size_t Graph::vertex_index(const std::string& id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw ArgumentError("unknown vertex '" + id + "'");
    return static_cast<std::size_t>(it - ids_.begin());
}

const Interval& Graph::vertex_membership(const std::string& id) const {
    const auto it = membership_.find(id);
    if (it == membership_.end())
        throw ArgumentError("unknown vertex '" + id + "'");
    return it->second;
}

std::optional<Interval> Graph::edge_membership(const std::string& a, const std::string& b) const {
    const auto it = edges_.find(edge_key(a, b));
    if (it == edges_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> Graph::neighbors(const std::string& id) const {
    std::vector<std::string> out;
    for (std::size_t j : neighbors_by_index(vertex_index(id)))
        out.push_back(ids_[j]);
    return out;
}

const std::vector<std::size_t>& Graph::neighbors_by_index(std::size_t index) const {
    if (index >= adjacency_.size())
        throw ArgumentError("vertex index " + std::to_string(index) + " out of range");
    return adjacency_[index];
}

namespace {

Rational interval_weight(const Interval& m) {
    return (Rational(1) + m.lo() + m.hi()) / 2;
}

} // namespace

Rational order(const Graph& g) {
    Rational sum = 0;
    for (const auto& [id, m] : g.vertex_memberships())
        sum += interval_weight(m);
    return sum;
}

Rational size(const Graph& g) {
    Rational sum = 0;
    for (const auto& [key, m] : g.edges())
        sum += interval_weight(m);
    return sum;
}

DegreePair open_degree(const Graph& g, const std::string& id) {
    DegreePair d{0, 0, false};
    const std::size_t i = g.vertex_index(id);
    for (std::size_t j : g.neighbors_by_index(i)) {
        const Interval& m = g.vertex_membership(g.vertex_ids()[j]);
        d.mu += m.lo();
        d.nu += m.hi();
    }
    return d;
}

DegreePair closed_degree(const Graph& g, const std::string& id) {
    DegreePair d = open_degree(g, id);
    const Interval& m = g.vertex_membership(id);
    d.mu += m.lo();
    d.nu += m.hi();
    d.closed = true;
    return d;
}

Graph complement(const Graph& g) {
    const auto& ids = g.vertex_ids();

    std::vector<std::pair<std::string, Interval>> vertices;
    for (const std::string& id : ids)
        vertices.emplace_back(id, g.vertex_membership(id));

    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    std::vector<std::string> offending;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const Interval bound = rmin(g.vertex_membership(ids[i]), g.vertex_membership(ids[j]));
            Rational lo = bound.lo();
            Rational hi = bound.hi();
            if (const auto m = g.edge_membership(ids[i], ids[j])) {
                lo -= m->lo();
                hi -= m->hi();
            }
            const std::string label = "pair '" + ids[i] + "'-'" + ids[j] + "'";
            if (lo > hi) {
                offending.push_back(label + ": inverted interval [" + format_rational(lo) + ", " +
                                    format_rational(hi) + "]");
            } else if (lo == 0 && hi > 0) {
                offending.push_back(label + ": zero lower bound with positive upper bound " +
                                    format_rational(hi));
            } else if (lo > 0) {
                edges.emplace_back(ids[i], ids[j], Interval(lo, hi));
            }
        }
    }

    if (!offending.empty())
        throw ComplementError("complement does not exist", offending);

    return Graph::build(g.name() + "_complement", std::move(vertices), std::move(edges));
}

Graph permute(const Graph& g, const std::map<std::string, std::string>& bijection) {
    if (bijection.size() != g.vertex_count())
        throw ArgumentError("mapping covers " + std::to_string(bijection.size()) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
    std::set<std::string> images;
    for (const auto& [from, to] : bijection) {
        if (!g.has_vertex(from))
            throw ArgumentError("mapping uses unknown vertex '" + from + "'");
        if (!images.insert(to).second)
            throw ArgumentError("mapping sends two vertices to '" + to + "'");
    }

    std::vector<std::pair<std::string, Interval>> vertices;
    for (const std::string& id : g.vertex_ids())
        vertices.emplace_back(bijection.at(id), g.vertex_membership(id));

    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    for (const auto& [key, m] : g.edges())
        edges.emplace_back(bijection.at(key.first), bijection.at(key.second), m);

    return Graph::build(g.name(), std::move(vertices), std::move(edges));
}

Graph random_graph(std::size_t vertex_total, const Rational& density, unsigned grid,
                   std::uint64_t seed) {
    if (vertex_total == 0)
        throw ArgumentError("vertex total must be positive");
    if (grid == 0)
        throw ArgumentError("grid must be positive");
    if (density < 0 || density > 1)
        throw ArgumentError("density " + format_rational(density) + " is outside [0, 1]");

    std::mt19937_64 rng(seed);

    std::size_t digits = 1;
    for (std::size_t v = vertex_total; v >= 10; v /= 10)
        ++digits;

    std::vector<std::pair<std::string, Interval>> vertices;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < vertex_total; ++i) {
        std::string num = std::to_string(i + 1);
        std::string id = "v" + std::string(digits - num.size(), '0') + num;
        const std::uint64_t a = draw(rng, 1, grid);
        const std::uint64_t b = draw(rng, 1, grid);
        const Rational lo(std::min(a, b), grid);
        const Rational hi(std::max(a, b), grid);
        vertices.emplace_back(id, Interval(lo, hi));
        ids.push_back(std::move(id));
    }

    constexpr std::uint64_t kDensityDen = 1'000'000;
    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    for (std::size_t i = 0; i < vertex_total; ++i) {
        for (std::size_t j = i + 1; j < vertex_total; ++j) {
            const Rational roll(draw(rng, 0, kDensityDen - 1), kDensityDen);
            if (roll >= density)
                continue;
            const Interval bound = rmin(vertices[i].second, vertices[j].second);
            // Bounds are multiples of 1/grid, so the numerators below are
            // whole and at least 1.
            const std::uint64_t lo_cap =
                static_cast<std::uint64_t>(numerator(Rational(bound.lo() * grid)));
            const std::uint64_t hi_cap =
                static_cast<std::uint64_t>(numerator(Rational(bound.hi() * grid)));
            const std::uint64_t lo = draw(rng, 1, lo_cap);
            const std::uint64_t hi = draw(rng, lo, hi_cap);
            edges.emplace_back(ids[i], ids[j], Interval(Rational(lo, grid), Rational(hi, grid)));
        }
    }

    const std::string name =
        "rnd_n" + std::to_string(vertex_total) + "_s" + std::to_string(seed);
    return Graph::build(name, std::move(vertices), std::move(edges));
}

} // namespace ivfg
