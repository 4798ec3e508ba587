#include "morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "rng.hpp"

namespace ivfg {

std::string to_string(MorphismMode mode) {
    switch (mode) {
    case MorphismMode::Isomorphism:
        return "iso";
    case MorphismMode::Weak:
        return "weak";
    case MorphismMode::CoWeak:
        return "coweak";
    }
    throw ArgumentError("unhandled morphism mode");
}

std::optional<MorphismMode> parse_morphism_mode(const std::string& text) {
    if (text == "iso" || text == "isomorphism")
        return MorphismMode::Isomorphism;
    if (text == "weak")
        return MorphismMode::Weak;
    if (text == "coweak")
        return MorphismMode::CoWeak;
    return std::nullopt;
}

namespace {

using Bounds = std::pair<Rational, Rational>;

Bounds bounds_of(const Interval& m) {
    return {m.lo(), m.hi()};
}

bool leq(const Interval& a, const Interval& b) {
    return a.lo() <= b.lo() && a.hi() <= b.hi();
}

std::vector<Bounds> sorted_vertex_bounds(const Graph& g) {
    std::vector<Bounds> out;
    for (const auto& [id, m] : g.vertex_memberships())
        out.push_back(bounds_of(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bounds> sorted_edge_bounds(const Graph& g) {
    std::vector<Bounds> out;
    for (const auto& [key, m] : g.edges())
        out.push_back(bounds_of(m));
    std::sort(out.begin(), out.end());
    return out;
}

// Dense unordered-pair lookup for the backtracking inner loop.
struct EdgeTable {
    explicit EdgeTable(const Graph& g)
        : cells(g.vertex_count() * g.vertex_count(), std::nullopt), n(g.vertex_count()) {
        for (const auto& [key, m] : g.edges()) {
            const std::size_t i = g.vertex_index(key.first);
            const std::size_t j = g.vertex_index(key.second);
            cells[i * n + j] = m;
            cells[j * n + i] = m;
        }
    }

    const std::optional<Interval>& at(std::size_t i, std::size_t j) const {
        return cells[i * n + j];
    }

    std::vector<std::optional<Interval>> cells;
    std::size_t n;
};

std::vector<Bounds> incident_bounds(const Graph& g, std::size_t i) {
    std::vector<Bounds> out;
    const std::string& id = g.vertex_ids()[i];
    for (std::size_t j : g.neighbors_by_index(i))
        out.push_back(bounds_of(*g.edge_membership(id, g.vertex_ids()[j])));
    std::sort(out.begin(), out.end());
    return out;
}

struct MorphismSearch {
    const Graph& g1;
    const Graph& g2;
    MorphismMode mode;
    EdgeTable e1;
    EdgeTable e2;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> order;
    std::vector<std::size_t> assigned;
    std::vector<bool> used;

    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    MorphismSearch(const Graph& a, const Graph& b, MorphismMode m)
        : g1(a), g2(b), mode(m), e1(a), e2(b) {}

    bool vertex_compatible(std::size_t x, std::size_t y) const {
        const Interval& a = g1.vertex_membership(g1.vertex_ids()[x]);
        const Interval& b = g2.vertex_membership(g2.vertex_ids()[y]);
        if (mode == MorphismMode::CoWeak)
            return leq(a, b);
        return a == b;
    }

    bool build_candidates() {
        const std::size_t n = g1.vertex_count();
        std::vector<std::vector<Bounds>> inc1(n), inc2(n);
        for (std::size_t i = 0; i < n; ++i) {
            inc1[i] = incident_bounds(g1, i);
            inc2[i] = incident_bounds(g2, i);
        }
        candidates.assign(n, {});
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (!vertex_compatible(x, y))
                    continue;
                if (mode == MorphismMode::Weak) {
                    if (inc1[x].size() > inc2[y].size())
                        continue;
                } else if (inc1[x] != inc2[y]) {
                    continue;
                }
                candidates[x].push_back(y);
            }
            if (candidates[x].empty())
                return false;
        }
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (candidates[a].size() != candidates[b].size())
                return candidates[a].size() < candidates[b].size();
            return a < b;
        });
        return true;
    }

    bool consistent(std::size_t pos, std::size_t x, std::size_t y) const {
        for (std::size_t p = 0; p < pos; ++p) {
            const std::size_t u = order[p];
            const std::size_t w = assigned[u];
            const auto& a = e1.at(x, u);
            const auto& b = e2.at(y, w);
            if (mode == MorphismMode::Weak) {
                if (a && (!b || !leq(*a, *b)))
                    return false;
            } else {
                if (a.has_value() != b.has_value())
                    return false;
                if (a && *a != *b)
                    return false;
            }
        }
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == order.size())
            return true;
        const std::size_t x = order[pos];
        for (std::size_t y : candidates[x]) {
            if (used[y] || !consistent(pos, x, y))
                continue;
            assigned[x] = y;
            used[y] = true;
            if (extend(pos + 1))
                return true;
            assigned[x] = kUnset;
            used[y] = false;
        }
        return false;
    }

    std::optional<std::map<std::string, std::string>> run() {
        if (!build_candidates())
            return std::nullopt;
        assigned.assign(g1.vertex_count(), kUnset);
        used.assign(g2.vertex_count(), false);
        if (!extend(0))
            return std::nullopt;
        std::map<std::string, std::string> mapping;
        for (std::size_t x = 0; x < g1.vertex_count(); ++x)
            mapping.emplace(g1.vertex_ids()[x], g2.vertex_ids()[assigned[x]]);
        return mapping;
    }
};

} // namespace

std::optional<std::map<std::string, std::string>> find_morphism(const Graph& g1, const Graph& g2,
                                                                MorphismMode mode) {
    if (g1.vertex_count() != g2.vertex_count())
        return std::nullopt;
    if (mode == MorphismMode::Weak) {
        if (g1.edge_count() > g2.edge_count())
            return std::nullopt;
        if (sorted_vertex_bounds(g1) != sorted_vertex_bounds(g2))
            return std::nullopt;
    } else {
        if (g1.edge_count() != g2.edge_count())
            return std::nullopt;
        if (sorted_edge_bounds(g1) != sorted_edge_bounds(g2))
            return std::nullopt;
        if (mode == MorphismMode::Isomorphism &&
            sorted_vertex_bounds(g1) != sorted_vertex_bounds(g2))
            return std::nullopt;
    }

    MorphismSearch search(g1, g2, mode);
    auto mapping = search.run();
    if (mapping && !satisfies_morphism(g1, g2, mode, *mapping))
        throw Error("internal: morphism search produced a mapping that fails its own conditions");
    return mapping;
}

bool satisfies_morphism(const Graph& g1, const Graph& g2, MorphismMode mode,
                        const std::map<std::string, std::string>& mapping) {
    if (mapping.size() != g1.vertex_count() || g1.vertex_count() != g2.vertex_count())
        throw ArgumentError("mapping is not a bijection between the vertex sets");
    std::set<std::string> images;
    for (const auto& [from, to] : mapping) {
        if (!g1.has_vertex(from))
            throw ArgumentError("mapping uses unknown vertex '" + from + "'");
        if (!g2.has_vertex(to))
            throw ArgumentError("mapping targets unknown vertex '" + to + "'");
        if (!images.insert(to).second)
            throw ArgumentError("mapping sends two vertices to '" + to + "'");
    }

    for (const std::string& x : g1.vertex_ids()) {
        const Interval& a = g1.vertex_membership(x);
        const Interval& b = g2.vertex_membership(mapping.at(x));
        if (mode == MorphismMode::CoWeak ? !leq(a, b) : a != b)
            return false;
    }

    if (mode != MorphismMode::Weak && g1.edge_count() != g2.edge_count())
        return false;
    if (mode == MorphismMode::Weak && g1.edge_count() > g2.edge_count())
        return false;

    for (const auto& [key, m] : g1.edges()) {
        const auto image = g2.edge_membership(mapping.at(key.first), mapping.at(key.second));
        if (!image)
            return false;
        if (mode == MorphismMode::Weak ? !leq(m, *image) : m != *image)
            return false;
    }
    return true;
}

IsometryResult isometric_from(const Graph& g1, const Graph& g2) {
    IsometryResult result;
    if (g1.vertex_count() != g2.vertex_count())
        return result;

    const DistanceMatrix m1(g1);
    const DistanceMatrix m2(g2);
    const std::size_t n = g1.vertex_count();

    std::vector<DistanceProfile> profiles2(n);
    for (std::size_t j = 0; j < n; ++j)
        profiles2[j] = distance_profile(m2, j);

    std::map<std::string, AnchorWitness> witnesses;
    for (std::size_t i = 0; i < n; ++i) {
        const DistanceProfile profile1 = distance_profile(m1, i);
        std::size_t anchor2 = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (profiles2[j] == profile1) {
                anchor2 = j;
                break;
            }
        }
        if (anchor2 == n)
            return result;

        using Row = std::pair<DistancePair, std::string>;
        std::vector<Row> rows1, rows2;
        for (std::size_t u = 0; u < n; ++u) {
            rows1.emplace_back(m1.at(i, u), g1.vertex_ids()[u]);
            rows2.emplace_back(m2.at(anchor2, u), g2.vertex_ids()[u]);
        }
        std::sort(rows1.begin(), rows1.end());
        std::sort(rows2.begin(), rows2.end());

        AnchorWitness witness;
        witness.anchor2 = g2.vertex_ids()[anchor2];
        for (std::size_t k = 0; k < n; ++k)
            witness.bijection.emplace(rows1[k].second, rows2[k].second);

        const std::string& anchor1 = g1.vertex_ids()[i];
        for (const std::string& u : g1.vertex_ids()) {
            if (m1.at(u, anchor1) != m2.at(witness.bijection.at(u), witness.anchor2))
                throw Error("internal: isometry witness failed the distance re-check");
        }
        if (witness.bijection.at(anchor1) != witness.anchor2)
            throw Error("internal: isometry witness does not fix the anchor");
        witnesses.emplace(anchor1, std::move(witness));
    }

    result.holds = true;
    result.witnesses = std::move(witnesses);
    return result;
}

bool isometric_mutual(const Graph& g1, const Graph& g2) {
    return isometric_from(g1, g2).holds && isometric_from(g2, g1).holds;
}

bool brute_force_isometric_from(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() > 8 || g2.vertex_count() > 8)
        throw LimitError("bijection enumeration is limited to eight vertices");
    if (g1.vertex_count() != g2.vertex_count())
        return false;

    const DistanceMatrix m1(g1);
    const DistanceMatrix m2(g2);
    const std::size_t n = g1.vertex_count();

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), 0);
        bool matched = false;
        do {
            bool ok = true;
            for (std::size_t u = 0; u < n && ok; ++u)
                ok = m1.at(u, i) == m2.at(image[u], image[i]);
            matched = ok;
        } while (!matched && std::next_permutation(image.begin(), image.end()));
        if (!matched)
            return false;
    }
    return true;
}

bool LawsReport::all_pass() const {
    for (const LawCheck& check : laws)
        if (!check.violation_seeds.empty())
            return false;
    return true;
}

const LawCheck& LawsReport::law(const std::string& name) const {
    for (const LawCheck& check : laws)
        if (check.law == name)
            return check;
    throw ArgumentError("unknown law '" + name + "'");
}

namespace {

std::map<std::string, std::string> random_bijection(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::string> ids = g.vertex_ids();
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[draw(rng, 0, i - 1)]);
    std::map<std::string, std::string> bijection;
    for (std::size_t i = 0; i < ids.size(); ++i)
        bijection.emplace(g.vertex_ids()[i], ids[i]);
    return bijection;
}

std::uint64_t lattice_units(const Rational& value, unsigned grid) {
    return static_cast<std::uint64_t>(numerator(Rational(value * grid)));
}

// Redraws each vertex membership at or above its current bounds, keeping the
// 1/grid lattice. Edge constraints only relax, so the result validates.
Graph raise_memberships(const Graph& g, std::mt19937_64& rng, unsigned grid) {
    std::vector<std::pair<std::string, Interval>> vertices;
    for (const std::string& id : g.vertex_ids()) {
        const Interval& m = g.vertex_membership(id);
        const std::uint64_t hi = draw(rng, lattice_units(m.hi(), grid), grid);
        const std::uint64_t lo = draw(rng, lattice_units(m.lo(), grid), hi);
        vertices.emplace_back(id, Interval(Rational(lo, grid), Rational(hi, grid)));
    }
    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    for (const auto& [key, m] : g.edges())
        edges.emplace_back(key.first, key.second, m);
    return Graph::build(g.name(), std::move(vertices), std::move(edges));
}

// Redraws every vertex membership from scratch, bounded below by the incident
// edge memberships so the edge set survives unchanged.
Graph redraw_memberships(const Graph& g, std::mt19937_64& rng, unsigned grid) {
    std::vector<std::pair<std::string, Interval>> vertices;
    for (const std::string& id : g.vertex_ids()) {
        std::uint64_t floor_lo = 1;
        std::uint64_t floor_hi = 1;
        for (const std::string& other : g.neighbors(id)) {
            const Interval m = *g.edge_membership(id, other);
            floor_lo = std::max(floor_lo, lattice_units(m.lo(), grid));
            floor_hi = std::max(floor_hi, lattice_units(m.hi(), grid));
        }
        const std::uint64_t lo = draw(rng, floor_lo, grid);
        const std::uint64_t hi = draw(rng, std::max(lo, floor_hi), grid);
        vertices.emplace_back(id, Interval(Rational(lo, grid), Rational(hi, grid)));
    }
    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    for (const auto& [key, m] : g.edges())
        edges.emplace_back(key.first, key.second, m);
    return Graph::build(g.name() + "_alt", std::move(vertices), std::move(edges));
}

} // namespace

Graph shuffle_vertices(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return permute(g, random_bijection(g, rng));
}

LawsReport verify_relation_laws(std::uint64_t seed, std::size_t trials) {
    if (trials == 0)
        throw ArgumentError("trials must be at least 1");

    LawsReport report;
    report.seed = seed;
    report.trials = trials;
    report.laws = {{"reflexivity", 0, {}},
                   {"symmetry", 0, {}},
                   {"transitivity", 0, {}},
                   {"isomorphism_implies_isometry", 0, {}},
                   {"coweak_implies_isometry", 0, {}}};
    LawCheck& reflexivity = report.laws[0];
    LawCheck& symmetry = report.laws[1];
    LawCheck& transitivity = report.laws[2];
    LawCheck& iso_law = report.laws[3];
    LawCheck& coweak_law = report.laws[4];

    constexpr unsigned kGrid = 10;
    std::mt19937_64 master(seed);

    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = master();
        std::mt19937_64 rng(s);
        const std::size_t n = 2 + s % 6;
        const Rational density((s >> 8) % 5 + 1, 5);
        const Graph g = random_graph(n, density, kGrid, s);

        reflexivity.checked += 1;
        if (!isometric_mutual(g, g))
            reflexivity.violation_seeds.push_back(s);

        // Partner kinds rotate: an isometric relabel, an independent graph of
        // the same order, and a graph of a different order.
        const Graph partner = [&] {
            switch (t % 3) {
            case 0:
                return permute(g, random_bijection(g, rng));
            case 1:
                return random_graph(n, density, kGrid, s ^ 0x9e3779b97f4a7c15ull);
            default:
                return random_graph(n == 7 ? 2 : n + 1, density, kGrid,
                                    s ^ 0x517cc1b727220a95ull);
            }
        }();
        symmetry.checked += 1;
        if (isometric_mutual(g, partner) != isometric_mutual(partner, g))
            symmetry.violation_seeds.push_back(s);

        const Graph second = permute(g, random_bijection(g, rng));
        const Graph third = permute(second, random_bijection(second, rng));
        transitivity.checked += 1;
        const bool ab = isometric_mutual(g, second);
        const bool bc = isometric_mutual(second, third);
        if (ab && bc && !isometric_mutual(g, third))
            transitivity.violation_seeds.push_back(s);

        const Graph relabeled = permute(g, random_bijection(g, rng));
        iso_law.checked += 1;
        if (!find_morphism(g, relabeled, MorphismMode::Isomorphism) ||
            !isometric_mutual(g, relabeled))
            iso_law.violation_seeds.push_back(s);

        const Graph dominated = raise_memberships(permute(g, random_bijection(g, rng)), rng, kGrid);
        coweak_law.checked += 1;
        if (!find_morphism(g, dominated, MorphismMode::CoWeak) ||
            !isometric_mutual(g, dominated))
            coweak_law.violation_seeds.push_back(s);
    }

    return report;
}

std::optional<std::pair<Graph, Graph>> search_complement_counterexample(std::size_t max_vertices,
                                                                        unsigned grid,
                                                                        std::size_t budget,
                                                                        std::uint64_t seed) {
    if (max_vertices < 2)
        throw ArgumentError("max vertices must be at least 2");
    if (grid == 0)
        throw ArgumentError("grid must be positive");

    std::mt19937_64 master(seed);
    for (std::size_t trial = 0; trial < budget; ++trial) {
        const std::uint64_t s = master();
        std::mt19937_64 rng(s);
        const std::size_t n = 2 + s % (max_vertices - 1);
        const Rational density((s >> 8) % 5 + 1, 5);
        const Graph a = random_graph(n, density, grid, s);
        const Graph b = redraw_memberships(a, rng, grid);
        try {
            const Graph ca = complement(a);
            const Graph cb = complement(b);
            if (!isometric_mutual(a, b) || isometric_mutual(ca, cb))
                continue;
        } catch (const ComplementError&) {
            continue;
        }
        // Re-verify from scratch before returning.
        if (isometric_mutual(a, b) && !isometric_mutual(complement(a), complement(b)))
            return std::make_optional(std::make_pair(a, b));
    }
    return std::nullopt;
}

} // namespace ivfg
