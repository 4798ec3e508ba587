#include "metric.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "errors.hpp"

namespace ivfg {

const Rational& ExtDist::value() const {
    if (!finite_)
        throw ArgumentError("distance is infinite");
    return value_;
}

std::string to_string(const ExtDist& d) {
    return d.is_finite() ? format_rational(d.value()) : "inf";
}

std::ostream& operator<<(std::ostream& os, const ExtDist& d) {
    return os << to_string(d);
}

std::string to_string(const DistancePair& d) {
    return "(" + to_string(d.lower) + ", " + to_string(d.upper) + ")";
}

std::ostream& operator<<(std::ostream& os, const DistancePair& d) {
    return os << to_string(d);
}

namespace {

// One run per component: edge weight is 1/lo or 1/hi of the edge membership.
std::vector<ExtDist> dijkstra(const Graph& g, std::size_t source, bool upper) {
    const auto& ids = g.vertex_ids();
    std::vector<ExtDist> dist(ids.size(), ExtDist::infinity());
    std::vector<bool> done(ids.size(), false);
    dist[source] = ExtDist(Rational(0));

    using Item = std::pair<ExtDist, std::size_t>;
    const auto cmp = [](const Item& a, const Item& b) { return b.first < a.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
    queue.emplace(dist[source], source);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (done[u])
            continue;
        done[u] = true;
        for (std::size_t v : g.neighbors_by_index(u)) {
            const Interval m = *g.edge_membership(ids[u], ids[v]);
            const Rational weight = 1 / (upper ? m.hi() : m.lo());
            const ExtDist candidate = d + ExtDist(weight);
            if (candidate < dist[v]) {
                dist[v] = candidate;
                queue.emplace(candidate, v);
            }
        }
    }
    return dist;
}

} // namespace

DistancePair distance(const Graph& g, const std::string& from, const std::string& to) {
    const std::size_t s = g.vertex_index(from);
    const std::size_t t = g.vertex_index(to);
    return {dijkstra(g, s, false)[t], dijkstra(g, s, true)[t]};
}

DistanceMatrix::DistanceMatrix(const Graph& g) : ids_(g.vertex_ids()) {
    const std::size_t n = ids_.size();
    for (std::size_t i = 0; i < n; ++i)
        index_.emplace(ids_[i], i);

    cells_.assign(n, std::vector<DistancePair>(n, {ExtDist::infinity(), ExtDist::infinity()}));
    for (std::size_t i = 0; i < n; ++i)
        cells_[i][i] = {ExtDist(Rational(0)), ExtDist(Rational(0))};
    for (const auto& [key, m] : g.edges()) {
        const std::size_t i = index_.at(key.first);
        const std::size_t j = index_.at(key.second);
        const DistancePair w{ExtDist(1 / m.lo()), ExtDist(1 / m.hi())};
        cells_[i][j] = w;
        cells_[j][i] = w;
    }

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                DistancePair& cell = cells_[i][j];
                const ExtDist lower = cells_[i][k].lower + cells_[k][j].lower;
                const ExtDist upper = cells_[i][k].upper + cells_[k][j].upper;
                if (lower < cell.lower)
                    cell.lower = lower;
                if (upper < cell.upper)
                    cell.upper = upper;
            }
        }
    }
}

const DistancePair& DistanceMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= dimension() || j >= dimension())
        throw ArgumentError("matrix index out of range");
    return cells_[i][j];
}

const DistancePair& DistanceMatrix::at(const std::string& from, const std::string& to) const {
    const auto i = index_.find(from);
    const auto j = index_.find(to);
    if (i == index_.end())
        throw ArgumentError("unknown vertex '" + from + "'");
    if (j == index_.end())
        throw ArgumentError("unknown vertex '" + to + "'");
    return cells_[i->second][j->second];
}

namespace {

void enumerate_paths(const Graph& g, std::size_t here, std::size_t target,
                     std::vector<bool>& visited, const Rational& lower_sum,
                     const Rational& upper_sum, DistancePair& best) {
    if (here == target) {
        const ExtDist lower(lower_sum);
        const ExtDist upper(upper_sum);
        if (lower < best.lower)
            best.lower = lower;
        if (upper < best.upper)
            best.upper = upper;
        return;
    }
    visited[here] = true;
    for (std::size_t next : g.neighbors_by_index(here)) {
        if (visited[next])
            continue;
        const Interval m = *g.edge_membership(g.vertex_ids()[here], g.vertex_ids()[next]);
        enumerate_paths(g, next, target, visited, lower_sum + 1 / m.lo(),
                        upper_sum + 1 / m.hi(), best);
    }
    visited[here] = false;
}

} // namespace

DistancePair brute_force_distance(const Graph& g, const std::string& from,
                                  const std::string& to) {
    if (g.vertex_count() > 10)
        throw LimitError("path enumeration is limited to ten vertices, graph has " +
                         std::to_string(g.vertex_count()));
    const std::size_t s = g.vertex_index(from);
    const std::size_t t = g.vertex_index(to);
    if (s == t)
        return {ExtDist(Rational(0)), ExtDist(Rational(0))};

    DistancePair best{ExtDist::infinity(), ExtDist::infinity()};
    std::vector<bool> visited(g.vertex_count(), false);
    enumerate_paths(g, s, t, visited, Rational(0), Rational(0), best);
    return best;
}

DistanceProfile distance_profile(const DistanceMatrix& m, std::size_t index) {
    DistanceProfile profile;
    profile.reserve(m.dimension());
    for (std::size_t j = 0; j < m.dimension(); ++j)
        profile.push_back(m.at(index, j));
    std::sort(profile.begin(), profile.end());
    return profile;
}

} // namespace ivfg
