#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "interval.hpp"

namespace ivfg {

// Open (deg(x)) or closed (deg[x]) neighbourhood degree of a vertex.
struct DegreePair {
    Rational mu;
    Rational nu;
    bool closed = false;

    // Degree equality is exact rational equality of both components; the
    // open/closed flag is bookkeeping, not part of the value.
    friend bool operator==(const DegreePair& a, const DegreePair& b) {
        return a.mu == b.mu && a.nu == b.nu;
    }
    friend bool operator!=(const DegreePair& a, const DegreePair& b) { return !(a == b); }
    friend bool operator<(const DegreePair& a, const DegreePair& b) {
        if (a.mu != b.mu)
            return a.mu < b.mu;
        return a.nu < b.nu;
    }
};

std::string to_string(const DegreePair& d);
std::ostream& operator<<(std::ostream& os, const DegreePair& d);

// A simple undirected graph whose vertices and edges carry membership
// intervals, with every edge interval bounded componentwise by the
// rmin of its endpoints' intervals and strictly positive in both bounds.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    // Unordered edge key, stored canonically (smaller id first).
    using EdgeKey = std::pair<std::string, std::string>;

    static EdgeKey edge_key(const std::string& a, const std::string& b) {
        return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
    }

    // Validates everything and reports all violations at once.
    static Graph build(std::string name,
                       std::vector<std::pair<std::string, Interval>> vertices,
                       std::vector<std::tuple<std::string, std::string, Interval>> edges);

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Vertex ids in their canonical (lexicographic) order.
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::map<std::string, Interval>& vertex_memberships() const { return membership_; }
    const std::map<EdgeKey, Interval>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const;
    std::size_t vertex_index(const std::string& id) const; // throws ArgumentError
    const Interval& vertex_membership(const std::string& id) const;
    std::optional<Interval> edge_membership(const std::string& a, const std::string& b) const;

    // Adjacent vertex ids, sorted.
    std::vector<std::string> neighbors(const std::string& id) const;
    const std::vector<std::size_t>& neighbors_by_index(std::size_t index) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.name_ == b.name_ && a.membership_ == b.membership_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    Graph() = default;

    std::string name_;
    std::vector<std::string> ids_; // sorted
    std::map<std::string, Interval> membership_;
    std::map<EdgeKey, Interval> edges_;
    std::vector<std::vector<std::size_t>> adjacency_; // per vertex index, sorted
};

// Sum over vertices of (1 + lo + hi) / 2.
Rational order(const Graph& g);

// Sum over edges of (1 + lo + hi) / 2.
Rational size(const Graph& g);

// Componentwise sum of the neighbours' vertex memberships.
DegreePair open_degree(const Graph& g, const std::string& id);

// Open degree plus the vertex's own membership.
DegreePair closed_degree(const Graph& g, const std::string& id);

// Same vertices; every pair's membership becomes rmin of the endpoint
// memberships minus the edge membership (absent edges count as [0,0]).
// Pairs that come out as [0,0] are omitted. Throws ComplementError when any
// pair yields an inverted interval or a vanished lower bound with a positive
// upper bound: no IVFG complement exists then.
Graph complement(const Graph& g);

// Relabels vertices through a bijection; memberships carry over exactly.
Graph permute(const Graph& g, const std::map<std::string, std::string>& bijection);

// Deterministic generator used for property tests and fixtures. Vertex
// memberships are drawn on the 1/grid lattice, each pair becomes an edge with
// probability `density`, and edge memberships are drawn positive and bounded
// by the rmin of their endpoints. The result always validates.
Graph random_graph(std::size_t vertex_total, const Rational& density, unsigned grid,
                   std::uint64_t seed);

} // namespace ivfg
