#include "irregularity.hpp"

#include <vector>

namespace ivfg {

namespace {

std::vector<DegreePair> degree_table(const Graph& g, bool closed) {
    std::vector<DegreePair> out;
    out.reserve(g.vertex_count());
    for (const std::string& id : g.vertex_ids())
        out.push_back(closed ? closed_degree(g, id) : open_degree(g, id));
    return out;
}

// True when some vertex sees two neighbours with different degrees.
bool any_mixed_neighbourhood(const Graph& g, bool closed) {
    const auto deg = degree_table(g, closed);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& nbrs = g.neighbors_by_index(i);
        for (std::size_t a = 0; a + 1 < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                if (deg[nbrs[a]] != deg[nbrs[b]])
                    return true;
    }
    return false;
}

// True when the graph has at least one edge and every adjacent pair has
// distinct degrees.
bool all_adjacent_distinct(const Graph& g, bool closed) {
    if (g.edge_count() == 0)
        return false;
    const auto deg = degree_table(g, closed);
    for (const auto& [key, m] : g.edges()) {
        if (deg[g.vertex_index(key.first)] == deg[g.vertex_index(key.second)])
            return false;
    }
    return true;
}

// True when the graph has at least one edge and each vertex's neighbours have
// pairwise distinct degrees.
bool all_neighbourhoods_distinct(const Graph& g, bool closed) {
    if (g.edge_count() == 0)
        return false;
    const auto deg = degree_table(g, closed);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& nbrs = g.neighbors_by_index(i);
        for (std::size_t a = 0; a + 1 < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                if (deg[nbrs[a]] == deg[nbrs[b]])
                    return false;
    }
    return true;
}

} // namespace

bool is_irregular(const Graph& g) {
    return any_mixed_neighbourhood(g, false);
}

bool is_totally_irregular(const Graph& g) {
    return any_mixed_neighbourhood(g, true);
}

bool is_neighbourly_irregular(const Graph& g) {
    return all_adjacent_distinct(g, false);
}

bool is_neighbourly_totally_irregular(const Graph& g) {
    return all_adjacent_distinct(g, true);
}

bool is_highly_irregular(const Graph& g) {
    return all_neighbourhoods_distinct(g, false);
}

bool is_highly_totally_irregular(const Graph& g) {
    return all_neighbourhoods_distinct(g, true);
}

Classification classify(const Graph& g) {
    Classification c;
    c.irregular = is_irregular(g);
    c.totally_irregular = is_totally_irregular(g);
    c.neighbourly_irregular = is_neighbourly_irregular(g);
    c.neighbourly_totally_irregular = is_neighbourly_totally_irregular(g);
    c.highly_irregular = is_highly_irregular(g);
    c.highly_totally_irregular = is_highly_totally_irregular(g);
    return c;
}

} // namespace ivfg
