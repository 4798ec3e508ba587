#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "metric.hpp"

namespace ivfg {

enum class MorphismMode {
    Isomorphism, // vertex and edge values equal, edge presence preserved both ways
    Weak,        // vertex values equal, edges map to edges with dominated values
    CoWeak,      // edge set and values preserved exactly, vertex values dominated
};

std::string to_string(MorphismMode mode);
std::optional<MorphismMode> parse_morphism_mode(const std::string& text);

// Exhaustive backtracking search for a bijection satisfying the mode's
// conditions. Unequal vertex counts yield absence, not an error.
std::optional<std::map<std::string, std::string>> find_morphism(const Graph& g1, const Graph& g2,
                                                                MorphismMode mode);

// Checks a concrete mapping. Throws ArgumentError when the mapping is not a
// bijection between the two vertex sets.
bool satisfies_morphism(const Graph& g1, const Graph& g2, MorphismMode mode,
                        const std::map<std::string, std::string>& mapping);

// Distance-preserving bijection anchored at one vertex: g_v sends the anchor
// to anchor2 and every u to a vertex at the same distance from anchor2.
struct AnchorWitness {
    std::string anchor2;
    std::map<std::string, std::string> bijection;
};

struct IsometryResult {
    bool holds = false;
    // Keyed by anchor vertex of the first graph; filled only when holds.
    std::map<std::string, AnchorWitness> witnesses;
};

// Holds iff both graphs have the same number of vertices and every vertex of
// the first has a distance-profile twin in the second. Witness bijections are
// built by matching sorted profiles and re-checked against the raw distance
// equations before the result is returned.
IsometryResult isometric_from(const Graph& g1, const Graph& g2);

bool isometric_mutual(const Graph& g1, const Graph& g2);

// Testing oracle: per anchor, tries every bijection outright. Refuses graphs
// with more than eight vertices.
bool brute_force_isometric_from(const Graph& g1, const Graph& g2);

struct LawCheck {
    std::string law;
    std::size_t checked = 0;
    std::vector<std::uint64_t> violation_seeds;
};

struct LawsReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<LawCheck> laws;

    bool all_pass() const;
    const LawCheck& law(const std::string& name) const; // throws ArgumentError
};

// Checks, over seeded random graphs with at most seven vertices, that mutual
// isometry is reflexive, symmetric, and transitive, that isomorphic pairs are
// mutually isometric, and that co-weak-isomorphic pairs are mutually
// isometric. Violations are report content, never exceptions.
LawsReport verify_relation_laws(std::uint64_t seed, std::size_t trials);

// Relabels vertices through a random bijection onto the same id set.
Graph shuffle_vertices(const Graph& g, std::uint64_t seed);

// Random pair search for two mutually isometric graphs with valid complements
// whose complements are not mutually isometric. Returns the first verified
// pair, or absence once the budget is spent.
std::optional<std::pair<Graph, Graph>> search_complement_counterexample(std::size_t max_vertices,
                                                                        unsigned grid,
                                                                        std::size_t budget,
                                                                        std::uint64_t seed);

} // namespace ivfg
