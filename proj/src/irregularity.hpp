#pragma once

#include "graph.hpp"

namespace ivfg {

// The six regularity verdicts. An edgeless graph gets all six false: every
// definition here quantifies over adjacent vertices, and there are none.
struct Classification {
    bool irregular = false;
    bool totally_irregular = false;
    bool neighbourly_irregular = false;
    bool neighbourly_totally_irregular = false;
    bool highly_irregular = false;
    bool highly_totally_irregular = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

// Some vertex has two neighbours whose open degrees differ.
bool is_irregular(const Graph& g);

// Same shape with closed degrees.
bool is_totally_irregular(const Graph& g);

// Every pair of adjacent vertices has distinct open degrees.
bool is_neighbourly_irregular(const Graph& g);

// Every pair of adjacent vertices has distinct closed degrees.
bool is_neighbourly_totally_irregular(const Graph& g);

// Every vertex's neighbours have pairwise distinct open degrees.
bool is_highly_irregular(const Graph& g);

// Every vertex's neighbours have pairwise distinct closed degrees.
bool is_highly_totally_irregular(const Graph& g);

Classification classify(const Graph& g);

} // namespace ivfg
