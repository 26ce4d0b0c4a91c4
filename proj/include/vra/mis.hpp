#pragma once

#include <utility>
#include <vector>

#include "vra/core.hpp"

namespace vra {

struct Graph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;

    int degree(int v) const;
};

bool is_connected(const Graph& g);

// Exhaustive vertex-subset search; the independent route the reduction is
// checked against.
int max_independent_set_size(const Graph& g);

// Lemma-style restriction: safety slice only, one receiver, one frequency,
// OMA, unit power and noise, horizon = |E|. The channel coefficient between
// vehicle v and the receiver at slot t is 1 iff edge t is incident to v, and
// each safety requirement equals the vertex degree in per-slot bit units.
// Requires at least one edge and no isolated vertices.
VraInstance mis_reduce(const Graph& g);

// All connected graphs with 2..max_vertices vertices, one representative per
// isomorphism class.
std::vector<Graph> connected_graphs(int max_vertices);

}  // namespace vra
