#pragma once

#include <utility>
#include <vector>

#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/model.hpp"

namespace atfbox {

// A chordal supergraph result = base + fill, with fill disjoint from E(base).
struct FillSet {
    Graph base;
    std::vector<std::pair<int, int>> fill;
    Graph result;
};

// Split supergraph H_i for color class i: class i stays independent with its
// G-edges to the rest; all pairs outside class i become a clique. H_i is a
// split graph, hence chordal.
Graph split_supergraph(const Graph& g, const Coloring& c, int class_index);

// Shrinks chordal H (supergraph of g) to a minimal triangulation of g by
// removing fill edges in lexicographic order, rescanning to fixpoint.
FillSet minimize_triangulation(const Graph& g, const Graph& h);

// True iff h is chordal and no fill edge can be dropped keeping chordality.
// Checked both by the unique-chord criterion and a direct removal probe;
// disagreement raises internal_error.
bool is_minimal_triangulation(const Graph& g, const Graph& h);

// Exactly the maximal cliques of a chordal graph, each once, from a perfect
// elimination ordering. Sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& h);

// Ordering of the maximal cliques in which every vertex's cliques are
// consecutive. Exists iff h is interval.
struct CliquePath {
    std::vector<std::vector<int>> cliques;
};

CliquePath clique_path_order(const Graph& h);

// v -> [first clique position containing v, last position], 1-based integer
// endpoints. The model's intersection graph equals h exactly.
IntervalModel interval_model(const Graph& h);

} // namespace atfbox
