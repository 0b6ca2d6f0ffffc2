#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atfbox/boxrep.hpp"
#include "atfbox/graph.hpp"
#include "atfbox/triangulate.hpp"

namespace atfbox {

// One applicable cubicity bound. Tags:
//   theorem17     cub <= box_upper * (ceil(log2 psi) + 2)   (any AT-free graph)
//   corollary18   cub <= 2*ceil(log2 psi) + 4               (girth >= 5 or acyclic)
//   chi_clawfree  cub <= coloring size                      (claw-free)
// ceil(log2 psi) clamps to 0 for psi <= 1.
struct BoundFormula {
    std::string tag;
    int value = 0;
};

struct BoundReport {
    std::string graph6; // graph id
    int psi = 0;
    int box_upper_k = 0;
    BoxMethod box_method = BoxMethod::complete;
    std::vector<BoundFormula> applicable; // every applicable formula
    int cub_upper = 0;                    // tightest applicable value
    std::string cub_tag;

    // exact values, when computed (within oracle caps)
    std::optional<int> exact_box, exact_cub, exact_chord;
    std::string budget_note;
};

// Requires AT-free input. with_exact additionally runs the oracles when the
// caps admit the graph.
BoundReport cub_upper(const Graph& g, bool with_exact = false);

struct ExactResult {
    std::optional<int> value;   // nullopt = exceeds kmax
    std::vector<Graph> factors; // witness factors when value is set and > 0
    std::string note;           // search budget note
};

// Exact intersection-dimension oracles. Each non-edge is assigned a witness
// dimension (absent there, present in all others); factors are checked
// against the class predicate, and any returned witness is re-verified.
ExactResult exact_boxicity(const Graph& g, int kmax = 3);  // n <= 8
ExactResult exact_cubicity(const Graph& g, int kmax = 3);  // n <= 7
ExactResult exact_chordality(const Graph& g, int kmax = 3); // n <= 8

struct ClawProbeResult {
    int psi_g = 0;
    int psi_h = 0;
    FillSet fill; // fill.result is the minimal triangulation H'
};

// psi comparison across a minimal triangulation (from the first split
// supergraph of a heuristic coloring). Requires AT-free input; callers assert
// psi_h <= psi_g.
ClawProbeResult triangulation_claw_probe(const Graph& g);

} // namespace atfbox
