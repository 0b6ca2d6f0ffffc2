#pragma once

#include <array>
#include <optional>
#include <vector>

#include "atfbox/graph.hpp"

namespace atfbox {

// Proper vertex coloring with color indices 0..k-1, each used at least once.
struct Coloring {
    std::vector<int> colors;
    int k = 0;
};

// order[0] is eliminated first. When produced by is_chordal on a chordal
// graph, every vertex's later neighbors form a clique.
struct EliminationOrdering {
    std::vector<int> order;
};

// Induced star S(|leaves|): center adjacent to all leaves, leaves pairwise
// non-adjacent.
struct ClawWitness {
    int center = -1;
    std::vector<int> leaves;
};

struct ChordalityResult {
    bool chordal = false;
    EliminationOrdering peo; // valid iff chordal
    std::vector<int> hole;   // chordless cycle of length >= 4 iff not chordal
};

// Maximum-cardinality search plus perfect-elimination check; on failure a
// chordless cycle witness is extracted.
ChordalityResult is_chordal(const Graph& g);

// First (lexicographically) independent triple {a,b,c} such that each pair is
// connected in G minus the closed neighborhood of the third; nullopt iff
// AT-free.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);
bool is_at_free(const Graph& g);

// True iff every x-y path dominates G. Requires connected G and x != y.
bool is_dominating_pair(const Graph& g, int x, int y);

struct DominatingPairResult {
    int x = -1, y = -1;
    std::vector<int> path; // one shortest x-y path
};

// A dominating pair at distance = diameter(G). Exists for every connected
// AT-free graph; failure to find one raises precondition_error.
DominatingPairResult diametral_dominating_pair(const Graph& g);

struct ClawNumberResult {
    int psi = 0;
    std::optional<ClawWitness> witness; // present iff psi >= 1
};

// psi(G) = max over v of the maximum independent set of G[N(v)]; 0 for
// edgeless graphs. Exact exponential MIS per neighborhood, capped at 64
// neighbors.
ClawNumberResult claw_number(const Graph& g);

enum class ColorMode { heuristic, exact };

// heuristic: degree-saturation greedy. exact: branch and bound, k = chi(G),
// allowed only for n <= limit.
Coloring color(const Graph& g, ColorMode mode, int limit = 16);
bool is_proper(const Graph& g, const Coloring& c);

// Lekkerkerker-Boland: interval = chordal and AT-free.
bool is_interval(const Graph& g);
// Unit interval = interval and claw-free (psi <= 2).
bool is_unit_interval(const Graph& g);

} // namespace atfbox
