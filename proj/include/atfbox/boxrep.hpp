#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/model.hpp"

namespace atfbox {

// Structure of a connected AT-free graph of girth >= 5 around a diametral
// dominating path u_1..u_t: every off-path vertex sits in exactly one class
// S_i (its unique path neighbor is u_i), off-path edges only join S_i to
// S_{i+2}, at most one such edge per class pair, and each class holds at most
// two non-pendant vertices.
struct DominatingPathDecomposition {
    std::vector<int> path;                  // u_1..u_t
    std::vector<std::vector<int>> classes;  // classes[i] = S_i, i in 1..t; index 0 unused
    std::vector<int> class_of;              // per vertex: 1..t, or 0 for path vertices
    std::vector<char> nonpendant;           // per vertex; off-path vertices only
    std::vector<char> has_left;             // neighbor in S_{i-2}
    std::vector<char> has_right;            // neighbor in S_{i+2}

    int t() const { return static_cast<int>(path.size()); }
};

struct DecompViolation {
    std::string lemma;         // which structural clause failed
    std::vector<int> vertices; // involved vertices
    std::string detail;
    std::string str() const;
};

// Requires connected, AT-free, girth >= 5 or acyclic. Every structural lemma
// is asserted via validate(); a violation raises internal_error naming it.
DominatingPathDecomposition decompose(const Graph& g);

// Checks every clause of the decomposition structure; violations are data.
std::vector<DecompViolation> validate(const DominatingPathDecomposition& d, const Graph& g);

// Two-dimensional construction for AT-free graphs of girth >= 5 (or acyclic).
// Dimension 1 spreads vertices along the dominating path; dimension 2
// separates path/pendant/non-pendant layers by parity. Disconnected inputs
// are handled per component with dimension-1 offsets. Output always verifies.
BoxRepresentation girth5_boxrep(const Graph& g);

// chi-pipeline: one dimension per color class, each the interval model of a
// minimal triangulation of the class's split supergraph. Works for any proper
// coloring of an AT-free graph; emits exactly c.k dimensions.
BoxRepresentation chromatic_boxrep(const Graph& g, const Coloring& c);

enum class BoxMethod { complete, interval, girth5, coloring };

const char* box_method_name(BoxMethod m);

struct BoxUpperResult {
    int k = 0;
    BoxMethod method = BoxMethod::complete;
    BoxRepresentation rep; // constructive witness (empty dims for complete)
};

// Constructive upper bound with witness; auto picks
// complete(0) > interval(1) > girth5(2) > coloring(k).
// `force` restricts the method (girth5 or coloring only).
BoxUpperResult box_upper(const Graph& g, std::optional<BoxMethod> force = std::nullopt);

} // namespace atfbox
