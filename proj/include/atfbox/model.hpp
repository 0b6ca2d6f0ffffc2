#pragma once

#include <string>
#include <vector>

#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/rational.hpp"

#include <json.hpp>

namespace atfbox {

// One box dimension: a closed interval per vertex.
struct IntervalModel {
    std::vector<IntervalQ> intervals;

    int n() const { return static_cast<int>(intervals.size()); }
    friend bool operator==(const IntervalModel&, const IntervalModel&) = default;
};

// Ordered list of interval models. Semantics: (u,v) is an edge iff the
// intervals of u and v intersect in every dimension. Zero dimensions
// represent exactly the complete graph.
struct BoxRepresentation {
    int n = 0;
    std::vector<IntervalModel> dims;
    std::string method;

    int dim_count() const { return static_cast<int>(dims.size()); }
};

struct BoxViolation {
    int u = -1, v = -1;
    bool missing_edge = false;  // true: edge of G fails in some dimension;
                                // false: non-edge intersects everywhere
    std::vector<bool> meets;    // per-dimension intersection pattern
    std::string str() const;
};

struct VerifyResult {
    std::vector<BoxViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Exact pairwise check of the representation semantics against G.
// Sizes must match; all comparisons rational-exact.
VerifyResult verify(const Graph& g, const BoxRepresentation& rep);

// Intersection graph of a single dimension.
Graph model_graph(const IntervalModel& model);

// Polynomial claw number via an interval model of G: per-neighborhood MIS by
// right-endpoint greedy. Model must represent G exactly.
ClawNumberResult claw_number(const Graph& g, const IntervalModel& model);

// --- representation file schema ---------------------------------------------
// {"n": int, "dims": int, "intervals": [[[num,den],[num,den]], ...] per
//  dimension per vertex, "method": string, "graph6": string}

nlohmann::json representation_to_json(const Graph& g, const BoxRepresentation& rep);

struct LoadedRepresentation {
    BoxRepresentation rep;
    std::string graph6; // as recorded in the file
};

LoadedRepresentation representation_from_json(const nlohmann::json& j);

} // namespace atfbox
