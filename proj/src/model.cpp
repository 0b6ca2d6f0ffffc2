#include "atfbox/model.hpp"

#include <algorithm>
#include <numeric>

#include "atfbox/errors.hpp"

namespace atfbox {

std::string BoxViolation::str() const {
    std::string s = missing_edge ? "missing edge (" : "unkilled non-edge (";
    s += std::to_string(u) + "," + std::to_string(v) + ") dims[";
    for (std::size_t i = 0; i < meets.size(); ++i) s += meets[i] ? '1' : '0';
    s += "]";
    return s;
}

VerifyResult verify(const Graph& g, const BoxRepresentation& rep) {
    if (rep.n != g.n())
        throw std::invalid_argument("verify: representation n does not match graph");
    for (const auto& d : rep.dims)
        if (d.n() != g.n())
            throw std::invalid_argument("verify: dimension with wrong vertex count");

    VerifyResult res;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            std::vector<bool> meets(rep.dims.size(), false);
            bool all = true;
            for (std::size_t j = 0; j < rep.dims.size(); ++j) {
                meets[j] = IntervalQ::intersects(rep.dims[j].intervals[u], rep.dims[j].intervals[v]);
                all = all && meets[j];
            }
            if (g.adj(u, v) != all)
                res.violations.push_back({u, v, g.adj(u, v), std::move(meets)});
        }
    }
    return res;
}

Graph model_graph(const IntervalModel& model) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < model.n(); ++u)
        for (int v = u + 1; v < model.n(); ++v)
            if (IntervalQ::intersects(model.intervals[u], model.intervals[v]))
                e.emplace_back(u, v);
    return Graph(model.n(), e);
}

ClawNumberResult claw_number(const Graph& g, const IntervalModel& model) {
    if (model.n() != g.n())
        throw std::invalid_argument("claw_number: model size mismatch");
    ClawNumberResult res;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        if (static_cast<int>(nb.size()) <= res.psi) continue;
        // MIS of an interval graph: sweep neighbors by right endpoint, greedily
        // keeping every interval that starts after the last kept endpoint.
        std::vector<int> order(nb.begin(), nb.end());
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (model.intervals[a].hi == model.intervals[b].hi) return a < b;
            return model.intervals[a].hi < model.intervals[b].hi;
        });
        std::vector<int> picked;
        for (int w : order)
            if (picked.empty() || model.intervals[picked.back()].hi < model.intervals[w].lo)
                picked.push_back(w);
        if (static_cast<int>(picked.size()) > res.psi) {
            res.psi = static_cast<int>(picked.size());
            std::sort(picked.begin(), picked.end());
            res.witness = ClawWitness{v, picked};
        }
    }
    if (res.psi == 0) res.witness.reset();
    return res;
}

nlohmann::json representation_to_json(const Graph& g, const BoxRepresentation& rep) {
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& d : rep.dims) {
        nlohmann::json vec = nlohmann::json::array();
        for (const auto& iv : d.intervals)
            vec.push_back({{iv.lo.num, iv.lo.den}, {iv.hi.num, iv.hi.den}});
        dims.push_back(std::move(vec));
    }
    return nlohmann::json{{"n", rep.n},
                          {"dims", rep.dim_count()},
                          {"intervals", std::move(dims)},
                          {"method", rep.method},
                          {"graph6", graph6_encode(g)}};
}

LoadedRepresentation representation_from_json(const nlohmann::json& j) {
    try {
        LoadedRepresentation out;
        out.rep.n = j.at("n").get<int>();
        out.rep.method = j.value("method", "");
        out.graph6 = j.at("graph6").get<std::string>();
        int dims = j.at("dims").get<int>();
        const auto& arr = j.at("intervals");
        if (!arr.is_array() || static_cast<int>(arr.size()) != dims)
            throw parse_error("representation: dims does not match intervals array");
        for (const auto& dim : arr) {
            IntervalModel m;
            if (!dim.is_array() || static_cast<int>(dim.size()) != out.rep.n)
                throw parse_error("representation: dimension with wrong vertex count");
            for (const auto& iv : dim) {
                if (!iv.is_array() || iv.size() != 2 || iv[0].size() != 2 || iv[1].size() != 2)
                    throw parse_error("representation: interval must be [[num,den],[num,den]]");
                Rational lo(iv[0][0].get<std::int64_t>(), iv[0][1].get<std::int64_t>());
                Rational hi(iv[1][0].get<std::int64_t>(), iv[1][1].get<std::int64_t>());
                if (hi < lo) throw parse_error("representation: interval with hi < lo");
                m.intervals.emplace_back(lo, hi);
            }
            out.rep.dims.push_back(std::move(m));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("representation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("representation: ") + e.what());
    }
}

} // namespace atfbox
