#include "atfbox/boxrep.hpp"

#include <algorithm>

#include "atfbox/errors.hpp"
#include "atfbox/triangulate.hpp"

namespace atfbox {

std::string DecompViolation::str() const {
    std::string s = lemma + " {";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices[i]);
    }
    s += "}";
    if (!detail.empty()) s += " " + detail;
    return s;
}

DominatingPathDecomposition decompose(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("decompose: graph must be connected");
    if (!girth_at_least(g, 5)) throw precondition_error("decompose: girth must be >= 5 (or acyclic)");
    if (auto at = find_asteroidal_triple(g))
        throw precondition_error("decompose: graph has asteroidal triple {" +
                                 std::to_string((*at)[0]) + "," + std::to_string((*at)[1]) + "," +
                                 std::to_string((*at)[2]) + "}");

    DominatingPathDecomposition d;
    const int n = g.n();
    d.class_of.assign(n, 0);
    d.nonpendant.assign(n, 0);
    d.has_left.assign(n, 0);
    d.has_right.assign(n, 0);

    auto pair = diametral_dominating_pair(g);
    d.path = pair.path;
    const int t = d.t();
    d.classes.assign(t + 1, {});

    std::vector<int> pos_on_path(n, 0); // 1..t, 0 = off path
    for (int i = 0; i < t; ++i) pos_on_path[d.path[i]] = i + 1;

    for (int v = 0; v < n; ++v) {
        if (pos_on_path[v]) continue;
        int attach = 0, count = 0;
        for (int w : g.neighbors(v))
            if (pos_on_path[w]) {
                attach = pos_on_path[w];
                ++count;
            }
        if (count != 1)
            throw internal_error("decompose: |N(v) ∩ V(P)| = " + std::to_string(count) +
                                 " for vertex " + std::to_string(v) + ", expected 1");
        d.class_of[v] = attach;
        d.classes[attach].push_back(v);
    }
    for (auto& cls : d.classes) std::sort(cls.begin(), cls.end());

    for (int v = 0; v < n; ++v) {
        if (!d.class_of[v]) continue;
        int i = d.class_of[v];
        for (int w : g.neighbors(v)) {
            if (pos_on_path[w] || w == v) continue;
            d.nonpendant[v] = 1;
            int j = d.class_of[w];
            if (j == i - 2) d.has_left[v] = 1;
            if (j == i + 2) d.has_right[v] = 1;
        }
        if (d.nonpendant[v] && !d.has_left[v] && !d.has_right[v])
            throw internal_error("decompose: non-pendant vertex " + std::to_string(v) +
                                 " has no S_{i±2} neighbor");
    }

    auto violations = validate(d, g);
    if (!violations.empty())
        throw internal_error("decompose: structural lemma violated: " + violations.front().str());
    return d;
}

std::vector<DecompViolation> validate(const DominatingPathDecomposition& d, const Graph& g) {
    std::vector<DecompViolation> out;
    const int n = g.n();
    const int t = d.t();

    // path shape: consecutive vertices adjacent, a shortest diametral path,
    // and a dominating pair
    if (t == 0) {
        out.push_back({"path", {}, "empty path"});
        return out;
    }
    for (int i = 0; i + 1 < t; ++i)
        if (!g.adj(d.path[i], d.path[i + 1]))
            out.push_back({"path", {d.path[i], d.path[i + 1]}, "consecutive path vertices not adjacent"});
    if (is_connected(g)) {
        int diam = 0;
        for (int v = 0; v < n; ++v) {
            auto dist = bfs_layers(g, v);
            diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
        }
        auto dist = bfs_layers(g, d.path.front());
        if (dist[d.path.back()] != t - 1)
            out.push_back({"path", {d.path.front(), d.path.back()}, "path is not shortest"});
        if (t - 1 != diam)
            out.push_back({"path", {d.path.front(), d.path.back()},
                           "distance(x,y) = diameter(G) fails"});
        if (t >= 2 && !is_dominating_pair(g, d.path.front(), d.path.back()))
            out.push_back({"dominating pair", {d.path.front(), d.path.back()},
                           "(x,y) is not a dominating pair"});
    } else {
        out.push_back({"path", {}, "graph disconnected"});
    }

    // classes partition the off-path vertices; the unique path neighbor of
    // v in S_i is u_i
    std::vector<int> pos_on_path(n, 0);
    for (int i = 0; i < t; ++i) pos_on_path[d.path[i]] = i + 1;
    for (int v = 0; v < n; ++v) {
        if (pos_on_path[v]) {
            if (d.class_of[v] != 0)
                out.push_back({"partition", {v}, "path vertex assigned to a class"});
            continue;
        }
        int i = d.class_of[v];
        if (i < 1 || i > t) {
            out.push_back({"partition", {v}, "off-path vertex missing class"});
            continue;
        }
        int count = 0;
        bool hits_ui = false;
        for (int w : g.neighbors(v))
            if (pos_on_path[w]) {
                ++count;
                if (pos_on_path[w] == i) hits_ui = true;
            }
        if (count != 1 || !hits_ui)
            out.push_back({"|N_G(v) ∩ V(P)| = 1", {v},
                           "path neighbors = " + std::to_string(count)});
    }

    // class membership lists agree with class_of
    for (int i = 1; i <= t && i < static_cast<int>(d.classes.size()); ++i)
        for (int v : d.classes[i])
            if (d.class_of[v] != i)
                out.push_back({"partition", {v}, "classes[] and class_of disagree"});

    // adjacency clauses between classes
    for (int v = 0; v < n; ++v) {
        int i = d.class_of[v];
        if (!i) continue;
        int fwd2 = 0, back2 = 0;
        for (int w : g.neighbors(v)) {
            int j = d.class_of[w];
            if (!j) continue;
            if (j == i)
                out.push_back({"Lemma part (1): |N_G(v) ∩ S_i| = 0", {v, w}, ""});
            else if (j == i + 1 || j == i - 1)
                out.push_back({"Lemma part (2): |N_G(v) ∩ S_{i+1}| = 0", {v, w}, ""});
            else if (j == i + 2)
                ++fwd2;
            else if (j == i - 2)
                ++back2;
            else
                out.push_back({"Lemma part (4): |N_G(v) ∩ S_j| = 0 for |j-i| >= 3", {v, w}, ""});
        }
        if (fwd2 > 1)
            out.push_back({"Lemma part (3): |N_G(v) ∩ S_{i+2}| <= 1", {v}, ""});
        if (back2 > 1)
            out.push_back({"Lemma part (3): |N_G(v) ∩ S_{i-2}| <= 1", {v}, ""});
    }

    // at most one edge between S_i and S_{i+2}
    for (int i = 1; i + 2 <= t; ++i) {
        if (i + 2 >= static_cast<int>(d.classes.size())) break;
        std::vector<std::pair<int, int>> cross;
        for (int u : d.classes[i])
            for (int w : d.classes[i + 2])
                if (g.adj(u, w)) cross.emplace_back(u, w);
        if (cross.size() > 1)
            out.push_back({"Lemma: (p,q) ∉ E(G) — one edge per (S_i, S_{i+2})",
                           {cross[0].first, cross[0].second, cross[1].first, cross[1].second},
                           ""});
    }

    // pendant flags and side flags agree with actual adjacency
    for (int v = 0; v < n; ++v) {
        int i = d.class_of[v];
        if (!i) continue;
        bool left = false, right = false, off = false;
        for (int w : g.neighbors(v)) {
            int j = d.class_of[w];
            if (!j) continue;
            off = true;
            if (j == i - 2) left = true;
            if (j == i + 2) right = true;
        }
        if (static_cast<bool>(d.nonpendant[v]) != off)
            out.push_back({"pendant flag", {v}, "nonpendant flag disagrees with adjacency"});
        if (static_cast<bool>(d.has_left[v]) != left || static_cast<bool>(d.has_right[v]) != right)
            out.push_back({"side flags", {v}, "side flags disagree with adjacency"});
        if (off && !left && !right)
            out.push_back({"non-pendant side", {v}, "non-pendant vertex with no S_{i±2} neighbor"});
    }

    // at most two non-pendant vertices per class, with opposite sides
    for (int i = 1; i <= t && i < static_cast<int>(d.classes.size()); ++i) {
        std::vector<int> np;
        for (int v : d.classes[i])
            if (d.nonpendant[v]) np.push_back(v);
        if (np.size() > 2) {
            out.push_back({"Lemma: at most 2 non-pendant vertices", np, ""});
        } else if (np.size() == 2) {
            int u = np[0], v = np[1];
            bool ok = (d.has_left[u] && !d.has_right[u] && d.has_right[v] && !d.has_left[v]) ||
                      (d.has_right[u] && !d.has_left[u] && d.has_left[v] && !d.has_right[v]);
            if (!ok)
                out.push_back({"Observation: two non-pendants take opposite sides", {u, v}, ""});
        }
    }
    return out;
}

namespace {

// g1/g2 interval assignment for one connected component, written into the
// global models with the component's dimension-1 shift.
void build_component(const Graph& g, const std::vector<int>& comp_verts, int comp_index,
                     int global_n, IntervalModel& dim1, IntervalModel& dim2) {
    Graph sub = g.induced(comp_verts);
    DominatingPathDecomposition d = decompose(sub);
    const int t = d.t();
    const Rational shift(static_cast<std::int64_t>(comp_index) * (global_n + 4));
    const std::int64_t two_n = 2 * static_cast<std::int64_t>(global_n);

    auto place = [&](int local_v, Rational lo1, Rational hi1, Rational lo2, Rational hi2) {
        int v = comp_verts[local_v];
        dim1.intervals[v] = IntervalQ{lo1 + shift, hi1 + shift};
        dim2.intervals[v] = IntervalQ{lo2, hi2};
    };

    for (int i = 1; i <= t; ++i) {
        int u = d.path[i - 1];
        Rational lo2 = (i % 2 == 1) ? Rational(1) : Rational(2);
        place(u, Rational(i), Rational(i + 1), lo2, lo2 + Rational(1));
    }
    for (int i = 1; i <= t; ++i) {
        int j = 0; // 1-based rank among the pendant members of S_i, by vertex id
        for (int v : d.classes[i]) {
            bool odd = (i % 2 == 1);
            if (!d.nonpendant[v]) {
                ++j;
                Rational lo1 = Rational(i) + Rational(2 * j - 1, two_n);
                Rational hi1 = Rational(i) + Rational(2 * j, two_n);
                Rational lo2 = odd ? Rational(5, 4) : Rational(9, 4);
                Rational hi2 = odd ? Rational(7, 4) : Rational(11, 4);
                place(v, lo1, hi1, lo2, hi2);
            } else {
                Rational lo1, hi1;
                if (d.has_left[v] && d.has_right[v]) {
                    lo1 = Rational(2 * i - 1, 2); // i - 1/2
                    hi1 = Rational(2 * i + 3, 2); // i + 3/2
                } else if (d.has_right[v]) {
                    lo1 = Rational(i + 1);
                    hi1 = Rational(2 * i + 3, 2);
                } else {
                    lo1 = Rational(2 * i - 1, 2);
                    hi1 = Rational(i);
                }
                Rational lo2 = odd ? Rational(0) : Rational(3);
                place(v, lo1, hi1, lo2, lo2 + Rational(1));
            }
        }
    }
}

} // namespace

BoxRepresentation girth5_boxrep(const Graph& g) {
    if (auto at = find_asteroidal_triple(g))
        throw precondition_error("girth5_boxrep: graph has asteroidal triple {" +
                                 std::to_string((*at)[0]) + "," + std::to_string((*at)[1]) + "," +
                                 std::to_string((*at)[2]) + "}");
    if (!girth_at_least(g, 5))
        throw precondition_error("girth5_boxrep: girth must be >= 5 (or acyclic)");

    BoxRepresentation rep;
    rep.n = g.n();
    rep.method = "girth5";
    IntervalModel dim1, dim2;
    dim1.intervals.assign(g.n(), IntervalQ{Rational(0), Rational(0)});
    dim2.intervals.assign(g.n(), IntervalQ{Rational(0), Rational(0)});

    auto comps = connected_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        build_component(g, comps[c], static_cast<int>(c), g.n(), dim1, dim2);

    rep.dims = {std::move(dim1), std::move(dim2)};
    auto check = verify(g, rep);
    if (!check.ok())
        throw internal_error("girth5_boxrep: verification failed: " + check.violations.front().str());
    return rep;
}

BoxRepresentation chromatic_boxrep(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw precondition_error("chromatic_boxrep: coloring is not proper");

    BoxRepresentation rep;
    rep.n = g.n();
    rep.method = "coloring";
    for (int i = 0; i < c.k; ++i) {
        Graph hi = split_supergraph(g, c, i);
        FillSet fs = minimize_triangulation(g, hi);
        if (!is_interval(fs.result))
            throw precondition_error(
                "chromatic_boxrep: minimal triangulation is not interval; by Möhring's theorem "
                "the input cannot be AT-free");
        rep.dims.push_back(interval_model(fs.result));
    }
    auto check = verify(g, rep);
    if (!check.ok())
        throw internal_error("chromatic_boxrep: verification failed: " +
                             check.violations.front().str());
    return rep;
}

const char* box_method_name(BoxMethod m) {
    switch (m) {
        case BoxMethod::complete: return "complete";
        case BoxMethod::interval: return "interval";
        case BoxMethod::girth5: return "girth5";
        case BoxMethod::coloring: return "coloring";
    }
    return "?";
}

BoxUpperResult box_upper(const Graph& g, std::optional<BoxMethod> force) {
    if (auto at = find_asteroidal_triple(g))
        throw precondition_error("box_upper: graph has asteroidal triple {" +
                                 std::to_string((*at)[0]) + "," + std::to_string((*at)[1]) + "," +
                                 std::to_string((*at)[2]) + "}");

    BoxUpperResult res;
    if (force.has_value()) {
        switch (*force) {
            case BoxMethod::girth5:
                res.rep = girth5_boxrep(g);
                res.method = BoxMethod::girth5;
                res.k = 2;
                return res;
            case BoxMethod::coloring: {
                Coloring c = color(g, ColorMode::heuristic);
                res.rep = chromatic_boxrep(g, c);
                res.method = BoxMethod::coloring;
                res.k = c.k;
                return res;
            }
            default:
                throw std::invalid_argument("box_upper: force must be girth5 or coloring");
        }
    }

    if (g.is_complete()) {
        res.k = 0;
        res.method = BoxMethod::complete;
        res.rep.n = g.n();
        res.rep.method = "complete";
        return res;
    }
    if (is_chordal(g).chordal) { // AT-free already checked: chordal => interval
        res.k = 1;
        res.method = BoxMethod::interval;
        res.rep.n = g.n();
        res.rep.method = "interval";
        res.rep.dims = {interval_model(g)};
        auto check = verify(g, res.rep);
        if (!check.ok())
            throw internal_error("box_upper: interval model failed verification");
        return res;
    }
    if (girth_at_least(g, 5)) {
        res.rep = girth5_boxrep(g);
        res.method = BoxMethod::girth5;
        res.k = 2;
        return res;
    }
    Coloring c = color(g, ColorMode::heuristic);
    res.rep = chromatic_boxrep(g, c);
    res.method = BoxMethod::coloring;
    res.k = c.k;
    return res;
}

} // namespace atfbox
