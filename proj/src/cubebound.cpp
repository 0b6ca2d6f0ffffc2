#include "atfbox/cubebound.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "atfbox/errors.hpp"
#include "atfbox/triangulate.hpp"

namespace atfbox {

namespace small {

// Dense mask adjacency for the n <= 8 oracle search. adj[v] is the neighbor
// bitmask of v; self bits stay clear.
struct MaskGraph {
    int n = 0;
    std::array<std::uint16_t, 8> adj{};

    static MaskGraph complete(int n) {
        MaskGraph g;
        g.n = n;
        std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1);
        for (int v = 0; v < n; ++v) g.adj[v] = full & ~static_cast<std::uint16_t>(1u << v);
        return g;
    }
    static MaskGraph from(const Graph& g) {
        MaskGraph m;
        m.n = g.n();
        for (auto [u, v] : g.edges()) {
            m.adj[u] |= static_cast<std::uint16_t>(1u << v);
            m.adj[v] |= static_cast<std::uint16_t>(1u << u);
        }
        return m;
    }
    bool has(int u, int v) const { return adj[u] >> v & 1; }
    void remove(int u, int v) {
        adj[u] &= ~static_cast<std::uint16_t>(1u << v);
        adj[v] &= ~static_cast<std::uint16_t>(1u << u);
    }
    void add(int u, int v) {
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    Graph to_graph() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has(u, v)) e.emplace_back(u, v);
        return Graph(n, e);
    }
};

bool chordal(const MaskGraph& g) {
    const int n = g.n;
    std::array<int, 8> weight{};
    std::array<int, 8> visit{};
    std::uint16_t used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1) && (best < 0 || weight[v] > weight[best])) best = v;
        used |= static_cast<std::uint16_t>(1u << best);
        visit[step] = best;
        std::uint16_t nb = g.adj[best] & ~used;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            ++weight[w];
        }
    }
    std::array<int, 8> pos{};
    for (int i = 0; i < n; ++i) pos[visit[n - 1 - i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = visit[n - 1 - i];
        std::uint16_t later = 0;
        std::uint16_t nb = g.adj[v];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            if (pos[w] > i) later |= static_cast<std::uint16_t>(1u << w);
        }
        if (!later) continue;
        int parent = -1;
        std::uint16_t l = later;
        while (l) {
            int w = std::countr_zero(l);
            l &= static_cast<std::uint16_t>(l - 1);
            if (parent < 0 || pos[w] < pos[parent]) parent = w;
        }
        std::uint16_t rest = later & ~static_cast<std::uint16_t>(1u << parent);
        if (rest & ~g.adj[parent]) return false;
    }
    return true;
}

bool at_free(const MaskGraph& g) {
    const int n = g.n;
    // component id of each vertex in G minus N[v], per v
    std::array<std::array<int, 8>, 8> comp;
    for (int v = 0; v < n; ++v) {
        comp[v].fill(-1);
        std::uint16_t alive =
            static_cast<std::uint16_t>(((1u << n) - 1) & ~(g.adj[v] | (1u << v)));
        int cid = 0;
        std::uint16_t left = alive;
        while (left) {
            int s = std::countr_zero(left);
            std::uint16_t stack = static_cast<std::uint16_t>(1u << s);
            std::uint16_t seen = 0;
            while (stack) {
                int x = std::countr_zero(stack);
                stack &= static_cast<std::uint16_t>(stack - 1);
                if (seen >> x & 1) continue;
                seen |= static_cast<std::uint16_t>(1u << x);
                comp[v][x] = cid;
                stack |= static_cast<std::uint16_t>(g.adj[x] & alive & ~seen);
            }
            left &= static_cast<std::uint16_t>(~seen);
            ++cid;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has(a, c) || g.has(b, c)) continue;
                if (comp[c][a] >= 0 && comp[c][a] == comp[c][b] && comp[b][a] >= 0 &&
                    comp[b][a] == comp[b][c] && comp[a][b] >= 0 && comp[a][b] == comp[a][c])
                    return false;
            }
        }
    return true;
}

bool claw_free(const MaskGraph& g) {
    for (int v = 0; v < g.n; ++v) {
        std::uint16_t nb = g.adj[v];
        for (int x = 0; x < g.n; ++x) {
            if (!(nb >> x & 1)) continue;
            for (int y = x + 1; y < g.n; ++y) {
                if (!(nb >> y & 1) || g.has(x, y)) continue;
                for (int z = y + 1; z < g.n; ++z)
                    if ((nb >> z & 1) && !g.has(x, z) && !g.has(y, z)) return false;
            }
        }
    }
    return true;
}

bool interval(const MaskGraph& g) { return chordal(g) && at_free(g); }
bool unit_interval(const MaskGraph& g) { return interval(g) && claw_free(g); }

} // namespace small

namespace {

enum class FactorClass { interval, unit_interval, chordal };

bool factor_ok(const small::MaskGraph& g, FactorClass fc) {
    switch (fc) {
        case FactorClass::interval: return small::interval(g);
        case FactorClass::unit_interval: return small::unit_interval(g);
        case FactorClass::chordal: return small::chordal(g);
    }
    return false;
}

bool class_ok(const Graph& g, FactorClass fc) {
    switch (fc) {
        case FactorClass::interval: return is_interval(g);
        case FactorClass::unit_interval: return is_unit_interval(g);
        case FactorClass::chordal: return is_chordal(g).chordal;
    }
    return false;
}

// DFS over witness-dimension assignments: every non-edge is removed from
// exactly one factor. Symmetry broken by only opening dimension j after
// dimensions < j are in use. A 4-cycle of G-edges whose both chords are
// already killed in the same factor prunes the branch (the hole survives to
// the leaf no matter what later assignments do).
struct AssignmentSearch {
    const Graph& g;
    FactorClass fc;
    int k;
    std::vector<std::pair<int, int>> nonedges;
    std::vector<small::MaskGraph> factors;

    AssignmentSearch(const Graph& graph, FactorClass cls, int dims)
        : g(graph), fc(cls), k(dims) {
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (!g.adj(u, v)) nonedges.emplace_back(u, v);
        factors.assign(k, small::MaskGraph::complete(g.n()));
    }

    bool creates_killed_c4(int j, int u, int v) const {
        const auto& f = factors[j];
        for (int x : g.neighbors(u)) {
            if (!g.adj(x, v)) continue;
            for (int y : g.neighbors(u)) {
                if (y <= x || !g.adj(y, v)) continue;
                // u-x-v-y is a 4-cycle of G-edges; both chords dead in j?
                if (!g.adj(x, y) && !f.has(x, y)) return true;
            }
        }
        return false;
    }

    bool run(std::size_t idx, int used) {
        if (idx == nonedges.size()) {
            for (const auto& f : factors)
                if (!factor_ok(f, fc)) return false;
            return true;
        }
        auto [u, v] = nonedges[idx];
        int open = std::min(used + 1, k);
        for (int j = 0; j < open; ++j) {
            factors[j].remove(u, v);
            if (!creates_killed_c4(j, u, v) && run(idx + 1, std::max(used, j + 1))) return true;
            factors[j].add(u, v);
        }
        return false;
    }
};

ExactResult exact_dimension(const Graph& g, int kmax, FactorClass fc, int ncap,
                            const char* opname) {
    if (g.n() > ncap)
        throw cap_error(std::string(opname) + ": exact search capped at n <= " +
                        std::to_string(ncap) + " (got n = " + std::to_string(g.n()) + ")");
    if (kmax < 0 || kmax > 3)
        throw cap_error(std::string(opname) + ": kmax capped at 3");

    ExactResult res;
    res.note = std::string("exhaustive witness-assignment search, n <= ") +
               std::to_string(ncap) + ", kmax = " + std::to_string(kmax);
    if (g.is_complete()) {
        res.value = 0;
        return res;
    }
    if (kmax >= 1 && class_ok(g, fc)) {
        res.value = 1;
        res.factors = {g};
        return res;
    }
    for (int k = 2; k <= kmax; ++k) {
        AssignmentSearch search(g, fc, k);
        if (search.run(0, 0)) {
            res.value = k;
            for (const auto& f : search.factors) res.factors.push_back(f.to_graph());
            // soundness: factors must intersect exactly to G and pass the
            // class predicate on the main (unmasked) path
            for (const auto& f : res.factors)
                if (!class_ok(f, fc))
                    throw internal_error(std::string(opname) + ": witness factor fails predicate");
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v) {
                    bool all = true;
                    for (const auto& f : res.factors) all = all && f.adj(u, v);
                    if (all != g.adj(u, v))
                        throw internal_error(std::string(opname) +
                                             ": witness factors do not intersect to G");
                }
            return res;
        }
    }
    return res; // value empty: exceeds kmax
}

int ceil_log2_clamped(int psi) {
    if (psi <= 1) return 0;
    int l = 0;
    while ((1 << l) < psi) ++l;
    return l;
}

} // namespace

ExactResult exact_boxicity(const Graph& g, int kmax) {
    return exact_dimension(g, kmax, FactorClass::interval, 8, "exact_boxicity");
}

ExactResult exact_cubicity(const Graph& g, int kmax) {
    return exact_dimension(g, kmax, FactorClass::unit_interval, 7, "exact_cubicity");
}

ExactResult exact_chordality(const Graph& g, int kmax) {
    return exact_dimension(g, kmax, FactorClass::chordal, 8, "exact_chordality");
}

BoundReport cub_upper(const Graph& g, bool with_exact) {
    BoundReport rep;
    rep.graph6 = graph6_encode(g);

    auto box = box_upper(g); // raises precondition_error when not AT-free
    rep.box_upper_k = box.k;
    rep.box_method = box.method;
    rep.psi = claw_number(g).psi;

    const int logterm = ceil_log2_clamped(rep.psi);
    rep.applicable.push_back({"theorem17", rep.box_upper_k * (logterm + 2)});
    if (girth_at_least(g, 5)) rep.applicable.push_back({"corollary18", 2 * logterm + 4});
    if (rep.psi <= 2) {
        Coloring c = color(g, ColorMode::heuristic);
        rep.applicable.push_back({"chi_clawfree", c.k});
    }
    const BoundFormula* best = &rep.applicable.front();
    for (const auto& f : rep.applicable)
        if (f.value < best->value) best = &f;
    rep.cub_upper = best->value;
    rep.cub_tag = best->tag;

    if (with_exact) {
        rep.budget_note = "oracle caps: box/chord n <= 8, cub n <= 7, kmax 3";
        if (g.n() <= 8) rep.exact_box = exact_boxicity(g).value;
        if (g.n() <= 7) rep.exact_cub = exact_cubicity(g).value;
        if (g.n() <= 8) rep.exact_chord = exact_chordality(g).value;
    }
    return rep;
}

ClawProbeResult triangulation_claw_probe(const Graph& g) {
    if (auto at = find_asteroidal_triple(g))
        throw precondition_error("triangulation_claw_probe: graph has asteroidal triple {" +
                                 std::to_string((*at)[0]) + "," + std::to_string((*at)[1]) + "," +
                                 std::to_string((*at)[2]) + "}");
    Coloring c = color(g, ColorMode::heuristic);
    Graph h0 = split_supergraph(g, c, 0);
    ClawProbeResult res;
    res.fill = minimize_triangulation(g, h0);
    res.psi_g = claw_number(g).psi;
    res.psi_h = claw_number(res.fill.result).psi;
    return res;
}

} // namespace atfbox
