#include "atfbox/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "atfbox/errors.hpp"

namespace atfbox {

namespace {

// Components of G minus the closed neighborhood of v; -1 for removed vertices.
std::vector<int> components_without_closed_nbhd(const Graph& g, int v) {
    std::vector<int> comp(g.n(), -1);
    std::vector<char> removed(g.n(), 0);
    removed[v] = 1;
    for (int w : g.neighbors(v)) removed[w] = 1;
    int cid = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        std::deque<int> q{s};
        comp[s] = cid;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbors(x))
                if (!removed[y] && comp[y] < 0) {
                    comp[y] = cid;
                    q.push_back(y);
                }
        }
        ++cid;
    }
    return comp;
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.n();
    ChordalityResult res;

    // Maximum-cardinality search. visit[] is the visit order; the reverse is
    // the candidate elimination ordering.
    std::vector<int> weight(n, 0), visit;
    std::vector<char> used(n, 0);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (best < 0 || weight[v] > weight[best])) best = v;
        used[best] = 1;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!used[w]) ++weight[w];
    }
    std::vector<int> elim(visit.rbegin(), visit.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;

    // Perfect elimination check via the parent trick: the later neighbors of
    // v, minus the earliest of them, must all be neighbors of that earliest.
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        int v = elim[i];
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbors(v)) {
            if (pos[w] > i && w != parent && !g.adj(parent, w)) {
                ok = false;
                break;
            }
        }
    }
    if (ok) {
        res.chordal = true;
        res.peo.order = std::move(elim);
        return res;
    }

    // Extract a chordless cycle: for a center v with non-adjacent neighbors
    // u,w, a shortest u-w path outside N[v] closes a hole through v.
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                int u = nb[a], w = nb[b];
                if (g.adj(u, w)) continue;
                std::vector<char> blocked(n, 0);
                blocked[v] = 1;
                for (int x : g.neighbors(v)) blocked[x] = 1;
                blocked[u] = blocked[w] = 0;
                std::vector<int> parent(n, -2);
                std::deque<int> q{u};
                parent[u] = -1;
                while (!q.empty() && parent[w] == -2) {
                    int x = q.front();
                    q.pop_front();
                    for (int y : g.neighbors(x))
                        if (!blocked[y] && parent[y] == -2) {
                            parent[y] = x;
                            q.push_back(y);
                        }
                }
                if (parent[w] == -2) continue;
                std::vector<int> cycle{v};
                for (int x = w; x != -1; x = parent[x]) cycle.push_back(x);
                std::reverse(cycle.begin() + 1, cycle.end());
                res.chordal = false;
                res.hole = std::move(cycle);
                return res;
            }
        }
    }
    throw internal_error("is_chordal: PEO check failed but no hole found");
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = components_without_closed_nbhd(g, v);
    auto joined = [&](int x, int y, int z) { // x,y connected avoiding N[z]
        return comp[z][x] >= 0 && comp[z][x] == comp[z][y];
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adj(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.adj(a, c) || g.adj(b, c)) continue;
                if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a))
                    return std::array<int, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

bool is_dominating_pair(const Graph& g, int x, int y) {
    if (x == y) throw precondition_error("is_dominating_pair: x == y");
    if (!is_connected(g)) throw precondition_error("is_dominating_pair: disconnected graph");
    for (int v = 0; v < g.n(); ++v) {
        if (v == x || v == y || g.adj(v, x) || g.adj(v, y)) continue;
        auto comp = components_without_closed_nbhd(g, v);
        if (comp[x] == comp[y]) return false; // an x-y path avoids N[v]
    }
    return true;
}

DominatingPairResult diametral_dominating_pair(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("diametral_dominating_pair: disconnected graph");
    const int n = g.n();
    if (n == 1) return {0, 0, {0}};

    std::vector<std::vector<int>> dist(n);
    int diameter = 0;
    for (int v = 0; v < n; ++v) {
        dist[v] = bfs_layers(g, v);
        diameter = std::max(diameter, *std::max_element(dist[v].begin(), dist[v].end()));
    }
    // Cache the per-vertex component structure once; the pair predicate is a
    // lookup after that.
    std::vector<std::vector<int>> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = components_without_closed_nbhd(g, v);
    auto dominating = [&](int x, int y) {
        for (int v = 0; v < n; ++v) {
            if (v == x || v == y || g.adj(v, x) || g.adj(v, y)) continue;
            if (comp[v][x] == comp[v][y]) return false;
        }
        return true;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (dist[x][y] == diameter && dominating(x, y))
                return {x, y, bfs_path(g, x, y)};
    throw precondition_error(
        "diametral_dominating_pair: no diametral pair dominates (input not AT-free, or bug)");
}

namespace {

// Exact maximum independent set on the masked vertex subset of g.
int mis_size(const Graph& g, const std::vector<int>& verts, std::uint64_t mask,
             std::uint64_t* out_set) {
    if (mask == 0) {
        if (out_set) *out_set = 0;
        return 0;
    }
    int i = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    // exclude verts[i]
    std::uint64_t set_ex = 0;
    int ex = mis_size(g, verts, rest, out_set ? &set_ex : nullptr);
    // include verts[i]
    std::uint64_t keep = rest;
    for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
        if ((keep >> j & 1) && g.adj(verts[i], verts[j])) keep &= ~(1ull << j);
    std::uint64_t set_in = 0;
    int in = 1 + mis_size(g, verts, keep, out_set ? &set_in : nullptr);
    if (in > ex) {
        if (out_set) *out_set = set_in | (1ull << i);
        return in;
    }
    if (out_set) *out_set = set_ex;
    return ex;
}

} // namespace

ClawNumberResult claw_number(const Graph& g) {
    ClawNumberResult res;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        if (static_cast<int>(nb.size()) <= res.psi) continue; // cannot improve
        if (nb.size() > 64) throw cap_error("claw_number: neighborhood larger than 64 vertices");
        std::uint64_t best_set = 0;
        std::uint64_t full = nb.size() == 64 ? ~0ull : (1ull << nb.size()) - 1;
        int s = mis_size(g, nb, full, &best_set);
        if (s > res.psi) {
            res.psi = s;
            ClawWitness w;
            w.center = v;
            for (std::size_t j = 0; j < nb.size(); ++j)
                if (best_set >> j & 1) w.leaves.push_back(nb[j]);
            res.witness = std::move(w);
        }
    }
    if (res.psi == 0) res.witness.reset();
    return res;
}

namespace {

Coloring dsatur(const Graph& g) {
    const int n = g.n();
    Coloring c;
    c.colors.assign(n, -1);
    std::vector<std::vector<char>> sat(n, std::vector<char>(n + 1, 0));
    std::vector<int> satcnt(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (c.colors[v] >= 0) continue;
            if (best < 0 || satcnt[v] > satcnt[best] ||
                (satcnt[v] == satcnt[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        int col = 0;
        while (sat[best][col]) ++col;
        c.colors[best] = col;
        c.k = std::max(c.k, col + 1);
        for (int w : g.neighbors(best))
            if (c.colors[w] < 0 && !sat[w][col]) {
                sat[w][col] = 1;
                ++satcnt[w];
            }
    }
    return c;
}

// Branch and bound for the chromatic number, seeded with the DSATUR bound.
struct ExactColorer {
    const Graph& g;
    int n;
    std::vector<int> best_colors;
    int best_k;
    std::vector<int> cur;

    explicit ExactColorer(const Graph& graph) : g(graph), n(graph.n()) {
        Coloring h = dsatur(g);
        best_colors = h.colors;
        best_k = h.k;
        cur.assign(n, -1);
    }

    void run() { extend(0, 0); }

    void extend(int assigned, int used) {
        if (used >= best_k) return; // cannot beat the incumbent
        if (assigned == n) {
            best_k = used;
            best_colors = cur;
            return;
        }
        // most saturated uncolored vertex next
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (cur[v] >= 0) continue;
            std::uint64_t seen = 0;
            for (int w : g.neighbors(v))
                if (cur[w] >= 0) seen |= 1ull << cur[w];
            int s = std::popcount(seen);
            if (s > pick_sat || (s == pick_sat && pick >= 0 && g.degree(v) > g.degree(pick))) {
                pick = v;
                pick_sat = s;
            }
        }
        for (int col = 0; col <= used && col < best_k - 1; ++col) {
            if (col > used) break;
            bool okc = true;
            for (int w : g.neighbors(pick))
                if (cur[w] == col) {
                    okc = false;
                    break;
                }
            if (!okc) continue;
            cur[pick] = col;
            extend(assigned + 1, std::max(used, col + 1));
            cur[pick] = -1;
        }
    }
};

} // namespace

Coloring color(const Graph& g, ColorMode mode, int limit) {
    if (g.n() == 0) return {{}, 0};
    if (mode == ColorMode::heuristic) return dsatur(g);
    if (g.n() > limit)
        throw cap_error("color: exact mode limited to n <= " + std::to_string(limit) +
                        "; use heuristic mode");
    ExactColorer bb(g);
    bb.run();
    return {bb.best_colors, bb.best_k};
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n()) return false;
    std::vector<char> seen(c.k, 0);
    for (int v = 0; v < g.n(); ++v) {
        if (c.colors[v] < 0 || c.colors[v] >= c.k) return false;
        seen[c.colors[v]] = 1;
    }
    for (int i = 0; i < c.k; ++i)
        if (!seen[i]) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

bool is_interval(const Graph& g) { return is_chordal(g).chordal && is_at_free(g); }

bool is_unit_interval(const Graph& g) { return is_interval(g) && claw_number(g).psi <= 2; }

} // namespace atfbox
