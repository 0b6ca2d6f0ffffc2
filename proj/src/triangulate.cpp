#include "atfbox/triangulate.hpp"

#include <algorithm>
#include <numeric>

#include "atfbox/errors.hpp"

namespace atfbox {

namespace {

// Mutable packed adjacency used only inside the fill-minimization loop, where
// chordality is re-tested after every tentative edge removal.
struct AdjMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit AdjMatrix(const Graph& g) : n(g.n()), words((g.n() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (auto [u, v] : g.edges()) set(u, v, true);
    }
    bool get(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1;
    }
    void set(int u, int v, bool on) {
        auto mask_u = 1ull << (v & 63);
        auto mask_v = 1ull << (u & 63);
        if (on) {
            bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= mask_u;
            bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= mask_v;
        } else {
            bits[static_cast<std::size_t>(u) * words + (v >> 6)] &= ~mask_u;
            bits[static_cast<std::size_t>(v) * words + (u >> 6)] &= ~mask_v;
        }
    }
    Graph to_graph() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (get(u, v)) e.emplace_back(u, v);
        return Graph(n, e);
    }
};

// MCS + perfect elimination check on the packed matrix.
bool chordal(const AdjMatrix& a) {
    const int n = a.n;
    std::vector<int> weight(n, 0), visit;
    std::vector<char> used(n, 0);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (best < 0 || weight[v] > weight[best])) best = v;
        used[best] = 1;
        visit.push_back(best);
        for (int w = 0; w < n; ++w)
            if (!used[w] && a.get(best, w)) ++weight[w];
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[visit[n - 1 - i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = visit[n - 1 - i];
        int parent = -1;
        for (int w = 0; w < n; ++w)
            if (a.get(v, w) && pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w = 0; w < n; ++w)
            if (a.get(v, w) && pos[w] > i && w != parent && !a.get(parent, w)) return false;
    }
    return true;
}

void require_supergraph(const Graph& g, const Graph& h, const char* who) {
    if (g.n() != h.n()) throw precondition_error(std::string(who) + ": vertex sets differ");
    for (auto [u, v] : g.edges())
        if (!h.adj(u, v)) throw precondition_error(std::string(who) + ": not a supergraph");
}

} // namespace

Graph split_supergraph(const Graph& g, const Coloring& c, int class_index) {
    if (!is_proper(g, c)) throw precondition_error("split_supergraph: coloring is not proper");
    if (class_index < 0 || class_index >= c.k)
        throw precondition_error("split_supergraph: class index out of range");
    std::vector<std::pair<int, int>> e = g.edges();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (c.colors[u] != class_index && c.colors[v] != class_index && !g.adj(u, v))
                e.emplace_back(u, v);
    return Graph(g.n(), e);
}

FillSet minimize_triangulation(const Graph& g, const Graph& h) {
    require_supergraph(g, h, "minimize_triangulation");
    AdjMatrix a(h);
    if (!chordal(a)) throw precondition_error("minimize_triangulation: H is not chordal");

    std::vector<std::pair<int, int>> fill;
    for (auto [u, v] : h.edges())
        if (!g.adj(u, v)) fill.emplace_back(u, v);
    std::sort(fill.begin(), fill.end());

    // Drop fill edges in lexicographic order while chordality survives;
    // rescan until a full pass removes nothing.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> keep;
        keep.reserve(fill.size());
        for (auto [u, v] : fill) {
            a.set(u, v, false);
            if (chordal(a)) {
                changed = true;
            } else {
                a.set(u, v, true);
                keep.emplace_back(u, v);
            }
        }
        fill.swap(keep);
    }
    return FillSet{g, fill, a.to_graph()};
}

bool is_minimal_triangulation(const Graph& g, const Graph& h) {
    require_supergraph(g, h, "is_minimal_triangulation");
    AdjMatrix a(h);
    if (!chordal(a)) return false;

    for (auto [u, v] : h.edges()) {
        if (g.adj(u, v)) continue;
        // unique-chord criterion: (u,v) must be the only chord of some
        // 4-cycle u-x-v-y, i.e. two common neighbors x,y with (x,y) not in H
        bool unique_chord = false;
        const auto& nu = h.neighbors(u);
        for (std::size_t i = 0; i < nu.size() && !unique_chord; ++i) {
            if (!h.adj(nu[i], v) || nu[i] == v) continue;
            for (std::size_t j = i + 1; j < nu.size(); ++j) {
                if (!h.adj(nu[j], v) || nu[j] == v) continue;
                if (!h.adj(nu[i], nu[j])) {
                    unique_chord = true;
                    break;
                }
            }
        }
        // removal probe, run always: the two certificates must agree
        a.set(u, v, false);
        bool removal_breaks = !chordal(a);
        a.set(u, v, true);
        if (unique_chord != removal_breaks)
            throw internal_error("is_minimal_triangulation: unique-chord test and removal probe disagree");
        if (!unique_chord) return false;
    }
    return true;
}

std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& h) {
    auto ch = is_chordal(h);
    if (!ch.chordal) throw precondition_error("maximal_cliques_chordal: input is not chordal");
    const auto& elim = ch.peo.order;
    std::vector<int> pos(h.n());
    for (int i = 0; i < h.n(); ++i) pos[elim[i]] = i;

    std::vector<std::vector<int>> cliques;
    for (int i = 0; i < h.n(); ++i) {
        int v = elim[i];
        std::vector<int> k{v};
        for (int w : h.neighbors(v))
            if (pos[w] > i) k.push_back(w);
        std::sort(k.begin(), k.end());
        cliques.push_back(std::move(k));
    }
    // keep only maximal ones, each once
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
    std::vector<std::vector<int>> out;
    for (const auto& c : cliques) {
        bool contained = false;
        for (const auto& d : cliques) {
            if (&c == &d || d.size() < c.size()) continue;
            if (c.size() == d.size() && c == d) continue;
            if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) out.push_back(c);
    }
    return out;
}

namespace {

// Backtracking consecutive-arrangement search over the maximal cliques.
struct CliquePathSearch {
    const std::vector<std::vector<int>>& cliques;
    int n;
    std::vector<char> placed;
    std::vector<int> order;
    std::vector<int> state; // per vertex: 0 unseen, 1 open, 2 closed

    CliquePathSearch(const std::vector<std::vector<int>>& cs, int nv)
        : cliques(cs), n(nv), placed(cs.size(), 0), state(nv, 0) {}

    bool extend() {
        if (order.size() == cliques.size()) return true;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            if (placed[c]) continue;
            if (!feasible(c)) continue;
            auto undo = apply(c);
            order.push_back(static_cast<int>(c));
            placed[c] = 1;
            if (extend()) return true;
            placed[c] = 0;
            order.pop_back();
            revert(undo);
        }
        return false;
    }

    bool feasible(std::size_t c) const {
        for (int v : cliques[c])
            if (state[v] == 2) return false; // would reopen a closed vertex
        return true;
    }

    // open members of c; close open vertices not in c
    std::vector<std::pair<int, int>> apply(std::size_t c) {
        std::vector<std::pair<int, int>> undo;
        std::vector<char> in_c(n, 0);
        for (int v : cliques[c]) in_c[v] = 1;
        for (int v = 0; v < n; ++v) {
            int next = state[v];
            if (in_c[v])
                next = 1;
            else if (state[v] == 1)
                next = 2;
            if (next != state[v]) {
                undo.emplace_back(v, state[v]);
                state[v] = next;
            }
        }
        return undo;
    }

    void revert(const std::vector<std::pair<int, int>>& undo) {
        for (auto [v, s] : undo) state[v] = s;
    }
};

} // namespace

CliquePath clique_path_order(const Graph& h) {
    if (!is_interval(h)) throw precondition_error("clique_path_order: input is not interval");
    auto cliques = maximal_cliques_chordal(h);
    CliquePathSearch search(cliques, h.n());
    if (!search.extend())
        throw internal_error("clique_path_order: no consecutive arrangement for an interval graph");
    CliquePath cp;
    for (int idx : search.order) cp.cliques.push_back(cliques[idx]);
    return cp;
}

IntervalModel interval_model(const Graph& h) {
    CliquePath cp = clique_path_order(h);
    IntervalModel m;
    m.intervals.assign(h.n(), IntervalQ{Rational(0), Rational(0)});
    std::vector<int> first(h.n(), -1), last(h.n(), -1);
    for (std::size_t p = 0; p < cp.cliques.size(); ++p)
        for (int v : cp.cliques[p]) {
            if (first[v] < 0) first[v] = static_cast<int>(p) + 1;
            last[v] = static_cast<int>(p) + 1;
        }
    for (int v = 0; v < h.n(); ++v) {
        if (first[v] < 0)
            throw internal_error("interval_model: vertex in no maximal clique");
        m.intervals[v] = IntervalQ{Rational(first[v]), Rational(last[v])};
    }
    return m;
}

} // namespace atfbox
