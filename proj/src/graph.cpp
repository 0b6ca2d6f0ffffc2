#include "atfbox/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "atfbox/errors.hpp"
#include "atfbox/invariants.hpp"

namespace atfbox {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    nbrs_.resize(n);
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        uniq.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(uniq.begin(), uniq.end());
    for (auto [u, v] : edges_) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

bool Graph::is_complete() const {
    return m() == n_ * (n_ - 1) / 2;
}

Graph Graph::with_edges(const std::vector<std::pair<int, int>>& extra) const {
    std::vector<std::pair<int, int>> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(n_, all);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> all;
    all.reserve(edges_.size());
    for (auto e : edges_)
        if (e != std::pair<int, int>{u, v}) all.push_back(e);
    return Graph(n_, all);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj(u, v)) comp.emplace_back(u, v);
    return Graph(n_, comp);
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> idx(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub;
    for (auto [u, v] : edges_)
        if (idx[u] >= 0 && idx[v] >= 0) sub.emplace_back(idx[u], idx[v]);
    return Graph(static_cast<int>(verts.size()), sub);
}

// --- edge list -------------------------------------------------------------

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw parse_error("empty input, expected header \"n m\"");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw parse_error("malformed header, expected \"n m\"", lineno);
    std::string trailing;
    if (head >> trailing) throw parse_error("trailing tokens after header", lineno);

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                            std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error("malformed edge line", lineno);
        if (es >> trailing) throw parse_error("trailing tokens after edge", lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("endpoint out of range [0," + std::to_string(n - 1) + "]", lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// --- graph6 ----------------------------------------------------------------

namespace {

void append_bits(std::string& out, std::uint64_t value, int bits) {
    for (int i = bits - 6; i >= 0; i -= 6)
        out.push_back(static_cast<char>(((value >> i) & 63) + 63));
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bits(out, static_cast<std::uint64_t>(n), 18);
    } else {
        throw std::invalid_argument("graph6: n too large");
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adj(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: invalid byte at position " + std::to_string(i));
        return c - 63;
    };
    if (text.empty()) throw parse_error("graph6: empty string");
    long long n;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126)
            throw parse_error("graph6: n > 258047 unsupported");
        if (text.size() < 4) throw parse_error("graph6: truncated long-form size");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    const long long need_bits = n * (n - 1) / 2;
    const std::size_t need_bytes = static_cast<std::size_t>((need_bits + 5) / 6);
    if (text.size() - pos < need_bytes) throw parse_error("graph6: truncated bit stream");
    if (text.size() - pos > need_bytes) throw parse_error("graph6: trailing bytes");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int b = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits must be zero
    for (long long p = bit; p < static_cast<long long>(need_bytes) * 6; ++p) {
        int b = byte(pos + static_cast<std::size_t>(p / 6));
        if ((b >> (5 - p % 6)) & 1) throw parse_error("graph6: nonzero padding");
    }
    return Graph(static_cast<int>(n), edges);
}

// --- metrics ---------------------------------------------------------------

std::vector<int> bfs_layers(const Graph& g, int source) {
    if (source < 0 || source >= g.n()) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> parent(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::deque<int> q{from};
    seen[from] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to) break;
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                q.push_back(w);
            }
    }
    if (!seen[to]) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; candidate cycle through each non-tree edge.
    int best = -1;
    const int n = g.n();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v]) {
                    // non-tree edge: closed walk through the root contains a
                    // cycle no longer than this candidate
                    int cand = dist[v] + dist[w] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool girth_at_least(const Graph& g, int k) {
    auto gi = girth(g);
    return !gi.has_value() || *gi >= k;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

// --- generators -------------------------------------------------------------

namespace {

// Engine-portable bounded sampling (uniform_int_distribution is not
// specified across standard library implementations).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rand_below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) { // inclusive
    return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("generate: " + what);
}

Graph gen_cycle(int len) {
    require(len >= 3, "cycle length must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
    return Graph(len, e);
}

Graph gen_path(int n) {
    require(n >= 1, "path needs >= 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph gen_complete_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "complete_multipartite needs part sizes");
    for (int p : parts) require(p >= 1, "part sizes must be >= 1");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph gen_matching_complement(int n) {
    require(n >= 2 && n % 2 == 0, "matching_complement size must be even and >= 2");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) e.emplace_back(u, v); // matched pairs are (2i, 2i+1)
    return Graph(n, e);
}

Graph gen_star(int k) {
    require(k >= 1, "star needs >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, e);
}

Graph gen_permutation(int n, std::uint64_t seed) {
    require(n >= 1, "permutation needs >= 1 vertex");
    std::mt19937_64 rng(seed);
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(pi[i], pi[rand_int(rng, 0, i)]);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pi[u] > pi[v]) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph gen_random_interval(int n, std::uint64_t seed) {
    require(n >= 1, "random_interval needs >= 1 vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [a, b] : iv) {
        a = rand_int(rng, 0, 4 * n);
        b = rand_int(rng, 0, 4 * n);
        if (a > b) std::swap(a, b);
    }
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::max(iv[u].first, iv[v].first) <= std::min(iv[u].second, iv[v].second))
                e.emplace_back(u, v);
    return Graph(n, e);
}

// Dominating path + pendant classes + at most one S_i <-> S_{i+2} edge per
// class pair, relabeled at random, then accepted only if the exact AT-free
// and girth predicates pass.
Graph gen_girth5_atfree(int n, std::uint64_t seed) {
    require(n >= 1, "girth5_atfree needs >= 1 vertex");
    const int kRetryBudget = 200;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt) + 1);
        int t = n == 1 ? 1 : rand_int(rng, std::max(1, n / 3), std::max(1, (2 * n) / 3));
        t = std::min(t, n);
        std::vector<int> class_of_slot; // slot t..n-1 -> class 1..t
        for (int s = t; s < n; ++s) class_of_slot.push_back(rand_int(rng, 1, t));

        std::vector<std::vector<int>> members(t + 1); // slots per class
        for (int s = t; s < n; ++s) members[class_of_slot[s - t]].push_back(s);

        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1); // path slots 0..t-1
        for (int s = t; s < n; ++s) edges.emplace_back(class_of_slot[s - t] - 1, s);
        for (int i = 1; i + 2 <= t; ++i) {
            if (members[i].empty() || members[i + 2].empty()) continue;
            if (rand_below(rng, 10) < 4) {
                int u = members[i][rand_below(rng, members[i].size())];
                int v = members[i + 2][rand_below(rng, members[i + 2].size())];
                edges.emplace_back(u, v);
            }
        }

        // random relabeling
        std::vector<int> label(n);
        for (int i = 0; i < n; ++i) label[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(label[i], label[rand_int(rng, 0, i)]);
        std::vector<std::pair<int, int>> relabeled;
        relabeled.reserve(edges.size());
        for (auto [u, v] : edges) relabeled.emplace_back(label[u], label[v]);

        Graph g(n, relabeled);
        if (girth_at_least(g, 5) && is_at_free(g)) return g;
    }
    throw std::runtime_error("girth5_atfree: retry budget exhausted");
}

} // namespace

const char* family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::path: return "path";
        case GraphFamily::complete_multipartite: return "complete_multipartite";
        case GraphFamily::matching_complement: return "matching_complement";
        case GraphFamily::star: return "star";
        case GraphFamily::permutation: return "permutation";
        case GraphFamily::random_interval: return "random_interval";
        case GraphFamily::girth5_atfree: return "girth5_atfree";
    }
    return "?";
}

std::optional<GraphFamily> family_from_name(std::string_view name) {
    for (GraphFamily f : {GraphFamily::cycle, GraphFamily::path,
                          GraphFamily::complete_multipartite, GraphFamily::matching_complement,
                          GraphFamily::star, GraphFamily::permutation,
                          GraphFamily::random_interval, GraphFamily::girth5_atfree})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Graph generate(const GraphFamilySpec& spec) {
    auto one_param = [&](const char* family) {
        require(spec.params.size() == 1, std::string(family) + " takes exactly one parameter");
        return spec.params[0];
    };
    switch (spec.family) {
        case GraphFamily::cycle: return gen_cycle(one_param("cycle"));
        case GraphFamily::path: return gen_path(one_param("path"));
        case GraphFamily::complete_multipartite: return gen_complete_multipartite(spec.params);
        case GraphFamily::matching_complement: return gen_matching_complement(one_param("matching_complement"));
        case GraphFamily::star: return gen_star(one_param("star"));
        case GraphFamily::permutation: return gen_permutation(one_param("permutation"), spec.seed);
        case GraphFamily::random_interval: return gen_random_interval(one_param("random_interval"), spec.seed);
        case GraphFamily::girth5_atfree: return gen_girth5_atfree(one_param("girth5_atfree"), spec.seed);
    }
    throw std::invalid_argument("generate: unknown family");
}

} // namespace atfbox
