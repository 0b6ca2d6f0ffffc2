#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atfbox {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency kept both as a packed bit matrix and as sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    bool adj(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    // Edges sorted with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_complete() const;

    Graph with_edges(const std::vector<std::pair<int, int>>& extra) const;
    Graph without_edge(int u, int v) const;
    Graph complement() const;
    // Subgraph induced by verts; vertex verts[i] becomes i.
    Graph induced(const std::vector<int>& verts) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::pair<int, int>> edges_;
};

// --- codecs ---------------------------------------------------------------

// Format: first line "n m", then m lines "u v" (0-based). Duplicate edges
// collapse; self-loops and out-of-range endpoints raise parse_error with the
// offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Standard graph6 ASCII encoding. Short form for n <= 62, long form above.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// --- elementary metrics ----------------------------------------------------

// Unweighted distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_layers(const Graph& g, int source);
// One shortest path (BFS visiting neighbors in ascending order); empty when
// `to` is unreachable from `from`.
std::vector<int> bfs_path(const Graph& g, int from, int to);

// Length of a shortest cycle; nullopt when acyclic.
std::optional<int> girth(const Graph& g);
bool girth_at_least(const Graph& g, int k);

// Maximal connected blocks, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// --- deterministic corpus generators ---------------------------------------

enum class GraphFamily {
    cycle,
    path,
    complete_multipartite,
    matching_complement,
    star,
    permutation,
    random_interval,
    girth5_atfree,
};

const char* family_name(GraphFamily f);
std::optional<GraphFamily> family_from_name(std::string_view name);

struct GraphFamilySpec {
    GraphFamily family;
    std::vector<int> params;
    std::uint64_t seed = 0;
};

// Pure: identical spec+seed gives an identical edge set.
Graph generate(const GraphFamilySpec& spec);

} // namespace atfbox
