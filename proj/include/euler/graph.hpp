#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace euler {

/// Vertex subsets are single machine words; graphs are capped accordingly.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

/// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Simple graph with a 2-colouring. Parts are 1 (local minima) and 2 (local
/// maxima). When the graph has an odd cycle, is_bipartite() is false and the
/// part labels are meaningless.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_bipartite() const { return bipartite_; }
    int part(int v) const { return part_[v]; }
    const std::vector<int>& parts() const { return part_; }

    /// Vertices with the given part label (1 or 2).
    VertexMask part_mask(int p) const;
    VertexMask neighbours(int v) const { return adj_[v]; }
    VertexMask all_vertices() const;

    /// Same edges with the part labels exchanged.
    BipartiteGraph with_parts_swapped() const;

    bool operator==(const BipartiteGraph&) const = default;

private:
    friend BipartiteGraph build_graph(int n, std::span<const Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> part_;
    std::vector<VertexMask> adj_;
    bool bipartite_ = true;
};

/// Validates and 2-colours. Each connected component's lowest-index vertex
/// goes to part 1. Throws std::invalid_argument on out-of-range indices,
/// self-loops, duplicate edges, or n outside [0, 64].
BipartiteGraph build_graph(int n, std::span<const Edge> edges);

/// G x_S P_m. Vertex (v, i) becomes i * n + v.
struct ProductSpec {
    BipartiteGraph base;
    VertexMask s_set = 0;
    int path_len = 1;
};

/// Path direction edges (v,i)-(v,i+1) for v in S, plus a copy of G in each
/// layer. Throws std::invalid_argument when S is not a subset of V(G),
/// path_len < 1, or the result would exceed 64 vertices.
BipartiteGraph product_with_path(const ProductSpec& spec);

/// Like product_with_path but layers wrap around: G x_S C_len. A cycle of
/// length 2 degenerates to the single edge of P_2.
BipartiteGraph product_with_cycle(const ProductSpec& spec);

/// Vertices of h are shifted by g.size().
BipartiteGraph disjoint_union(const BipartiteGraph& g, const BipartiteGraph& h);

namespace families {
BipartiteGraph empty(int n);
BipartiteGraph path(int n);
BipartiteGraph cycle(int n);
BipartiteGraph star(int leaves);
BipartiteGraph complete_bipartite(int a, int b);
/// P_2 x_{0} P_m; vertex 0 of each layer lies on the spine.
BipartiteGraph comb(int m);
/// P_2 x P_m, the 2 by m grid.
BipartiteGraph grid2(int m);
}  // namespace families

/// Text format: first line n, then one "u v" pair per line. Blank lines and
/// lines starting with '#' are ignored.
BipartiteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

/// Parses "0,2,3" (empty string means the empty set).
VertexMask parse_vertex_list(std::string_view text, int n);

/// Directed graph; arc (u, v) requires label(u) < label(v).
struct Digraph {
    int n = 0;
    std::vector<Edge> arcs;  // u -> v, not normalised
};

/// Throws std::invalid_argument on self-loops or indices out of range.
Digraph build_digraph(int n, std::span<const Edge> arcs);

}  // namespace euler
