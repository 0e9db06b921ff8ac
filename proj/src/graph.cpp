#include "euler/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace euler {

VertexMask BipartiteGraph::part_mask(int p) const {
    VertexMask mask = 0;
    for (int v = 0; v < n_; ++v)
        if (part_[v] == p) mask |= bit(v);
    return mask;
}

VertexMask BipartiteGraph::all_vertices() const {
    return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1;
}

BipartiteGraph BipartiteGraph::with_parts_swapped() const {
    BipartiteGraph g = *this;
    for (int& p : g.part_) p = 3 - p;
    return g;
}

BipartiteGraph build_graph(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));

    BipartiteGraph g;
    g.n_ = n;
    g.adj_.assign(n, 0);
    std::set<Edge> seen;
    for (Edge e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        g.edges_.push_back(e);
        g.adj_[e.u] |= bit(e.v);
        g.adj_[e.v] |= bit(e.u);
    }

    g.part_.assign(n, 0);
    for (int root = 0; root < n; ++root) {
        if (g.part_[root] != 0) continue;
        g.part_[root] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (VertexMask rest = g.adj_[u]; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (g.part_[w] == 0) {
                    g.part_[w] = 3 - g.part_[u];
                    queue.push(w);
                } else if (g.part_[w] == g.part_[u]) {
                    g.bipartite_ = false;
                }
            }
        }
    }
    return g;
}

namespace {

BipartiteGraph layered_product(const ProductSpec& spec, bool wrap) {
    const BipartiteGraph& base = spec.base;
    const int n = base.size();
    if (spec.path_len < 1) throw std::invalid_argument("path length must be >= 1");
    if ((spec.s_set & ~base.all_vertices()) != 0)
        throw std::invalid_argument("S is not a subset of the base vertices");
    const long total = static_cast<long>(n) * spec.path_len;
    if (total > kMaxVertices)
        throw std::invalid_argument("product has " + std::to_string(total) +
                                    " vertices; the limit is 64");

    const int m = spec.path_len;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (const Edge& e : base.edges()) edges.push_back({i * n + e.u, i * n + e.v});
    for (int i = 0; i + 1 < m; ++i)
        for (int v = 0; v < n; ++v)
            if (spec.s_set & bit(v)) edges.push_back({i * n + v, (i + 1) * n + v});
    if (wrap && m >= 3)
        for (int v = 0; v < n; ++v)
            if (spec.s_set & bit(v)) edges.push_back({v, (m - 1) * n + v});
    return build_graph(static_cast<int>(total), edges);
}

}  // namespace

BipartiteGraph product_with_path(const ProductSpec& spec) { return layered_product(spec, false); }

BipartiteGraph product_with_cycle(const ProductSpec& spec) { return layered_product(spec, true); }

BipartiteGraph disjoint_union(const BipartiteGraph& g, const BipartiteGraph& h) {
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + g.size(), e.v + g.size()});
    return build_graph(g.size() + h.size(), edges);
}

namespace families {

BipartiteGraph empty(int n) { return build_graph(n, {}); }

BipartiteGraph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return build_graph(n, edges);
}

BipartiteGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return build_graph(n, edges);
}

BipartiteGraph star(int leaves) { return complete_bipartite(1, leaves); }

BipartiteGraph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return build_graph(a + b, edges);
}

BipartiteGraph comb(int m) { return product_with_path({path(2), bit(0), m}); }

BipartiteGraph grid2(int m) { return product_with_path({path(2), bit(0) | bit(1), m}); }

}  // namespace families

BipartiteGraph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n)) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected vertex count");
            continue;
        }
        Edge e;
        if (!(fields >> e.u >> e.v))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected \"u v\"");
        edges.push_back(e);
    }
    if (n < 0) throw std::invalid_argument("graph file is empty");
    return build_graph(n, edges);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
    out << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

VertexMask parse_vertex_list(std::string_view text, int n) {
    VertexMask mask = 0;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty()) {
            int v = -1;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("bad vertex index '" + std::string(token) + "'");
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            mask |= bit(v);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return mask;
}

Digraph build_digraph(int n, std::span<const Edge> arcs) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("digraph size must be in [0, 64]");
    for (const Edge& a : arcs) {
        if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n)
            throw std::invalid_argument("arc out of range");
        if (a.u == a.v) throw std::invalid_argument("self-loop in digraph");
    }
    return Digraph{n, {arcs.begin(), arcs.end()}};
}

}  // namespace euler
