#include "euler/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace euler {

BigCount euler_brute(const BipartiteGraph& g) {
    const int n = g.size();
    if (n > kBruteForceLimit)
        throw std::length_error("euler_brute supports at most 10 vertices, got " + std::to_string(n));
    if (!g.is_bipartite()) return 0;

    // Orient every edge from its part-1 end to its part-2 end.
    std::vector<Edge> oriented;
    for (const Edge& e : g.edges())
        oriented.push_back(g.part(e.u) == 1 ? e : Edge{e.v, e.u});

    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    BigCount count = 0;
    do {
        bool ok = true;
        for (const Edge& e : oriented) {
            if (label[e.u] > label[e.v]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(label.begin(), label.end()));
    return count;
}

namespace {

class DownSetCounter {
public:
    DownSetCounter(std::span<const VertexMask> successors, const ExactOptions& options)
        : successors_(successors), options_(options) {}

    const BigCount& count(VertexMask down_set) {
        if (down_set == 0) return one_;
        if (auto it = memo_.find(down_set); it != memo_.end()) return it->second;

        BigCount total = 0;
        for (VertexMask rest = down_set; rest; rest &= rest - 1) {
            const int x = std::countr_zero(rest);
            if ((successors_[x] & down_set) == 0) total += count(down_set & ~bit(x));
        }
        if (memo_.size() >= options_.max_states)
            throw ResourceLimitError("down-set memo exceeded " + std::to_string(options_.max_states) +
                                     " states");
        return memo_.emplace(down_set, std::move(total)).first->second;
    }

private:
    std::span<const VertexMask> successors_;
    const ExactOptions& options_;
    std::unordered_map<VertexMask, BigCount> memo_;
    const BigCount one_ = 1;
};

bool has_directed_cycle(std::span<const VertexMask> successors) {
    const int n = static_cast<int>(successors.size());
    std::vector<int> indegree(n, 0);
    for (int u = 0; u < n; ++u)
        for (VertexMask rest = successors[u]; rest; rest &= rest - 1) ++indegree[std::countr_zero(rest)];
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        const int u = ready.back();
        ready.pop_back();
        ++removed;
        for (VertexMask rest = successors[u]; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    return removed != n;
}

}  // namespace

BigCount count_linear_extensions(std::span<const VertexMask> successors, const ExactOptions& options) {
    const int n = static_cast<int>(successors.size());
    if (n > kMaxVertices) throw std::invalid_argument("at most 64 elements supported");
    if (has_directed_cycle(successors)) return 0;
    const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
    DownSetCounter counter(successors, options);
    return counter.count(all);
}

BigCount euler_exact(const BipartiteGraph& g, const ExactOptions& options) {
    if (!g.is_bipartite()) return 0;
    std::vector<VertexMask> successors(g.size(), 0);
    for (int v = 0; v < g.size(); ++v)
        if (g.part(v) == 1) successors[v] = g.neighbours(v);
    return count_linear_extensions(successors, options);
}

std::pair<BigCount, BigCount> macmahon_check(const BipartiteGraph& g, const BipartiteGraph& h) {
    const BigCount joint = euler_exact(disjoint_union(g, h));
    const BigCount product = binomial(static_cast<unsigned>(g.size() + h.size()),
                                      static_cast<unsigned>(h.size())) *
                             euler_exact(g) * euler_exact(h);
    return {joint, product};
}

BigCount descent_count(const Digraph& d, const ExactOptions& options) {
    std::vector<VertexMask> successors(d.n, 0);
    for (const Edge& a : d.arcs) successors[a.u] |= bit(a.v);
    return count_linear_extensions(successors, options);
}

BigCount zigzag_number(int n) {
    if (n < 0) throw std::invalid_argument("zigzag_number: n must be non-negative");
    std::vector<BigCount> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigCount> next(i + 1);
        next[0] = 0;
        for (int k = 1; k <= i; ++k) next[k] = next[k - 1] + row[i - k];
        row = std::move(next);
    }
    return row.back();
}

std::vector<BigRational> cycle_product_ratio(const BipartiteGraph& g, VertexMask s, int max_m,
                                             const ExactOptions& options) {
    if (!g.is_bipartite()) throw std::invalid_argument("cycle_product_ratio needs a bipartite graph");
    std::vector<BigRational> ratios;
    for (int m = 1; m <= max_m; ++m) {
        const ProductSpec spec{g, s, 2 * m};
        const BigCount on_cycle = euler_exact(product_with_cycle(spec), options);
        const BigCount on_path = euler_exact(product_with_path(spec), options);
        ratios.emplace_back(on_cycle, on_path);
    }
    return ratios;
}

}  // namespace euler
