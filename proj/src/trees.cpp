#include "euler/trees.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "euler/exact.hpp"

namespace euler {

namespace {

std::string rooted_code(const BipartiteGraph& t, int v, int parent) {
    std::vector<std::string> children;
    for (VertexMask rest = t.neighbours(v); rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (w != parent) children.push_back(rooted_code(t, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    return code + ")";
}

std::vector<int> centres(const BipartiteGraph& t) {
    const int n = t.size();
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = std::popcount(t.neighbours(v));
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int leaf : layer) {
            for (VertexMask rest = t.neighbours(leaf); rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

std::string tree_canonical_form(const BipartiteGraph& tree) {
    if (tree.size() == 0) return "";
    if (static_cast<int>(tree.edges().size()) != tree.size() - 1)
        throw std::invalid_argument("not a tree: wrong edge count");
    std::string best;
    for (int c : centres(tree)) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<BipartiteGraph> nonisomorphic_trees(int n) {
    if (n < 1) return {};
    std::map<std::string, BipartiteGraph> classes;
    classes.emplace("()", families::empty(1));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, BipartiteGraph> next;
        for (const auto& [code, tree] : classes) {
            for (int v = 0; v < tree.size(); ++v) {
                std::vector<Edge> edges = tree.edges();
                edges.push_back({v, size - 1});
                BipartiteGraph grown = build_graph(size, edges);
                next.try_emplace(tree_canonical_form(grown), std::move(grown));
            }
        }
        classes = std::move(next);
    }
    std::vector<BipartiteGraph> out;
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    return out;
}

TreeScanReport tree_conjecture_scan(int max_n) {
    if (max_n > 10) throw std::invalid_argument("tree scan supports n <= 10");
    TreeScanReport report;
    for (int n = 1; n <= max_n; ++n) {
        const BigCount path_euler = zigzag_number(n);
        for (BipartiteGraph& tree : nonisomorphic_trees(n)) {
            TreeScanRow row;
            row.euler = euler_exact(tree);
            row.path_euler = path_euler;
            int max_degree = 0;
            for (int v = 0; v < tree.size(); ++v) max_degree = std::max(max_degree, std::popcount(tree.neighbours(v)));
            row.is_path = max_degree <= 2;
            row.tree = std::move(tree);
            const std::size_t index = report.rows.size();
            if (row.euler < row.path_euler) report.violations.push_back(index);
            else if (row.euler == row.path_euler && !row.is_path) report.nonpath_equalities.push_back(index);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace euler
