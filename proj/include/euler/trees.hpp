#pragma once

#include <string>
#include <vector>

#include "euler/graph.hpp"
#include "euler/numeric.hpp"

namespace euler {

/// Canonical string of a tree (AHU encoding rooted at its centre, minimised
/// over the two centres when there are two). Equal strings iff isomorphic.
std::string tree_canonical_form(const BipartiteGraph& tree);

/// One representative of every isomorphism class of trees on n vertices,
/// sorted by canonical form. Built by attaching a leaf to every vertex of
/// every tree on n - 1 vertices.
std::vector<BipartiteGraph> nonisomorphic_trees(int n);

struct TreeScanRow {
    BipartiteGraph tree;
    BigCount euler;       // E(T)
    BigCount path_euler;  // E_n
    bool is_path = false;
};

struct TreeScanReport {
    std::vector<TreeScanRow> rows;
    std::vector<std::size_t> violations;          // rows with E(T) < E_n
    std::vector<std::size_t> nonpath_equalities;  // non-path rows with E(T) == E_n

    bool conjecture_holds() const { return violations.empty() && nonpath_equalities.empty(); }
};

/// Checks E(T) >= E_n, with equality only for the path, over every tree with
/// 1 <= n <= max_n vertices. Throws std::invalid_argument for max_n > 10.
TreeScanReport tree_conjecture_scan(int max_n);

}  // namespace euler
