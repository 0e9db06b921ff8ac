#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "euler/graph.hpp"
#include "euler/numeric.hpp"

namespace euler {

/// Thrown when the down-set memo would exceed its configured budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kBruteForceLimit = 10;

struct ExactOptions {
    /// Maximum number of memoised down-sets.
    std::size_t max_states = std::size_t{1} << 23;
};

/// Enumerates all n! labelings. Returns 0 for non-bipartite graphs and throws
/// std::length_error when n > 10.
BigCount euler_brute(const BipartiteGraph& g);

/// Linear extensions of the poset with cover relations u < w for every w in
/// successors[u], counted by dynamic programming over down-sets:
///   count(D) = sum over maximal x in D of count(D \ {x}),  count({}) = 1.
/// Returns 0 if the relation has a directed cycle.
BigCount count_linear_extensions(std::span<const VertexMask> successors,
                                 const ExactOptions& options = {});

/// Euler number as the number of linear extensions of the height-one poset
/// {u < v : uv an edge, u in part 1}. Non-bipartite graphs give 0.
BigCount euler_exact(const BipartiteGraph& g, const ExactOptions& options = {});

/// (E(g + h), C(|g|+|h|, |h|) E(g) E(h)).
std::pair<BigCount, BigCount> macmahon_check(const BipartiteGraph& g, const BipartiteGraph& h);

/// Number of labelings increasing along every arc; zero when the digraph has
/// a directed cycle.
BigCount descent_count(const Digraph& d, const ExactOptions& options = {});

/// Classical Euler (zigzag) number by the Seidel-Entringer triangle.
BigCount zigzag_number(int n);

/// E(G x_S C_2m) / E(G x_S P_2m) for m = 1..max_m. For m = 1 the cycle C_2
/// collapses to P_2 and the ratio is 1. Throws std::invalid_argument for a
/// non-bipartite G.
std::vector<BigRational> cycle_product_ratio(const BipartiteGraph& g, VertexMask s, int max_m,
                                             const ExactOptions& options = {});

}  // namespace euler
