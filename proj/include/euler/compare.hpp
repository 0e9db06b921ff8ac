#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "euler/graph.hpp"
#include "euler/numeric.hpp"

namespace euler {

enum class Family { Comb, Grid2, Path };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Comb_m, P_2 x P_m, or P_m.
BipartiteGraph family_graph(Family f, int m);

/// Vertices per layer in the family's product with P_m.
int family_layer_size(Family f);

/// Relative error allowed at m: 2e-3 for m = 2..3, 1e-4 for m = 4..7, 1e-6
/// for m >= 8. m = 1 is unchecked: there the four-term truncation error is of
/// order 1e-2 for every family.
std::optional<double> relative_threshold(int m);

struct CompareRow {
    int m = 0;
    BigCount exact;
    Extended approx;
    double rel_err = 0.0;
    std::optional<double> threshold;

    bool ok() const { return !threshold || rel_err <= *threshold; }
};

struct CompareResult {
    Family family = Family::Comb;
    std::vector<SeriesTerm> terms;
    std::vector<CompareRow> rows;

    bool passed() const;
};

struct CompareOptions {
    int m_max = 10;
    int roots = 4;
    int steps = 0;  // 0 = default RK4 steps
};

/// The leading `roots` spectral terms of the family: comb and grid2 from
/// shooting (grid2 with its table-convention weights), path from the closed
/// form with c_k = 2 lambda_k^2.
std::vector<SeriesTerm> family_terms(Family f, int roots, int steps);

/// Exact counts against (layer m)! sum c lambda^(m-1) for m = 1..m_max.
CompareResult compare_with_terms(Family f, std::span<const SeriesTerm> terms, int m_max);
CompareResult cmd_compare(Family f, const CompareOptions& options = {});

}  // namespace euler
