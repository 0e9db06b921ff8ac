#include "euler/compare.hpp"

#include <stdexcept>

#include "euler/classical.hpp"
#include "euler/comb.hpp"
#include "euler/exact.hpp"
#include "euler/grid2.hpp"

namespace euler {

Family parse_family(std::string_view name) {
    if (name == "comb") return Family::Comb;
    if (name == "grid2") return Family::Grid2;
    if (name == "path") return Family::Path;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Comb: return "comb";
        case Family::Grid2: return "grid2";
        case Family::Path: return "path";
    }
    return "?";
}

BipartiteGraph family_graph(Family f, int m) {
    switch (f) {
        case Family::Comb: return families::comb(m);
        case Family::Grid2: return families::grid2(m);
        case Family::Path: return families::path(m);
    }
    throw std::logic_error("unhandled family");
}

int family_layer_size(Family f) { return f == Family::Path ? 1 : 2; }

std::optional<double> relative_threshold(int m) {
    if (m <= 1) return std::nullopt;
    if (m <= 3) return 2e-3;
    if (m <= 7) return 1e-4;
    return 1e-6;
}

bool CompareResult::passed() const {
    for (const auto& row : rows)
        if (!row.ok()) return false;
    return true;
}

std::vector<SeriesTerm> family_terms(Family f, int roots, int steps) {
    std::vector<SeriesTerm> terms;
    switch (f) {
        case Family::Comb: {
            RootSearch search = comb_default_search();
            search.n_roots = roots;
            search.steps = steps;
            const CombSpectrum s = comb_eigen(search);
            if (!s.complete()) throw std::runtime_error("comb: fewer eigenvalues found than requested");
            for (const auto& p : s.pairs) terms.push_back({p.lambda, p.c});
            break;
        }
        case Family::Grid2: {
            RootSearch search = grid2_default_search();
            search.n_roots = roots;
            search.steps = steps;
            const GridSpectrum s = grid2_eigen(search);
            if (!s.complete()) throw std::runtime_error("grid2: fewer eigenvalues found than requested");
            for (const auto& p : s.pairs) terms.push_back({p.lambda, p.c_table});
            break;
        }
        case Family::Path:
            for (double l : classical_lambdas(roots).lambdas) terms.push_back({l, 2.0 * l * l});
            break;
    }
    return terms;
}

CompareResult compare_with_terms(Family f, std::span<const SeriesTerm> terms, int m_max) {
    CompareResult result;
    result.family = f;
    result.terms.assign(terms.begin(), terms.end());
    for (int m = 1; m <= m_max; ++m) {
        CompareRow row;
        row.m = m;
        row.exact = euler_exact(family_graph(f, m));
        row.approx = scaled_series(terms, family_layer_size(f), m);
        row.rel_err = static_cast<double>(relative_error(row.approx, row.exact));
        row.threshold = relative_threshold(m);
        result.rows.push_back(std::move(row));
    }
    return result;
}

CompareResult cmd_compare(Family f, const CompareOptions& options) {
    const auto terms = family_terms(f, options.roots, options.steps);
    return compare_with_terms(f, terms, options.m_max);
}

}  // namespace euler
