#include "euler/grid2.hpp"

#include <cmath>
#include <stdexcept>

#include "euler/graph.hpp"

namespace euler {

ShootingProblem grid2_problem() {
    ShootingProblem prob;
    prob.system.dim = 4;
    prob.system.a = 0.5;
    prob.system.b = 1.0;
    prob.system.coefficients = [](double x, double l, std::span<double> a) {
        const double r = 1.0 / l;
        // rows: g' = g', h' = h', g'' = (-g - h - x h')/l, h'' = (-g - h + (1-x) g')/l
        a[0] = 0;  a[1] = 0;  a[2] = 1;            a[3] = 0;
        a[4] = 0;  a[5] = 0;  a[6] = 0;            a[7] = 1;
        a[8] = -r; a[9] = -r; a[10] = 0;           a[11] = -x * r;
        a[12] = -r; a[13] = -r; a[14] = (1 - x) * r; a[15] = 0;
    };
    prob.initial = [](double l) { return std::vector<double>{l / 2, l / 2, -l - 0.25, l + 0.25}; };
    prob.residual = [](std::span<const double> y, double) { return y[3]; };
    return prob;
}

std::vector<Window> grid2_default_windows() {
    return {{0.33, 0.40}, {0.055, 0.072}, {-0.070, -0.054}, {0.028, 0.038}};
}

RootSearch grid2_default_search() {
    RootSearch search;
    search.windows = grid2_default_windows();
    return search;
}

double u_inner(std::span<const double> a, std::span<const double> b, double h) {
    const std::size_t n = a.size();
    std::vector<double> diagonal(n);
    for (std::size_t i = 0; i < n; ++i) diagonal[i] = (1.0 - i * h) * a[i] * b[i];
    const std::vector<double> b_cumulative = cumulative_simpson(b, h);
    std::vector<double> cross(n);
    for (std::size_t i = 0; i < n; ++i) cross[i] = a[i] * b_cumulative[n - 1 - i];
    return 2.0 * simpson(diagonal, h) + 2.0 * simpson(cross, h);
}

GridEigenpair grid2_eigenpair(double lambda, int steps) {
    const ShootingProblem prob = grid2_problem();
    if (steps == 0) steps = default_steps(prob.system);
    const Trajectory t = prob.solve(lambda, steps);

    GridEigenpair pair;
    pair.lambda = lambda;
    pair.h = t.h;
    pair.shooting_residual = prob.residual(t.terminal(), lambda);
    const int half = steps;
    pair.g.resize(2 * half + 1);
    for (int j = 0; j <= half; ++j) pair.g[half + j] = t.state(j)[0];
    for (int i = 0; i < half; ++i) pair.g[i] = t.state(half - i)[1];

    const std::vector<double> one(pair.g.size(), 1.0);
    pair.inner_1 = u_inner(pair.g, one, pair.h);
    pair.norm2 = u_inner(pair.g, pair.g, pair.h);
    pair.c = pair.inner_1 * pair.inner_1 / pair.norm2;
    pair.inner_1_table = pair.inner_1 / (2.0 * lambda);
    pair.norm2_table = pair.norm2 / (lambda * lambda);
    pair.c_table = pair.c / 4.0;

    pair.h_at_1 = t.terminal()[1];
    pair.g_at_1 = t.terminal()[0];
    std::vector<double> weighted(pair.g.size());
    for (std::size_t i = 0; i < weighted.size(); ++i) weighted[i] = (1.0 - i * pair.h) * pair.g[i];
    pair.g_at_0 = simpson(weighted, pair.h) / lambda;
    pair.half_integral = simpson(std::span<const double>(pair.g).first(half + 1), pair.h);
    return pair;
}

GridSpectrum grid2_eigen(const RootSearch& search) {
    const ShootingProblem prob = grid2_problem();
    GridSpectrum spectrum;
    spectrum.requested = search.n_roots;
    for (double lambda : find_eigenvalues(prob, search)) spectrum.pairs.push_back(grid2_eigenpair(lambda, search.steps));
    return spectrum;
}

Extended grid2_approx(std::span<const GridEigenpair> pairs, int m) {
    std::vector<SeriesTerm> terms;
    for (const auto& p : pairs) terms.push_back({p.lambda, p.c_table});
    return scaled_series(terms, 2, m);
}

double grid2_operator_residual(const GridEigenpair& pair) {
    const std::size_t n = pair.g.size();
    std::vector<double> weighted(n);
    for (std::size_t i = 0; i < n; ++i) weighted[i] = (1.0 - i * pair.h) * pair.g[i];
    const std::vector<double> g_cumulative = cumulative_simpson(pair.g, pair.h);
    const std::vector<double> w_cumulative = cumulative_simpson(weighted, pair.h);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = i * pair.h;
        const double rhs = (1.0 - x) * g_cumulative[i] + w_cumulative[n - 1 - i] - w_cumulative[i];
        worst = std::max(worst, std::abs(pair.lambda * pair.g[i] - rhs));
    }
    return worst;
}

double Polynomial::operator()(double x) const {
    double y = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) y = y * x + *it;
    return y;
}

Polynomial Polynomial::antiderivative() const {
    Polynomial p;
    p.coeffs.assign(coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.coeffs[k + 1] = coeffs[k] / static_cast<double>(k + 1);
    return p;
}

Polynomial Polynomial::times_one_minus_x() const {
    Polynomial p;
    p.coeffs.assign(coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        p.coeffs[k] += coeffs[k];
        p.coeffs[k + 1] -= coeffs[k];
    }
    return p;
}

double apply_u_operator(const Polynomial& g, double x) {
    const Polynomial prefix = g.antiderivative();
    const Polynomial weighted = g.times_one_minus_x().antiderivative();
    return (1.0 - x) * prefix(x) + weighted(1.0 - x) - weighted(x);
}

double commutation_check(const Polynomial& g, const NystromOperator& op) {
    if (op.graph.size() != 2 || op.s_set != (bit(0) | bit(1)))
        throw std::invalid_argument("commutation_check needs the operator of (P_2, {0,1})");
    if (g.coeffs.size() > 7) throw std::invalid_argument("commutation_check: degree must be <= 6");
    const int n = op.size();
    std::vector<double> lifted(n);
    std::vector<double> expected(n);
    for (int i = 0; i < n; ++i) {
        const auto p = op.nodes.point(i);
        lifted[i] = g(p[0]) + g(p[1]);
        expected[i] = apply_u_operator(g, p[0]) + apply_u_operator(g, p[1]);
    }
    std::vector<double> applied(n);
    op.matrix.multiply(lifted, applied);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += op.weight * (applied[i] - expected[i]) * (applied[i] - expected[i]);
    return std::sqrt(sum);
}

double commutation_check(const Polynomial& g, std::size_t n_nodes, std::uint64_t seed) {
    return commutation_check(g, build_nystrom(families::path(2), bit(0) | bit(1), n_nodes, seed));
}

}  // namespace euler
