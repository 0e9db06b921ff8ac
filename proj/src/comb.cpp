#include "euler/comb.hpp"

#include <cmath>
#include <stdexcept>

namespace euler {

ShootingProblem comb_problem() {
    ShootingProblem prob;
    prob.system.dim = 2;
    prob.system.a = 0.0;
    prob.system.b = 0.5;
    prob.system.coefficients = [](double x, double l, std::span<double> a) {
        a[0] = 0.0;
        a[1] = -x / l;
        a[2] = (1.0 - x) / l;
        a[3] = 0.0;
    };
    prob.initial = [](double) { return std::vector<double>{1.0, 0.0}; };
    prob.residual = [](std::span<const double> y, double) { return y[0] - y[1]; };
    return prob;
}

std::vector<Window> comb_default_windows() {
    return {{0.40, 0.47}, {-0.11, -0.08}, {0.048, 0.060}, {-0.042, -0.033}};
}

RootSearch comb_default_search() {
    RootSearch search;
    search.windows = comb_default_windows();
    return search;
}

double w_inner(std::span<const double> a, std::span<const double> b, double h) {
    std::vector<double> integrand(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) integrand[i] = (1.0 - i * h) * a[i] * b[i];
    return simpson(integrand, h);
}

CombEigenpair comb_eigenpair(double lambda, int steps) {
    const ShootingProblem prob = comb_problem();
    if (steps == 0) steps = default_steps(prob.system);
    const Trajectory t = prob.solve(lambda, steps);

    CombEigenpair pair;
    pair.lambda = lambda;
    pair.h = t.h;
    pair.shooting_residual = prob.residual(t.terminal(), lambda);
    const int half = steps;
    pair.f.resize(2 * half + 1);
    for (int i = 0; i <= half; ++i) pair.f[i] = t.state(i)[0];
    for (int i = half + 1; i <= 2 * half; ++i) pair.f[i] = t.state(2 * half - i)[1];

    const std::vector<double> one(pair.f.size(), 1.0);
    pair.inner_1 = w_inner(pair.f, one, pair.h);
    pair.norm2 = w_inner(pair.f, pair.f, pair.h);
    pair.c = pair.inner_1 * pair.inner_1 / pair.norm2;
    return pair;
}

CombSpectrum comb_eigen(const RootSearch& search) {
    const ShootingProblem prob = comb_problem();
    CombSpectrum spectrum;
    spectrum.requested = search.n_roots;
    for (double lambda : find_eigenvalues(prob, search)) spectrum.pairs.push_back(comb_eigenpair(lambda, search.steps));
    return spectrum;
}

Extended comb_approx(std::span<const CombEigenpair> pairs, int m) {
    std::vector<SeriesTerm> terms;
    for (const auto& p : pairs) terms.push_back({p.lambda, p.c});
    return scaled_series(terms, 2, m);
}

double comb_operator_residual(const CombEigenpair& pair) {
    const std::size_t n = pair.f.size();
    std::vector<double> weighted(n);
    for (std::size_t i = 0; i < n; ++i) weighted[i] = (1.0 - i * pair.h) * pair.f[i];
    const std::vector<double> integral = cumulative_simpson(weighted, pair.h);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(pair.lambda * pair.f[i] - integral[n - 1 - i]));
    return worst;
}

}  // namespace euler
