#include "euler/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace euler {

ClassicalSpectrum classical_lambdas(int count) {
    if (count < 1) throw std::invalid_argument("classical_lambdas: count must be >= 1");
    ClassicalSpectrum s;
    for (int i = 0; i < count; ++i) {
        const int j = 2 * i + 1;
        const int k = i % 2 == 0 ? j : -j;
        s.k_indices.push_back(k);
        s.lambdas.push_back(2.0 / (std::numbers::pi * k));
    }
    return s;
}

Extended classical_approx(int m, int terms) {
    if (m < 1 || terms < 1) throw std::invalid_argument("classical_approx: m and terms must be >= 1");
    const Extended pi = boost::math::constants::pi<Extended>();
    Extended sum = 0;
    for (int k : classical_lambdas(terms).k_indices)
        sum += boost::multiprecision::pow(Extended(2) / (pi * k), m + 1);
    return 2 * Extended(factorial(static_cast<unsigned>(m))) * sum;
}

ShootingProblem classical_problem() {
    ShootingProblem prob;
    prob.system.dim = 2;
    prob.system.a = 0.0;
    prob.system.b = 0.5;
    prob.system.coefficients = [](double, double l, std::span<double> a) {
        a[0] = 0.0;
        a[1] = -1.0 / l;
        a[2] = 1.0 / l;
        a[3] = 0.0;
    };
    prob.initial = [](double) { return std::vector<double>{1.0, 0.0}; };
    prob.residual = [](std::span<const double> y, double) { return y[0] - y[1]; };
    return prob;
}

ClassicalShootReport classical_shoot_check(int steps) {
    const ShootingProblem prob = classical_problem();
    if (steps == 0) steps = default_steps(prob.system);
    RootSearch search;
    search.windows = {{0.60, 0.67}, {-0.24, -0.19}, {0.11, 0.14}};
    search.n_roots = 3;
    search.steps = steps;

    ClassicalShootReport r;
    r.steps = steps;
    r.roots = find_eigenvalues(prob, search);
    r.expected = classical_lambdas(3).lambdas;
    if (r.roots.size() != r.expected.size()) throw std::runtime_error("classical_shoot_check: missing roots");
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        r.max_root_error = std::max(r.max_root_error, std::abs(r.roots[i] - r.expected[i]));

    const double lambda = r.roots.front();
    const Trajectory t = prob.solve(lambda, steps);
    std::vector<double> f(2 * steps + 1);
    for (int i = 0; i <= steps; ++i) f[i] = t.state(i)[0];
    for (int i = steps + 1; i <= 2 * steps; ++i) f[i] = t.state(2 * steps - i)[1];
    std::vector<double> f2(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = i * t.h;
        r.eigenfunction_sup_error = std::max(r.eigenfunction_sup_error, std::abs(f[i] - std::cos(x / lambda)));
        f2[i] = f[i] * f[i];
    }
    r.inner_1 = simpson(f, t.h);
    r.norm2 = simpson(f2, t.h);
    return r;
}

}  // namespace euler
