#pragma once

#include <vector>

#include "euler/numeric.hpp"
#include "euler/ode.hpp"

namespace euler {

/// Spectrum of T[f](x) = int_0^{1-x} f(z) dz on [0,1]: lambda_k = 2/(pi k)
/// for k = 1, -3, 5, -7, ..., eigenfunctions cos(x / lambda_k).
struct ClassicalSpectrum {
    std::vector<int> k_indices;
    std::vector<double> lambdas;
};

ClassicalSpectrum classical_lambdas(int count);

/// 2 m! sum over the first `terms` indices of (2/(pi k))^(m+1).
Extended classical_approx(int m, int terms);

/// (f, g)' = [[0, -1/l], [1/l, 0]] (f, g) on [0, 1/2], f(0) = 1, g(0) = 0;
/// residual f(1/2) - g(1/2).
ShootingProblem classical_problem();

struct ClassicalShootReport {
    std::vector<double> roots;
    std::vector<double> expected;
    double max_root_error = 0.0;
    double eigenfunction_sup_error = 0.0;  // first root, against cos(x/lambda)
    double inner_1 = 0.0;                  // first root, int_0^1 f
    double norm2 = 0.0;                    // first root, int_0^1 f^2
    int steps = 0;
};

/// Shoots for the three largest eigenvalues and compares them and the first
/// eigenfunction with the closed forms. steps = 0 picks default_steps().
ClassicalShootReport classical_shoot_check(int steps = 0);

}  // namespace euler
