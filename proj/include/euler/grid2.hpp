#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "euler/geometry.hpp"
#include "euler/numeric.hpp"
#include "euler/ode.hpp"

namespace euler {

/// Eigenfunction of the operator on U,
///   T[g](x) = (1-x) int_0^x g + int_x^{1-x} (1-s) g(s) ds,
/// normalised g(1/2) = lambda/2 and sampled on a uniform grid over [0,1].
///
/// Two sets of constants are kept. The raw ones use <a,b>_U =
/// int_X (a(x)+a(y))(b(x)+b(y)) with the lambda/2 normalisation. The table
/// ones rescale g to g(1/2) = 1 and use (1/4)<.,.>_U, i.e. the L^2(X) inner
/// product of L[g]/2. The table c is raw c / 4, and its sum over eigenpairs
/// tends to vol(X) = 1/2, so it is the weight that reproduces E(P_2 x P_m).
struct GridEigenpair {
    double lambda = 0.0;
    double h = 0.0;
    std::vector<double> g;
    double inner_1 = 0.0;  // raw <g,1>_U
    double norm2 = 0.0;    // raw ||g||^2_U
    double c = 0.0;        // raw ratio
    double inner_1_table = 0.0;
    double norm2_table = 0.0;
    double c_table = 0.0;
    double shooting_residual = 0.0;  // h'(1)
    double h_at_1 = 0.0;             // from the trajectory
    double g_at_1 = 0.0;             // from the trajectory
    double g_at_0 = 0.0;             // from lambda g(0) = int_0^1 (1-s) g(s) ds
    double half_integral = 0.0;      // int_0^{1/2} g, equals lambda^2
};

struct GridSpectrum {
    std::vector<GridEigenpair> pairs;
    int requested = 0;
    bool complete() const { return static_cast<int>(pairs.size()) >= requested; }
};

/// State (g, h, g', h') with h(x) = g(1-x) on [1/2, 1]; initial state
/// (l/2, l/2, -l - 1/4, l + 1/4); residual h'(1).
ShootingProblem grid2_problem();

std::vector<Window> grid2_default_windows();
RootSearch grid2_default_search();

/// Integrates on [1/2, 1] only and recovers g on [0, 1/2] as h(1-x).
GridEigenpair grid2_eigenpair(double lambda, int steps = 0);

GridSpectrum grid2_eigen(const RootSearch& search = grid2_default_search());

/// <a,b>_U = 2 int_0^1 (1-x) a b dx + 2 int_0^1 a(x) B(1-x) dx, B(t) = int_0^t b.
double u_inner(std::span<const double> a, std::span<const double> b, double h);

/// (2m)! sum_n c_n lambda_n^(m-1) with the table constants.
Extended grid2_approx(std::span<const GridEigenpair> pairs, int m);

/// sup_x |lambda g(x) - T[g](x)| with both integrals by cumulative Simpson.
double grid2_operator_residual(const GridEigenpair& pair);

/// Polynomial with coefficients in increasing degree.
struct Polynomial {
    std::vector<double> coeffs;

    double operator()(double x) const;
    /// Antiderivative vanishing at 0.
    Polynomial antiderivative() const;
    /// (1 - x) * p(x)
    Polynomial times_one_minus_x() const;
};

/// T[g](x) for polynomial g, by exact antiderivatives.
double apply_u_operator(const Polynomial& g, double x);

/// Monte Carlo L^2(X) norm of T[L[g]] - L[T[g]] where the left side uses the
/// Nystrom matrix of (P_2, {0,1}) and the right side the exact 1-D operator.
double commutation_check(const Polynomial& g, const NystromOperator& op);
double commutation_check(const Polynomial& g, std::size_t n_nodes, std::uint64_t seed);

}  // namespace euler
