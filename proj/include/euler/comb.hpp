#pragma once

#include <span>
#include <vector>

#include "euler/numeric.hpp"
#include "euler/ode.hpp"

namespace euler {

/// Eigenfunction of T[f](x) = int_0^{1-x} (1-z) f(z) dz, normalised f(0) = 1,
/// sampled on a uniform grid over [0,1] with spacing h.
struct CombEigenpair {
    double lambda = 0.0;
    double h = 0.0;
    std::vector<double> f;
    double inner_1 = 0.0;  // <f,1>_W = int (1-x) f
    double norm2 = 0.0;    // ||f||^2_W = int (1-x) f^2
    double c = 0.0;
    double shooting_residual = 0.0;
};

struct CombSpectrum {
    std::vector<CombEigenpair> pairs;
    int requested = 0;
    bool complete() const { return static_cast<int>(pairs.size()) >= requested; }
};

/// (f, g)' = [[0, -x/l], [(1-x)/l, 0]] (f, g) on [0, 1/2] with g(x) = f(1-x),
/// f(0) = 1, g(0) = 0; residual f(1/2) - g(1/2).
ShootingProblem comb_problem();

/// Windows around the four largest eigenvalues.
std::vector<Window> comb_default_windows();
RootSearch comb_default_search();

/// Integrates at `lambda` and glues f on [0,1]: f itself on [0,1/2] and
/// g(1-x) on [1/2,1]. steps = 0 picks default_steps().
CombEigenpair comb_eigenpair(double lambda, int steps = 0);

CombSpectrum comb_eigen(const RootSearch& search = comb_default_search());

/// int_0^1 (1-x) a(x) b(x) dx on the shared grid.
double w_inner(std::span<const double> a, std::span<const double> b, double h);

/// (2m)! sum_n c_n lambda_n^(m-1).
Extended comb_approx(std::span<const CombEigenpair> pairs, int m);

/// sup_x |lambda f(x) - int_0^{1-x} (1-z) f(z) dz| with the integral by
/// cumulative Simpson on the reconstruction grid.
double comb_operator_residual(const CombEigenpair& pair);

}  // namespace euler
