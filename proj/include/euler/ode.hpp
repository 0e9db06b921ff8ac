#pragma once

#include <functional>
#include <span>
#include <vector>

namespace euler {

/// y' = A(x, lambda) y on [a, b]. The callback writes A row-major into a
/// dim*dim buffer.
struct LinearSystem {
    int dim = 0;
    std::function<void(double x, double lambda, std::span<double> a)> coefficients;
    double a = 0.0;
    double b = 1.0;
};

/// States on the uniform grid x_i = a + i*h, i = 0..steps.
struct Trajectory {
    double x0 = 0.0;
    double h = 0.0;
    int dim = 0;
    int steps = 0;
    double lambda = 0.0;
    std::vector<double> states;

    double x(int i) const { return x0 + i * h; }
    std::span<const double> state(int i) const { return {states.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)}; }
    std::span<const double> terminal() const { return state(steps); }
    /// Component `k` at every grid point.
    std::vector<double> component(int k) const;
};

/// Classical fixed-step RK4. Throws std::invalid_argument for lambda == 0,
/// odd or fewer than 2 steps, or a y0 of the wrong size.
Trajectory rk4_integrate(const LinearSystem& sys, std::span<const double> y0, double lambda, int steps);

/// Same integration, keeping only the final state.
std::vector<double> rk4_terminal(const LinearSystem& sys, std::span<const double> y0, double lambda, int steps);

inline constexpr int kStepsPerUnit = 1 << 16;

/// Steps giving kStepsPerUnit per unit length, rounded to an even count.
int default_steps(const LinearSystem& sys);

/// An eigenvalue problem posed as an initial value problem plus a scalar
/// boundary residual that vanishes exactly at eigenvalues.
struct ShootingProblem {
    LinearSystem system;
    std::function<std::vector<double>(double lambda)> initial;
    std::function<double(std::span<const double> terminal, double lambda)> residual;

    double residual_at(double lambda, int steps) const;
    Trajectory solve(double lambda, int steps) const;
};

struct ScanPoint {
    double lambda = 0.0;
    double residual = 0.0;
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct ScanResult {
    std::vector<ScanPoint> points;  // ascending lambda
    std::vector<Bracket> brackets;  // consecutive points with a sign change
};

enum class Spacing { Linear, Log };

inline constexpr double kLambdaExclusion = 1e-3;
inline constexpr int kScanPointsPerUnit = 2001;

/// Samples the residual on a grid over [lmin, lmax], skipping |lambda| <
/// exclude. Log spacing needs lmin and lmax of the same sign and spaces the
/// magnitudes geometrically.
ScanResult scan_lambda(const ShootingProblem& prob, double lmin, double lmax, int n_grid, int steps,
                       Spacing spacing = Spacing::Linear, double exclude = kLambdaExclusion);

/// Bisection on f until the bracket is at most tol wide; returns the
/// midpoint. Throws std::invalid_argument if f does not change sign.
double bisect(const std::function<double(double)>& f, Bracket bracket, double tol);

/// bisect() applied to the shooting residual.
double refine_root(const ShootingProblem& prob, Bracket bracket, int steps, double tol = 1e-13);

struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

/// Scan-then-bisect search for eigenvalues over a set of windows.
struct RootSearch {
    std::vector<Window> windows;
    int n_roots = 4;
    int steps = 0;                           // 0 means default_steps()
    int points_per_unit = kScanPointsPerUnit;  // scan density inside each window
    double tol = 1e-13;
};

/// Every bracketed root in the windows, refined, deduplicated, sorted by
/// |lambda| descending and truncated to n_roots. May return fewer.
std::vector<double> find_eigenvalues(const ShootingProblem& prob, const RootSearch& search);

/// Composite Simpson rule; throws std::invalid_argument on an odd number of
/// intervals.
double simpson(std::span<const double> values, double h);

/// out[i] = integral of the sampled function from x_0 to x_i. Even i use
/// composite Simpson; odd i (i >= 3) use Simpson's 3/8 on the first three
/// intervals and composite Simpson after that; i = 1 uses the quadratic
/// through the first three points.
std::vector<double> cumulative_simpson(std::span<const double> values, double h);

}  // namespace euler
