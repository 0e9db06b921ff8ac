#include "euler/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "euler/parallel.hpp"

namespace euler {

std::vector<double> Trajectory::component(int k) const {
    std::vector<double> out(steps + 1);
    for (int i = 0; i <= steps; ++i) out[i] = states[static_cast<std::size_t>(i) * dim + k];
    return out;
}

namespace {

template <class Sink>
void integrate(const LinearSystem& sys, std::span<const double> y0, double lambda, int steps, Sink&& sink) {
    if (lambda == 0.0) throw std::invalid_argument("rk4: lambda = 0 is singular");
    if (steps < 2 || steps % 2 != 0) throw std::invalid_argument("rk4: steps must be even and >= 2");
    const int d = sys.dim;
    if (static_cast<int>(y0.size()) != d) throw std::invalid_argument("rk4: initial state has wrong size");

    const double h = (sys.b - sys.a) / steps;
    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> a0(d * d), am(d * d), a1(d * d);
    std::vector<double> k1(d), k2(d), k3(d), k4(d), tmp(d);

    auto mul = [d](const std::vector<double>& a, const std::vector<double>& v, std::vector<double>& out) {
        for (int r = 0; r < d; ++r) {
            double s = 0.0;
            for (int c = 0; c < d; ++c) s += a[r * d + c] * v[c];
            out[r] = s;
        }
    };

    sink(0, y);
    sys.coefficients(sys.a, lambda, a0);
    for (int i = 0; i < steps; ++i) {
        const double x = sys.a + i * h;
        sys.coefficients(x + 0.5 * h, lambda, am);
        sys.coefficients(sys.a + (i + 1) * h, lambda, a1);
        mul(a0, y, k1);
        for (int r = 0; r < d; ++r) tmp[r] = y[r] + 0.5 * h * k1[r];
        mul(am, tmp, k2);
        for (int r = 0; r < d; ++r) tmp[r] = y[r] + 0.5 * h * k2[r];
        mul(am, tmp, k3);
        for (int r = 0; r < d; ++r) tmp[r] = y[r] + h * k3[r];
        mul(a1, tmp, k4);
        for (int r = 0; r < d; ++r) y[r] += h / 6.0 * (k1[r] + 2.0 * (k2[r] + k3[r]) + k4[r]);
        a0.swap(a1);
        sink(i + 1, y);
    }
}

}  // namespace

Trajectory rk4_integrate(const LinearSystem& sys, std::span<const double> y0, double lambda, int steps) {
    Trajectory t;
    t.x0 = sys.a;
    t.dim = sys.dim;
    t.steps = steps;
    t.lambda = lambda;
    t.h = (sys.b - sys.a) / steps;
    t.states.resize(static_cast<std::size_t>(steps + 1) * sys.dim);
    integrate(sys, y0, lambda, steps, [&](int i, const std::vector<double>& y) {
        std::copy(y.begin(), y.end(), t.states.begin() + static_cast<std::ptrdiff_t>(i) * sys.dim);
    });
    return t;
}

std::vector<double> rk4_terminal(const LinearSystem& sys, std::span<const double> y0, double lambda, int steps) {
    std::vector<double> last;
    integrate(sys, y0, lambda, steps, [&](int i, const std::vector<double>& y) {
        if (i == steps) last = y;
    });
    return last;
}

int default_steps(const LinearSystem& sys) {
    const int steps = static_cast<int>(std::lround(kStepsPerUnit * (sys.b - sys.a)));
    return std::max(2, steps + steps % 2);
}

double ShootingProblem::residual_at(double lambda, int steps) const {
    const auto y0 = initial(lambda);
    return residual(rk4_terminal(system, y0, lambda, steps), lambda);
}

Trajectory ShootingProblem::solve(double lambda, int steps) const {
    const auto y0 = initial(lambda);
    return rk4_integrate(system, y0, lambda, steps);
}

ScanResult scan_lambda(const ShootingProblem& prob, double lmin, double lmax, int n_grid, int steps,
                       Spacing spacing, double exclude) {
    if (n_grid < 2) throw std::invalid_argument("scan_lambda: need at least two grid points");
    if (!(lmin < lmax)) throw std::invalid_argument("scan_lambda: empty interval");
    std::vector<double> grid;
    if (spacing == Spacing::Log) {
        if (lmin * lmax <= 0) throw std::invalid_argument("scan_lambda: log spacing needs a one-signed interval");
        const double sign = lmin > 0 ? 1.0 : -1.0;
        const double lo = std::log(std::min(std::abs(lmin), std::abs(lmax)));
        const double hi = std::log(std::max(std::abs(lmin), std::abs(lmax)));
        for (int i = 0; i < n_grid; ++i) grid.push_back(sign * std::exp(lo + (hi - lo) * i / (n_grid - 1)));
        std::sort(grid.begin(), grid.end());
    } else {
        for (int i = 0; i < n_grid; ++i) grid.push_back(lmin + (lmax - lmin) * i / (n_grid - 1));
    }
    std::erase_if(grid, [&](double l) { return std::abs(l) < exclude || l == 0.0; });

    ScanResult result;
    result.points.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        result.points[i] = {grid[i], prob.residual_at(grid[i], steps)};
    });
    for (std::size_t i = 0; i + 1 < result.points.size(); ++i) {
        const auto& p = result.points[i];
        const auto& q = result.points[i + 1];
        // Never bracket across the excluded neighbourhood of 0.
        if (p.lambda < 0 && q.lambda > 0) continue;
        if (p.residual == 0.0 || (p.residual < 0) != (q.residual < 0)) {
            if (q.residual == 0.0 && i + 2 < result.points.size()) continue;  // caught at the next pair
            result.brackets.push_back({p.lambda, q.lambda});
        }
    }
    return result;
}

double bisect(const std::function<double(double)>& f, Bracket bracket, double tol) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("bisect: no sign change across bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at double resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double refine_root(const ShootingProblem& prob, Bracket bracket, int steps, double tol) {
    return bisect([&](double l) { return prob.residual_at(l, steps); }, bracket, tol);
}

std::vector<double> find_eigenvalues(const ShootingProblem& prob, const RootSearch& search) {
    const int steps = search.steps > 0 ? search.steps : default_steps(prob.system);
    std::vector<double> roots;
    for (const Window& w : search.windows) {
        const int points = std::max(11, static_cast<int>(std::ceil(search.points_per_unit * (w.hi - w.lo))));
        const ScanResult scan = scan_lambda(prob, w.lo, w.hi, points, steps);
        for (const Bracket& b : scan.brackets) roots.push_back(refine_root(prob, b, steps, search.tol));
    }
    std::sort(roots.begin(), roots.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
    roots.erase(std::unique(roots.begin(), roots.end(), [&](double a, double b) { return std::abs(a - b) <= 10 * search.tol; }),
                roots.end());
    if (static_cast<int>(roots.size()) > search.n_roots) roots.resize(search.n_roots);
    return roots;
}

double simpson(std::span<const double> values, double h) {
    const std::size_t intervals = values.empty() ? 0 : values.size() - 1;
    if (intervals == 0 || intervals % 2 != 0)
        throw std::invalid_argument("simpson: need a positive even number of intervals");
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < intervals; ++i) (i % 2 ? odd : even) += values[i];
    return h / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

std::vector<double> cumulative_simpson(std::span<const double> values, double h) {
    const std::size_t n = values.size();
    if (n < 3) throw std::invalid_argument("cumulative_simpson: need at least three samples");
    std::vector<double> out(n, 0.0);
    // Even prefixes.
    for (std::size_t i = 2; i < n; i += 2)
        out[i] = out[i - 2] + h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
    // First interval from the interpolating quadratic through points 0, 1, 2.
    out[1] = h / 12.0 * (5.0 * values[0] + 8.0 * values[1] - values[2]);
    if (n > 3) {
        const double first_three = 3.0 * h / 8.0 * (values[0] + 3.0 * values[1] + 3.0 * values[2] + values[3]);
        // Odd i: 3/8 rule on [x0, x3], then Simpson on [x3, xi].
        double tail = 0.0;
        out[3] = first_three;
        for (std::size_t i = 5; i < n; i += 2) {
            tail += h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
            out[i] = first_three + tail;
        }
    }
    return out;
}

}  // namespace euler
