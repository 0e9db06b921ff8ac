#include <doctest.h>

#include <cmath>
#include <numbers>

#include "euler/comb.hpp"
#include "euler/ode.hpp"

using namespace euler;

namespace {

LinearSystem scalar(double rate) {
    return {1, [rate](double, double, std::span<double> a) { a[0] = rate; }, 0.0, 1.0};
}

}  // namespace

TEST_CASE("RK4 on trivial systems") {
    const double one[] = {1.0};
    const Trajectory flat = rk4_integrate(scalar(0.0), one, 1.0, 8);
    for (int i = 0; i <= 8; ++i) CHECK(flat.state(i)[0] == 1.0);
    CHECK(flat.x(8) == 1.0);

    const auto end = rk4_terminal(scalar(1.0), one, 1.0, 1 << 14);
    CHECK(std::abs(end[0] - std::numbers::e) < 1e-10);
}

TEST_CASE("RK4 argument checks") {
    const double one[] = {1.0};
    const double two[] = {1.0, 0.0};
    CHECK_THROWS_AS(rk4_integrate(scalar(1.0), one, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(rk4_integrate(scalar(1.0), one, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(rk4_integrate(scalar(1.0), one, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(rk4_integrate(scalar(1.0), two, 1.0, 4), std::invalid_argument);
}

TEST_CASE("default steps") {
    CHECK(default_steps(scalar(1.0)) == 1 << 16);
    CHECK(default_steps(comb_problem().system) == 1 << 15);
}

TEST_CASE("RK4 converges at fourth order") {
    const ShootingProblem comb = comb_problem();
    const double lambda = 0.3;
    const auto y0 = comb.initial(lambda);
    const auto reference = rk4_terminal(comb.system, y0, lambda, 4 * 256);
    auto err = [&](int steps) {
        const auto y = rk4_terminal(comb.system, y0, lambda, steps);
        return std::hypot(y[0] - reference[0], y[1] - reference[1]);
    };
    const double coarse = err(64), fine = err(128);
    CHECK(coarse / fine >= 14.0);
    CHECK(std::log2(coarse / fine) >= 3.8);
}

TEST_CASE("comb scans") {
    const ShootingProblem comb = comb_problem();
    const ScanResult one = scan_lambda(comb, 0.3, 0.5, 201, 1 << 12);
    REQUIRE(one.brackets.size() == 1);
    CHECK(one.brackets[0].lo < 0.4371);
    CHECK(one.brackets[0].hi > 0.4371);
    CHECK(scan_lambda(comb, 0.2, 0.3, 201, 1 << 12).brackets.empty());

    const ScanResult again = scan_lambda(comb, 0.3, 0.5, 201, 1 << 12);
    for (std::size_t i = 0; i < one.points.size(); ++i) CHECK(one.points[i].residual == again.points[i].residual);
}

TEST_CASE("scans skip the singularity at zero") {
    const ScanResult s = scan_lambda(comb_problem(), -0.01, 0.01, 201, 1 << 10);
    for (const auto& p : s.points) CHECK(std::abs(p.lambda) >= kLambdaExclusion);
    for (const auto& b : s.brackets) CHECK(b.lo * b.hi > 0);
}

TEST_CASE("log spacing") {
    const ScanResult s = scan_lambda(comb_problem(), 0.01, 0.1, 11, 1 << 10, Spacing::Log);
    REQUIRE(s.points.size() == 11);
    CHECK(s.points.front().lambda == doctest::Approx(0.01));
    CHECK(s.points.back().lambda == doctest::Approx(0.1));
    CHECK(s.points[5].lambda == doctest::Approx(std::sqrt(0.001)));
    CHECK_THROWS(scan_lambda(comb_problem(), -0.1, 0.1, 11, 1 << 10, Spacing::Log));
}

TEST_CASE("bisection") {
    const double r = bisect([](double x) { return x * x - 2; }, {1.0, 2.0}, 1e-13);
    CHECK(std::abs(r - std::numbers::sqrt2) < 1e-13);
    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1; }, {1.0, 2.0}, 1e-13), std::invalid_argument);
}

TEST_CASE("root refinement on the comb problem") {
    const ShootingProblem comb = comb_problem();
    const int steps = default_steps(comb.system);
    const double root = refine_root(comb, {0.43, 0.44}, steps);
    CHECK(std::abs(root - 0.437141117) < 1e-8);
    const double at_root = std::abs(comb.residual_at(root, steps));
    CHECK(at_root <= std::abs(comb.residual_at(0.43, steps)));
    CHECK(at_root <= std::abs(comb.residual_at(0.44, steps)));
    CHECK(std::abs(comb.residual_at(0.25, steps)) > 1e-3);
}

TEST_CASE("Simpson rules") {
    const std::vector<double> ones(9, 1.0);
    CHECK(simpson(ones, 1.0 / 8) == doctest::Approx(1.0).epsilon(1e-15));
    const double cube[] = {0.0, 0.125, 1.0};
    CHECK(simpson(cube, 0.5) == 0.25);
    std::vector<double> weight(17);
    for (int i = 0; i <= 16; ++i) weight[i] = 1.0 - i / 16.0;
    CHECK(simpson(weight, 1.0 / 16) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(simpson(std::vector<double>(4, 1.0), 0.1), std::invalid_argument);
}

TEST_CASE("cumulative Simpson is exact for low-degree polynomials") {
    const int n = 20;
    const double h = 1.0 / n;
    std::vector<double> quad(n + 1), cubic(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double x = i * h;
        quad[i] = 3 * x * x - x + 2;
        cubic[i] = x * x * x;
    }
    const auto q = cumulative_simpson(quad, h);
    const auto c = cumulative_simpson(cubic, h);
    for (int i = 0; i <= n; ++i) {
        const double x = i * h;
        CHECK(std::abs(q[i] - (x * x * x - x * x / 2 + 2 * x)) < 1e-14);
        if (i != 1) CHECK(std::abs(c[i] - std::pow(x, 4) / 4) < 1e-14);
    }
}
