#include "euler/numeric.hpp"
#include "euler/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace euler {

unsigned thread_count() {
    if (const char* env = std::getenv("EULER_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) return static_cast<unsigned>(requested);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

BigCount factorial(unsigned n) {
    BigCount result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::string to_string(const BigRational& value) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(value);
    if (boost::multiprecision::denominator(value) != 1)
        out << '/' << boost::multiprecision::denominator(value);
    return out.str();
}

std::string format_scientific(const Extended& value, int digits) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(digits - 1) << value;
    return out.str();
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, end);
}

Extended scaled_series(std::span<const SeriesTerm> terms, int layer_size, int m) {
    if (m < 1) throw std::invalid_argument("scaled_series: m must be >= 1");
    Extended sum = 0;
    for (const auto& t : terms) {
        sum += Extended(t.c) * boost::multiprecision::pow(Extended(t.lambda), m - 1);
    }
    return Extended(factorial(static_cast<unsigned>(layer_size * m))) * sum;
}

Extended relative_error(const Extended& approx, const BigCount& exact) {
    const Extended e(exact);
    return boost::multiprecision::abs(approx - e) / e;
}

}  // namespace euler
