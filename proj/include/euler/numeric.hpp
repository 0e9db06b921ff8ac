#pragma once

#include <span>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace euler {

/// Exact non-negative counts. Euler numbers of 20-vertex products already
/// exceed 2^47, and the identity checks multiply several of them.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// 50-digit binary float. Carries (mn)! times a truncated spectral series
/// without overflow or cancellation for any m the tools accept.
using Extended = boost::multiprecision::cpp_bin_float_50;

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);

std::string to_string(const BigCount& value);
std::string to_string(const BigRational& value);

/// Decimal scientific notation with `digits` significant digits, e.g.
/// "6.79329879e+14".
std::string format_scientific(const Extended& value, int digits = 9);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double value);

/// One term of a spectral expansion: eigenvalue and its weight.
struct SeriesTerm {
    double lambda = 0.0;
    double c = 0.0;
};

/// (layer_size * m)! * sum_k c_k lambda_k^(m-1), evaluated in extended
/// precision.
Extended scaled_series(std::span<const SeriesTerm> terms, int layer_size, int m);

/// |approx - exact| / exact in extended precision.
Extended relative_error(const Extended& approx, const BigCount& exact);

}  // namespace euler
