#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ybe {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a non-negative decimal integer. Throws ParseError on anything else.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// base^exponent with exact arithmetic.
BigInt big_pow(const BigInt& base, std::uint64_t exponent);

/// n^(2^level), the point count of an n-point solution pumped `level` times.
BigInt pumped_size(std::uint64_t n, unsigned level);

/// Uniform draw from {1..upper}; upper must be positive.
BigInt uniform_point(std::mt19937_64& rng, const BigInt& upper);

/// Splits a 1-based point m of a product set of width `modulus` into the
/// 1-based pair (ceil(m / modulus), m mod modulus) with residue 0 read as
/// `modulus`.
template <typename Int>
constexpr std::pair<Int, Int> split_point(const Int& m, const Int& modulus) {
  Int q = m / modulus;
  Int r = m % modulus;
  if (r == 0) return {q, modulus};
  return {q + 1, r};
}

/// Inverse of split_point: modulus * (first - 1) + second.
template <typename Int>
constexpr Int join_point(const Int& first, const Int& second, const Int& modulus) {
  return modulus * (first - 1) + second;
}

}  // namespace ybe
