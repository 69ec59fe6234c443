#include "ybe/bigint.hpp"

#include "ybe/error.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <cctype>

namespace ybe {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  BigInt value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError,
                  "not a non-negative decimal integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt pumped_size(std::uint64_t n, unsigned level) {
  BigInt size = n;
  for (unsigned l = 0; l < level; ++l) size *= size;
  return size;
}

BigInt uniform_point(std::mt19937_64& rng, const BigInt& upper) {
  if (upper < 1) throw Error(ErrorCode::InvalidArgument, "empty range");
  boost::random::uniform_int_distribution<BigInt> dist(BigInt(1), upper);
  return dist(rng);
}

}  // namespace ybe
