#include "gridgames/exact.hpp"

#include <limits>
#include <stdexcept>

namespace gridgames {

BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2 of a negative exponent");
  BigInt v = 1;
  v <<= static_cast<unsigned>(e);
  return v;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::invalid_argument("isqrt of a negative number");
  return boost::multiprecision::sqrt(v);
}

BigInt ceil_isqrt(const BigInt& v) {
  BigInt s = isqrt(v);
  if (s * s < v) ++s;
  return s;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("ceil_div needs num >= 0 and den > 0");
  return (num + den - 1) / den;
}

std::int64_t log2_exact(const BigInt& v) {
  if (v <= 0) return -1;
  const auto msb = static_cast<std::int64_t>(boost::multiprecision::msb(v));
  return pow2(msb) == v ? msb : -1;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace gridgames
