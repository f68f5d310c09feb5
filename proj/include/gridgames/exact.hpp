#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gridgames {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// 2^e for e >= 0.
BigInt pow2(std::int64_t e);

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);

/// ceil(sqrt(v)) for v >= 0.
BigInt ceil_isqrt(const BigInt& v);

/// ceil(num / den) for num >= 0, den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Exact exponent k if v == 2^k, else -1.
std::int64_t log2_exact(const BigInt& v);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const BigInt& v);

}  // namespace gridgames
