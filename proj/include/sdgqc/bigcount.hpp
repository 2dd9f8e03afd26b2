// Arbitrary-precision counts.

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdgqc {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& v) { return v.str(); }
std::string to_decimal(const BigRational& v);

/// 2^e.
BigCount pow2(unsigned e);
BigCount ipow(unsigned base, unsigned e);
/// C(n, k); 0 when k > n.
BigCount binomial(unsigned n, unsigned k);

/// log2(v) in double precision for v > 0, accurate for values far beyond the
/// double exponent range.
double log2_big(const BigCount& v);

}  // namespace sdgqc
