#include "sdgqc/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace sdgqc {

std::string to_decimal(const BigRational& v) {
  const BigCount num = boost::multiprecision::numerator(v);
  const BigCount den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigCount pow2(unsigned e) {
  BigCount r = 1;
  r <<= e;
  return r;
}

BigCount ipow(unsigned base, unsigned e) { return boost::multiprecision::pow(BigCount(base), e); }

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double log2_big(const BigCount& v) {
  if (v <= 0) throw std::domain_error("log2 of non-positive value");
  const auto msb = static_cast<long>(boost::multiprecision::msb(v));
  if (msb < 63) return std::log2(static_cast<double>(v.convert_to<unsigned long long>()));
  // Top 63 bits carry more precision than a double mantissa.
  const auto shift = static_cast<unsigned>(msb - 62);
  const BigCount top = v >> shift;
  return std::log2(static_cast<double>(top.convert_to<unsigned long long>())) + static_cast<double>(shift);
}

}  // namespace sdgqc
