#include "sdgqc/mass_formulas.hpp"

#include <stdexcept>
#include <string>

namespace sdgqc {

namespace {

void require_even(unsigned l, const char* what, unsigned min = 2) {
  if (l % 2 != 0 || l < min) {
    throw std::invalid_argument(std::string(what) + ": length must be even and at least " + std::to_string(min) +
                                ", got " + std::to_string(l));
  }
}

void require_mult8(unsigned l, const char* what) {
  if (l == 0 || l % 8 != 0) {
    throw std::invalid_argument(std::string(what) + ": length must be a positive multiple of 8, got " +
                                std::to_string(l));
  }
}

// prod_{i=first}^{last} (2^{a*i+b} + 1); empty when last < first.
BigCount product(int first, int last, unsigned a, unsigned b) {
  BigCount r = 1;
  for (int i = first; i <= last; ++i) r *= pow2(a * static_cast<unsigned>(i) + b) + 1;
  return r;
}

BigRational literal_product(int last, unsigned l) {
  BigCount denom = 12 * ipow(5, l);
  for (unsigned i = 2; i <= l; ++i) denom *= i;
  BigRational r = 1;
  for (int i = 1; i <= last; ++i) r *= BigRational(pow2(4 * static_cast<unsigned>(i) + 2) + 1, denom);
  return r;
}

}  // namespace

BigCount n_sd_binary(unsigned l) {
  require_even(l, "n_sd_binary");
  return product(1, static_cast<int>(l / 2) - 1, 1, 0);
}

BigCount m_sd_binary(unsigned l) {
  require_even(l, "m_sd_binary", 4);
  return product(1, static_cast<int>(l / 2) - 2, 1, 0);
}

BigCount t_type2(unsigned l) {
  require_mult8(l, "t_type2");
  return 2 * product(1, static_cast<int>(l / 2) - 2, 1, 0);
}

BigCount s_type2(unsigned l) {
  require_mult8(l, "s_type2");
  return 2 * product(1, static_cast<int>(l / 2) - 3, 1, 0);
}

BigCount n_sd_hermitian16(unsigned l) {
  require_even(l, "n_sd_hermitian16");
  return product(0, static_cast<int>(l / 2) - 1, 4, 2);
}

BigCount m_sd_hermitian16(unsigned l) {
  require_even(l, "m_sd_hermitian16");
  return product(0, static_cast<int>(l / 2) - 2, 4, 2);
}

BigCount ratio_sd_binary(unsigned l) {
  require_even(l, "ratio_sd_binary");
  return pow2(l / 2 - 1) + 1;
}

BigCount ratio_type2(unsigned l) {
  require_mult8(l, "ratio_type2");
  return pow2(l / 2 - 2) + 1;
}

BigCount ratio_sd_hermitian16(unsigned l) {
  require_even(l, "ratio_sd_hermitian16");
  return pow2(2 * l - 2) + 1;
}

BigRational literal_n_sd_hermitian16(unsigned l) {
  require_even(l, "literal_n_sd_hermitian16");
  return literal_product(static_cast<int>(l / 2) - 1, l);
}

BigRational literal_m_sd_hermitian16(unsigned l) {
  require_even(l, "literal_m_sd_hermitian16");
  return literal_product(static_cast<int>(l / 2) - 2, l);
}

}  // namespace sdgqc
