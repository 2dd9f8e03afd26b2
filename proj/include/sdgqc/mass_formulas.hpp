// Exact counts of self-dual codes of length l.
//
//   N(2,l)  = prod_{i=1}^{l/2-1} (2^i + 1)           binary self-dual
//   M(2,l)  = prod_{i=1}^{l/2-2} (2^i + 1)           ... containing a fixed v != 0, 1 of even weight
//   T(2,l)  = 2 prod_{i=1}^{l/2-2} (2^i + 1)         Type II, 8 | l
//   S(2,l)  = 2 prod_{i=1}^{l/2-3} (2^i + 1)         Type II containing a fixed doubly-even v != 0, 1
//   N(16,l) = prod_{i=0}^{l/2-1} (2^{4i+2} + 1)      Hermitian self-dual over GF(16)
//   M(16,l) = prod_{i=0}^{l/2-2} (2^{4i+2} + 1)      ... containing a fixed isotropic v != 0
//
// The GF(16) products are the standard Hermitian mass formula with q^2 = 16.
// The historical printed form with a 12 * 5^l * l! denominator is available
// through the literal_* functions for comparison only; it is not an integer
// and disagrees with exhaustive enumeration.

#pragma once

#include "sdgqc/bigcount.hpp"

namespace sdgqc {

BigCount n_sd_binary(unsigned l);
BigCount m_sd_binary(unsigned l);
BigCount t_type2(unsigned l);
BigCount s_type2(unsigned l);
BigCount n_sd_hermitian16(unsigned l);
BigCount m_sd_hermitian16(unsigned l);

// Closed forms of the ratios used by the existence inequalities.
BigCount ratio_sd_binary(unsigned l);     // N(2,l)/M(2,l) = 2^{l/2-1} + 1
BigCount ratio_type2(unsigned l);         // T(2,l)/S(2,l) = 2^{l/2-2} + 1
BigCount ratio_sd_hermitian16(unsigned l);  // N(16,l)/M(16,l) = 2^{2l-2} + 1

/// prod_{i=1}^{l/2-1} (2^{4i+2}+1) / (12 * 5^l * l!), term by term.
BigRational literal_n_sd_hermitian16(unsigned l);
/// prod_{i=1}^{l/2-2} (2^{4i+2}+1) / (12 * 5^l * l!), term by term.
BigRational literal_m_sd_hermitian16(unsigned l);

}  // namespace sdgqc
