// Existence inequalities for self-dual 5-quasi-cyclic codes and the entropy
// asymptotics behind them.
//
// For length 5l and target distance d, a pair (C1, C2) yields a quintic code
// of distance < d only if it contains the preimage of some nonzero word of
// weight e < d. Counting pairs against words gives, after dividing by
// M(2,l) M(16,l),
//
//     A1 + A2 * r2 + A3 * r16  <  r2 * r16
//
// with r2 = N(2,l)/M(2,l) (or T/S for Type II) and r16 = N(16,l)/M(16,l).
//
// BoundMode::Exact evaluates exactly that, summing A-bounds over even
// e in [2, d). BoundMode::Literal evaluates the historical printed form: e
// runs over [0, d) and the coefficients are r - 1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sdgqc/bigcount.hpp"

namespace sdgqc {

enum class BoundMode : std::uint8_t { Literal, Exact };

std::string_view bound_mode_name(BoundMode m) noexcept;
/// "literal" or "exact"; throws std::invalid_argument otherwise.
BoundMode bound_mode_from_string(std::string_view s);

struct BoundReport {
  unsigned ell = 0;
  unsigned d = 0;
  BoundMode mode = BoundMode::Exact;
  bool type2 = false;
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
  BigRational delta;  // d / (5 l)
};

/// C(m, num/den) when num/den is an integer in [0, m], else 0.
BigCount binom0(unsigned m, long num, long den = 1);

BigCount a1_bound(unsigned ell, unsigned d);  // C(5l, d)
BigCount a2_bound(unsigned ell, unsigned d);  // C(l, d/2) 15^{d/2}
BigCount a3_bound(unsigned ell, unsigned d);  // C(l, d/5)

/// l even, d >= 1.
BoundReport theorem1_check(unsigned ell, unsigned d, BoundMode mode);
/// l a positive multiple of 8, d >= 1.
BoundReport theorem2_check(unsigned ell, unsigned d, BoundMode mode);

struct MaxDistance {
  unsigned d_star = 0;
  BoundReport report;  // the check at d_star
};

/// Largest d for which the inequality holds, scanning d = 1, 2, ... and
/// stopping at the first failure. `threads` parallelises the per-weight terms;
/// the result does not depend on it.
MaxDistance max_distance(unsigned ell, BoundMode mode, bool type2, unsigned threads = 1);

/// H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x) on [0, 1], with
/// H_q(0) = 0 and H_q(1) = log_q(q-1). Throws std::domain_error outside.
double entropy(unsigned q, double x);

/// The x in [0, (q-1)/q] with H_q(x) = y, for y in [0, 1], by bisection.
double inverse_entropy(unsigned q, double y);

/// sum_{j=0}^{r} (q-1)^j C(n, j); throws std::invalid_argument if r > n.
BigCount ball_volume(unsigned q, unsigned n, unsigned r);

enum class AsymptoteFamily : std::uint8_t { Quintic, QuinticType2 };

struct AsymptoteRow {
  unsigned ell = 0;
  unsigned d_star = 0;
  double delta = 0;      // d_star / (5 l)
  double gqc_delta = 0;  // 3 delta / 8, relative distance of the mixed 3/5 direct sum
};

std::vector<AsymptoteRow> asymptote_table(AsymptoteFamily family, const std::vector<unsigned>& ells, BoundMode mode,
                                          unsigned threads = 1);

}  // namespace sdgqc
