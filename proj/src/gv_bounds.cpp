#include "sdgqc/gv_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "sdgqc/mass_formulas.hpp"

namespace sdgqc {

std::string_view bound_mode_name(BoundMode m) noexcept { return m == BoundMode::Literal ? "literal" : "exact"; }

BoundMode bound_mode_from_string(std::string_view s) {
  if (s == "literal") return BoundMode::Literal;
  if (s == "exact") return BoundMode::Exact;
  throw std::invalid_argument("unknown bound mode '" + std::string(s) + "' (expected literal or exact)");
}

BigCount binom0(unsigned m, long num, long den) {
  if (den <= 0) throw std::invalid_argument("binom0: denominator must be positive");
  if (num < 0 || num % den != 0) return 0;
  const long k = num / den;
  if (k > static_cast<long>(m)) return 0;
  return binomial(m, static_cast<unsigned>(k));
}

BigCount a1_bound(unsigned ell, unsigned d) { return binomial(5 * ell, d); }

BigCount a2_bound(unsigned ell, unsigned d) {
  if (d % 2 != 0) return 0;
  return binom0(ell, d, 2) * ipow(15, d / 2);
}

BigCount a3_bound(unsigned ell, unsigned d) { return binom0(ell, d, 5); }

namespace {

struct Terms {
  BigCount t1, t2, t3;
};

Terms terms_at(unsigned ell, unsigned e) { return {a1_bound(ell, e), a2_bound(ell, e), a3_bound(ell, e)}; }

struct Coefficients {
  BigCount c2, c16, rhs;
};

Coefficients coefficients(unsigned ell, BoundMode mode, bool type2) {
  if (mode == BoundMode::Literal) {
    const unsigned exp2 = type2 ? (ell - 4) / 2 : (ell - 2) / 2;
    Coefficients c{pow2(exp2), pow2(2 * ell - 2), 0};
    c.rhs = (c.c2 + 1) * (c.c16 + 1);
    return c;
  }
  Coefficients c{type2 ? ratio_type2(ell) : ratio_sd_binary(ell), ratio_sd_hermitian16(ell), 0};
  c.rhs = c.c2 * c.c16;
  return c;
}

bool term_included(BoundMode mode, unsigned e) {
  // Exact mode drops the zero word and odd weights, which cannot occur in a
  // binary self-dual code.
  return mode == BoundMode::Literal || (e >= 2 && e % 2 == 0);
}

void validate(unsigned ell, unsigned d, bool type2) {
  if (type2) {
    if (ell == 0 || ell % 8 != 0) {
      throw std::invalid_argument("theorem2_check: l must be a positive multiple of 8, got " + std::to_string(ell));
    }
  } else if (ell == 0 || ell % 2 != 0) {
    throw std::invalid_argument("theorem1_check: l must be positive and even, got " + std::to_string(ell));
  }
  if (d == 0) throw std::invalid_argument("bound check: d must be at least 1");
}

BoundReport assemble(unsigned ell, unsigned d, BoundMode mode, bool type2, const Coefficients& c, const BigCount& s1,
                     const BigCount& s2, const BigCount& s3) {
  BoundReport r;
  r.ell = ell;
  r.d = d;
  r.mode = mode;
  r.type2 = type2;
  r.lhs = s1 + c.c2 * s2 + c.c16 * s3;
  r.rhs = c.rhs;
  r.holds = r.lhs < r.rhs;
  r.delta = BigRational(d, 5 * ell);
  return r;
}

BoundReport check(unsigned ell, unsigned d, BoundMode mode, bool type2) {
  validate(ell, d, type2);
  const auto c = coefficients(ell, mode, type2);
  BigCount s1 = 0, s2 = 0, s3 = 0;
  for (unsigned e = 0; e < d; ++e) {
    if (!term_included(mode, e)) continue;
    const auto t = terms_at(ell, e);
    s1 += t.t1;
    s2 += t.t2;
    s3 += t.t3;
  }
  return assemble(ell, d, mode, type2, c, s1, s2, s3);
}

}  // namespace

BoundReport theorem1_check(unsigned ell, unsigned d, BoundMode mode) { return check(ell, d, mode, false); }

BoundReport theorem2_check(unsigned ell, unsigned d, BoundMode mode) { return check(ell, d, mode, true); }

MaxDistance max_distance(unsigned ell, BoundMode mode, bool type2, unsigned threads) {
  validate(ell, 1, type2);
  const auto c = coefficients(ell, mode, type2);
  const unsigned n = 5 * ell;
  threads = std::max(1U, threads);

  // Terms are computed in batches, in parallel across weights, then consumed in order.
  constexpr unsigned kBatch = 32;
  std::vector<Terms> batch;
  unsigned batch_start = 0;
  auto fill_batch = [&](unsigned start) {
    const unsigned count = std::min(kBatch, n + 1 - start);
    batch.assign(count, Terms{});
    auto work = [&](unsigned w) {
      for (unsigned i = w; i < count; i += threads) batch[i] = terms_at(ell, start + i);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min(threads, count); ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    batch_start = start;
  };

  BigCount s1 = 0, s2 = 0, s3 = 0;
  MaxDistance best;
  for (unsigned d = 1;; ++d) {
    // Sums currently cover e < d - 1; add e = d - 1.
    const unsigned e = d - 1;
    if (e >= batch_start + batch.size() || batch.empty()) fill_batch(e);
    if (term_included(mode, e)) {
      const auto& t = batch[e - batch_start];
      s1 += t.t1;
      s2 += t.t2;
      s3 += t.t3;
    }
    auto r = assemble(ell, d, mode, type2, c, s1, s2, s3);
    if (!r.holds) break;
    best.d_star = d;
    best.report = std::move(r);
    if (d > n) break;
  }
  return best;
}

double entropy(unsigned q, double x) {
  if (q < 2) throw std::domain_error("entropy: q must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy: x must lie in [0, 1]");
  const double lq = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1));
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
  return h / lq;
}

double inverse_entropy(unsigned q, double y) {
  if (q < 2) throw std::domain_error("inverse_entropy: q must be at least 2");
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("inverse_entropy: y must lie in [0, 1]");
  double lo = 0.0;
  double hi = static_cast<double>(q - 1) / static_cast<double>(q);
  // Endpoints are exact; bisection near the flat maximum would not be.
  if (y == 0.0) return 0.0;
  if (y == 1.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (entropy(q, mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

BigCount ball_volume(unsigned q, unsigned n, unsigned r) {
  if (r > n) throw std::invalid_argument("ball_volume: radius exceeds length");
  BigCount total = 0;
  BigCount binom = 1;  // C(n, j)
  BigCount power = 1;  // (q-1)^j
  for (unsigned j = 0; j <= r; ++j) {
    total += binom * power;
    binom = binom * (n - j) / (j + 1);
    power *= q - 1;
  }
  return total;
}

std::vector<AsymptoteRow> asymptote_table(AsymptoteFamily family, const std::vector<unsigned>& ells, BoundMode mode,
                                          unsigned threads) {
  std::vector<AsymptoteRow> rows;
  for (auto ell : ells) {
    const auto m = max_distance(ell, mode, family == AsymptoteFamily::QuinticType2, threads);
    AsymptoteRow row;
    row.ell = ell;
    row.d_star = m.d_star;
    row.delta = static_cast<double>(m.d_star) / (5.0 * ell);
    row.gqc_delta = 3.0 * row.delta / 8.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sdgqc
