#include "sdgqc/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <string>
#include <thread>

#include "sdgqc/constructions.hpp"

namespace sdgqc {

bool is_isotropic(const Vector& v) {
  if (v.field() == FieldId::GF2) return v.weight() % 2 == 0;
  return inner(v, v, InnerProduct::Hermitian) == 0;
}

namespace {

using CodeSet = std::set<LinearCode>;

bool admissible_start(const CensusQuery& q, const Vector& v) {
  if (v.is_zero() || !is_isotropic(v)) return false;
  return !q.type2 || v.weight() % 4 == 0;
}

// Extensions of one code by every admissible vector of its dual. Only one
// representative per one-dimensional extension is kept: the vector must be
// reduced against the code and have leading symbol 1. The reduced vectors of
// the dual form a complement W of the code inside it, so only W is walked.
void extend_code(const LinearCode& c, const CensusQuery& q, std::uint64_t budget, CodeSet& out,
                 std::uint64_t& states) {
  const LinearCode d = dual(c);
  std::vector<Vector> reduced;
  reduced.reserve(d.dimension());
  for (const auto& g : d.generator()) reduced.push_back(c.reduce(g));
  const LinearCode w = LinearCode::from_rows(c.field(), c.length(), reduced);
  for_each_codeword(
      w,
      [&](const Vector& v) {
        ++states;
        if (v.is_zero()) return;
        if (v[v.leading_index()] != 1) return;
        if (!is_isotropic(v)) return;
        if (q.type2 && v.weight() % 4 != 0) return;
        out.insert(c.extended(v));
      },
      budget);
}

}  // namespace

CensusResult census(const CensusQuery& query, const CensusOptions& opts) {
  if (query.type2 && (query.field != FieldId::GF2 || query.n % 8 != 0)) {
    throw std::invalid_argument("census: Type II requires binary codes of length divisible by 8");
  }
  if (query.containing && (query.containing->field() != query.field || query.containing->size() != query.n)) {
    throw std::invalid_argument("census: containing vector does not match field/length");
  }
  CensusResult result;
  result.count = 0;
  if (query.n % 2 != 0) return result;

  const double space = std::pow(static_cast<double>(order(query.field)), static_cast<double>(query.n));
  if (space > static_cast<double>(opts.max_states)) {
    throw InfeasibleCensus("census: ambient space " + std::to_string(order(query.field)) + "^" +
                           std::to_string(query.n) + " exceeds the state limit");
  }

  std::vector<LinearCode> level;
  if (query.containing && !query.containing->is_zero()) {
    if (!admissible_start(query, *query.containing)) return result;
    const Vector rows[] = {*query.containing};
    level.push_back(LinearCode::from_rows(query.field, query.n, rows));
  } else {
    level.push_back(LinearCode::zero(query.field, query.n));
  }

  const std::size_t target = query.n / 2;
  const unsigned threads = std::max(1U, opts.threads);
  while (!level.empty() && level.front().dimension() < target) {
    const std::size_t workers = std::min<std::size_t>(threads, level.size());
    std::vector<CodeSet> partial(workers);
    std::vector<std::uint64_t> states(workers, 0);
    std::atomic<bool> over{false};
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < level.size() && !over; i += workers) {
        extend_code(level[i], query, opts.max_states, partial[w], states[w]);
        if (partial[w].size() > opts.max_codes || states[w] + result.states > opts.max_states) over = true;
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    CodeSet merged;
    for (auto& p : partial) merged.merge(p);
    for (auto s : states) result.states += s;
    if (over || merged.size() > opts.max_codes || result.states > opts.max_states) {
      throw InfeasibleCensus("census: search exceeded limits (" + std::to_string(opts.max_codes) + " codes, " +
                             std::to_string(opts.max_states) + " states)");
    }
    level.assign(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
  }

  result.count = level.size();
  if (opts.keep_codes) result.codes = std::move(level);
  return result;
}

WordTypeCounts word_type_counts(std::size_t l, bool restricted) {
  if (l == 0 || 5 * l > 30) throw InfeasibleCensus("word_type_counts: requires 1 <= l and 5l <= 30");
  // Weight of a single coordinate's five-bit column, taken from quintic_map itself.
  std::size_t column_weight[2][16];
  for (Symbol x = 0; x < 2; ++x) {
    for (Symbol s = 0; s < 16; ++s) {
      const Symbol xs[] = {x};
      const Symbol ss[] = {s};
      column_weight[x][s] =
          quintic_map(Vector::from_symbols(FieldId::GF2, xs), Vector::from_symbols(FieldId::GF16, ss)).weight();
    }
  }
  Symbol norm[16];
  for (Symbol s = 0; s < 16; ++s) norm[s] = gf::mul(FieldId::GF16, s, gf::conj(FieldId::GF16, s));

  const std::size_t n = 5 * l;
  std::vector<std::uint64_t> a1(n + 1, 0), a2(n + 1, 0), a3(n + 1, 0);
  // Odometer over (x_i, s_i) in [0,2) x [0,16) for every coordinate i.
  std::vector<unsigned> digit(l, 0);
  for (;;) {
    std::size_t wt = 0;
    bool x_nonzero = false;
    bool s_nonzero = false;
    unsigned parity = 0;
    Symbol herm = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const unsigned x = digit[i] >> 4;
      const unsigned s = digit[i] & 15U;
      wt += column_weight[x][s];
      x_nonzero |= x != 0;
      s_nonzero |= s != 0;
      parity ^= x;
      herm ^= norm[s];
    }
    if (!restricted || (parity == 0 && herm == 0)) {
      if (x_nonzero && s_nonzero) ++a1[wt];
      else if (s_nonzero) ++a2[wt];
      else if (x_nonzero) ++a3[wt];
    }
    std::size_t i = 0;
    while (i < l && ++digit[i] == 32) digit[i++] = 0;
    if (i == l) break;
  }
  WordTypeCounts out;
  out.a1.assign(a1.begin(), a1.end());
  out.a2.assign(a2.begin(), a2.end());
  out.a3.assign(a3.begin(), a3.end());
  return out;
}

std::array<BigCount, 3> count_words_by_type(std::size_t l, std::size_t d, bool restricted) {
  const auto t = word_type_counts(l, restricted);
  if (d > 5 * l) return {0, 0, 0};
  return {t.a1[d], t.a2[d], t.a3[d]};
}

Vector random_codeword(const LinearCode& c, Rng& rng) {
  Vector v(c.field(), c.length());
  std::uint64_t bits = 0;
  unsigned left = 0;
  for (const auto& g : binary_spanning_set(c)) {
    if (left == 0) {
      bits = rng.next();
      left = 64;
    }
    if (bits & 1U) v += g;
    bits >>= 1;
    --left;
  }
  return v;
}

LinearCode sample_self_dual(FieldId field, std::size_t n, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("sample_self_dual: length must be even");
  LinearCode c = LinearCode::zero(field, n);
  while (2 * c.dimension() < n) {
    const LinearCode d = dual(c);
    for (;;) {
      const Vector v = random_codeword(d, rng);
      if (is_isotropic(v) && !c.contains(v)) {
        c = c.extended(v);
        break;
      }
    }
  }
  return c;
}

LinearCode sample_self_dual(const SdSampler& s) {
  Rng rng(s.seed);
  return sample_self_dual(s.field, s.n, rng);
}

QuinticWitness find_quintic_witness(std::size_t l, std::size_t d, std::uint64_t max_trials, std::uint64_t seed) {
  if (l == 0 || l % 2 != 0) throw std::invalid_argument("witness search needs even l > 0");
  QuinticWitness w;
  for (std::uint64_t t = 0; t < max_trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto c1 = sample_self_dual(FieldId::GF2, l, rng);
    const auto c2 = sample_self_dual(FieldId::GF16, l, rng);
    auto c = quintic_code({c1, c2});
    const std::size_t md = sdgqc::min_distance(c);
    w.trials = t + 1;
    if (md >= d) {
      w.found = true;
      w.code = std::move(c);
      w.min_distance = md;
      break;
    }
  }
  return w;
}

}  // namespace sdgqc
