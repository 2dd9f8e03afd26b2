#include "sdgqc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>

namespace sdgqc {

LinearCode LinearCode::from_rows(FieldId field, std::size_t n, std::span<const Vector> rows) {
  std::vector<Vector> m;
  m.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].field() != field) throw FieldMismatch("from_rows: row " + std::to_string(i) + " is over another field");
    if (rows[i].size() != n) {
      throw std::invalid_argument("from_rows: row " + std::to_string(i) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    }
    if (!rows[i].is_zero()) m.push_back(rows[i]);
  }

  LinearCode c;
  c.field_ = field;
  c.n_ = n;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    m[r] = m[r].scaled(gf::inv(field, m[r][col]));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][col] != 0) m[i] += m[r].scaled(m[i][col]);
    }
    c.pivots_.push_back(col);
    ++r;
  }
  m.resize(r);
  c.rows_ = std::move(m);
  return c;
}

LinearCode LinearCode::zero(FieldId field, std::size_t n) { return from_rows(field, n, {}); }

LinearCode LinearCode::full(FieldId field, std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.emplace_back(field, n);
    rows.back().set(i, 1);
  }
  return from_rows(field, n, rows);
}

Vector LinearCode::reduce(Vector v) const {
  if (v.field() != field_ || v.size() != n_) throw std::invalid_argument("reduce: vector does not match code");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Symbol s = v[pivots_[r]];
    if (s) v += rows_[r].scaled(s);
  }
  return v;
}

bool LinearCode::contains(const Vector& v) const { return reduce(v).is_zero(); }

LinearCode LinearCode::extended(const Vector& v) const {
  Vector w = reduce(v);
  if (w.is_zero()) return *this;
  const std::size_t lead = w.leading_index();
  w = w.scaled(gf::inv(field_, w[lead]));
  LinearCode out = *this;
  for (auto& row : out.rows_) {
    if (row[lead]) row += w.scaled(row[lead]);
  }
  const auto pos = std::lower_bound(out.pivots_.begin(), out.pivots_.end(), lead) - out.pivots_.begin();
  out.pivots_.insert(out.pivots_.begin() + pos, lead);
  out.rows_.insert(out.rows_.begin() + pos, std::move(w));
  return out;
}

LinearCode dual(const LinearCode& c, InnerProduct ip) {
  check_inner_product(c.field(), ip);
  const std::size_t n = c.length();
  // Orthogonality to c under the Hermitian form is ordinary orthogonality to
  // conj(c), and conjugation preserves reduced echelon form.
  std::vector<Vector> g;
  for (const auto& row : c.generator()) g.push_back(ip == InnerProduct::Hermitian ? row.conjugated() : row);

  std::vector<bool> is_pivot(n, false);
  for (auto p : c.pivots()) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(c.field(), n);
    v.set(f, 1);
    for (std::size_t r = 0; r < g.size(); ++r) v.set(c.pivots()[r], g[r][f]);
    basis.push_back(std::move(v));
  }
  return LinearCode::from_rows(c.field(), n, basis);
}

bool is_self_orthogonal(const LinearCode& c, InnerProduct ip) {
  check_inner_product(c.field(), ip);
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (inner(g[i], g[j], ip) != 0) return false;
  return true;
}

bool is_self_dual(const LinearCode& c, InnerProduct ip) {
  check_inner_product(c.field(), ip);
  return 2 * c.dimension() == c.length() && is_self_orthogonal(c, ip);
}

bool is_type_ii(const LinearCode& c) {
  if (c.field() != FieldId::GF2) throw std::invalid_argument("is_type_ii: binary code required");
  if (!is_self_dual(c, InnerProduct::Euclidean)) return false;
  return std::all_of(c.generator().begin(), c.generator().end(), [](const Vector& r) { return r.weight() % 4 == 0; });
}

BigCount WeightTally::total() const {
  BigCount t = 0;
  for (const auto& v : counts) t += v;
  return t;
}

std::size_t WeightTally::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

std::vector<Vector> binary_spanning_set(const LinearCode& c) {
  std::vector<Vector> gens;
  for (const auto& row : c.generator())
    for (unsigned b = 0; b < degree(c.field()); ++b) gens.push_back(row.scaled(static_cast<Symbol>(1U << b)));
  return gens;
}

namespace {

struct Enumeration {
  FieldId field;
  std::size_t n;
  std::size_t words;                // 64-bit words per codeword
  unsigned bits;                    // number of binary generators
  std::vector<std::uint64_t> gens;  // bits x words, row-major
};

Enumeration prepare(const LinearCode& c, std::uint64_t budget) {
  const auto gens = binary_spanning_set(c);
  const auto bits = static_cast<unsigned>(gens.size());
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(order(c.field())) + "^" + std::to_string(c.dimension()) +
                         " codewords exceeds budget of " + std::to_string(budget));
  }
  Enumeration e{c.field(), c.length(), (c.length() * degree(c.field()) + 63) / 64, bits, {}};
  e.gens.reserve(bits * e.words);
  for (const auto& g : gens) e.gens.insert(e.gens.end(), g.words().begin(), g.words().end());
  return e;
}

// Visits the 2^(bits - prefix_bits) codewords whose top prefix_bits coefficients equal `prefix`.
template <class Visit>
void enumerate_chunk(const Enumeration& e, unsigned prefix_bits, std::uint64_t prefix, Visit&& visit) {
  const unsigned low = e.bits - prefix_bits;
  std::vector<std::uint64_t> cur(e.words, 0);
  for (unsigned b = 0; b < prefix_bits; ++b) {
    if ((prefix >> b) & 1U) {
      const auto* g = &e.gens[(low + b) * e.words];
      for (std::size_t w = 0; w < e.words; ++w) cur[w] ^= g[w];
    }
  }
  auto weight = [&] {
    std::size_t wt = 0;
    for (auto x : cur) wt += packed_weight(e.field, x);
    return wt;
  };
  visit(weight(), cur);
  const std::uint64_t count = std::uint64_t{1} << low;
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto* g = &e.gens[static_cast<std::size_t>(std::countr_zero(i)) * e.words];
    for (std::size_t w = 0; w < e.words; ++w) cur[w] ^= g[w];
    visit(weight(), cur);
  }
}

unsigned prefix_bits_for(unsigned threads, unsigned bits) {
  unsigned p = 0;
  while ((1U << (p + 1)) <= std::max(threads, 1U) && p + 1 <= bits && p < 16) ++p;
  return p;
}

std::vector<std::uint64_t> tally_parallel(const Enumeration& e, unsigned threads) {
  const unsigned pb = prefix_bits_for(threads, e.bits);
  const std::size_t chunks = std::size_t{1} << pb;
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(e.n + 1, 0));
  auto work = [&](std::size_t chunk) {
    auto& t = partial[chunk];
    enumerate_chunk(e, pb, chunk, [&](std::size_t wt, const std::vector<std::uint64_t>&) { ++t[wt]; });
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < chunks; ++k) pool.emplace_back(work, k);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> total(e.n + 1, 0);
  for (const auto& t : partial)
    for (std::size_t w = 0; w <= e.n; ++w) total[w] += t[w];
  return total;
}

}  // namespace

WeightTally weight_tally(const LinearCode& c, const EnumerationOptions& opts) {
  const auto e = prepare(c, opts.budget);
  const auto raw = tally_parallel(e, opts.threads);
  WeightTally t;
  t.counts.assign(raw.begin(), raw.end());
  return t;
}

std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts) {
  if (c.dimension() == 0) throw std::invalid_argument("min_distance: zero code has no nonzero codewords");
  const auto e = prepare(c, opts.budget);
  const unsigned pb = prefix_bits_for(opts.threads, e.bits);
  const std::size_t chunks = std::size_t{1} << pb;
  std::vector<std::size_t> best(chunks, std::numeric_limits<std::size_t>::max());
  auto work = [&](std::size_t chunk) {
    auto& b = best[chunk];
    enumerate_chunk(e, pb, chunk, [&](std::size_t wt, const std::vector<std::uint64_t>&) {
      if (wt != 0 && wt < b) b = wt;
    });
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < chunks; ++k) pool.emplace_back(work, k);
    for (auto& t : pool) t.join();
  }
  return *std::min_element(best.begin(), best.end());
}

void for_each_codeword(const LinearCode& c, const std::function<void(const Vector&)>& fn, std::uint64_t budget) {
  const auto e = prepare(c, budget);
  Vector v(c.field(), c.length());
  enumerate_chunk(e, 0, 0, [&](std::size_t, const std::vector<std::uint64_t>& words) {
    std::copy(words.begin(), words.end(), v.mutable_words().begin());
    fn(v);
  });
}

}  // namespace sdgqc
