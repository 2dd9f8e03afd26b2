// Linear codes over GF(2), GF(4), GF(16) held in canonical RREF form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdgqc/bigcount.hpp"
#include "sdgqc/field.hpp"
#include "sdgqc/vector.hpp"

namespace sdgqc {

/// Thrown when an exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A k-dimensional subspace of GF(q)^n. The generator matrix is always the
/// unique reduced row echelon form of the row space, so two codes are equal
/// exactly when their generator matrices are.
class LinearCode {
 public:
  LinearCode() = default;

  /// Row space of `rows`. Throws on ragged rows or rows over another field.
  static LinearCode from_rows(FieldId field, std::size_t n, std::span<const Vector> rows);
  static LinearCode zero(FieldId field, std::size_t n);
  static LinearCode full(FieldId field, std::size_t n);

  FieldId field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }

  const std::vector<Vector>& generator() const noexcept { return rows_; }
  /// Pivot column of each generator row, strictly increasing.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection onto the code along the pivot columns; zero iff v is a codeword.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  /// span(C, v) without re-running full elimination.
  LinearCode extended(const Vector& v) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;
  friend auto operator<=>(const LinearCode&, const LinearCode&) = default;

 private:
  FieldId field_ = FieldId::GF2;
  std::size_t n_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;
};

LinearCode dual(const LinearCode& c, InnerProduct ip);
inline LinearCode dual(const LinearCode& c) { return dual(c, default_inner_product(c.field())); }

bool is_self_orthogonal(const LinearCode& c, InnerProduct ip);
bool is_self_dual(const LinearCode& c, InnerProduct ip);
inline bool is_self_dual(const LinearCode& c) { return is_self_dual(c, default_inner_product(c.field())); }

/// Binary, Euclidean self-dual and doubly even. Uses the generator criterion:
/// a self-orthogonal code spanned by doubly-even rows is doubly even.
bool is_type_ii(const LinearCode& c);

struct EnumerationOptions {
  /// Largest admissible number of codewords q^k.
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

/// counts[w] = number of codewords of Hamming weight w, w in [0, n].
struct WeightTally {
  std::vector<BigCount> counts;

  BigCount total() const;
  /// Smallest nonzero weight with a nonzero count, or 0 for the zero code.
  std::size_t min_nonzero_weight() const;
  friend bool operator==(const WeightTally&, const WeightTally&) = default;
};

WeightTally weight_tally(const LinearCode& c, const EnumerationOptions& opts = {});

/// Minimum weight over nonzero codewords. Throws std::invalid_argument for
/// the zero code and BudgetExceeded beyond opts.budget.
std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts = {});

/// Calls fn on every codeword, zero first, in Gray-code order. Single-threaded.
void for_each_codeword(const LinearCode& c, const std::function<void(const Vector&)>& fn,
                       std::uint64_t budget = std::uint64_t{1} << 24);

/// Binary generators of c viewed as a GF(2)-space: beta_b * row_j for every
/// row j and every power-basis element beta_b of the field.
std::vector<Vector> binary_spanning_set(const LinearCode& c);

}  // namespace sdgqc
