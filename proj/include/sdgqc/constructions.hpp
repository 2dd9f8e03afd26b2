// Cubic and quintic constructions, block permutations and GQC structure.
//
// All construction maps emit coordinates in block order: the image of
// (x, s) for input length l is l coordinates of block 0, then block 1, ...
// `interleave` converts block order to section order, where each section
// holds one coordinate from every block and rotating the blocks becomes a
// cyclic shift inside every section.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sdgqc/linear_code.hpp"
#include "sdgqc/vector.hpp"

namespace sdgqc {

/// Co-indices (m_1, ..., m_L): the code lives in a product of L cyclic
/// sections, section j having length m_j.
class GqcProfile {
 public:
  GqcProfile() = default;
  /// Throws std::invalid_argument if any co-index is zero.
  explicit GqcProfile(std::vector<std::size_t> co_indices);

  /// `sections` copies of co-index m.
  static GqcProfile uniform(std::size_t m, std::size_t sections);
  /// l sections of length 3 followed by l sections of length 5.
  static GqcProfile mixed_3_5(std::size_t l);

  const std::vector<std::size_t>& co_indices() const noexcept { return co_indices_; }
  std::size_t total_length() const noexcept;
  bool is_quasi_cyclic() const noexcept;

  friend bool operator==(const GqcProfile&, const GqcProfile&) = default;

 private:
  std::vector<std::size_t> co_indices_;
};

/// A (binary, GF(4) or GF(16)) code pair of common length l.
struct ConstructionPair {
  LinearCode c1;
  LinearCode c2;

  std::size_t length() const noexcept { return c1.length(); }
};

/// (x + a | x + b | x + a + b) where s = a + b*w coordinatewise.
Vector cubic_map(const Vector& x, const Vector& s);
LinearCode cubic_code(const ConstructionPair& pair);

/// (x + a0 | x + a0 + a1 | x + a1 + a2 | x + a2 + a3 | x + a3) where
/// s = a0 + a1*alpha + a2*alpha^2 + a3*alpha^3 coordinatewise.
Vector quintic_map(const Vector& x, const Vector& s);
LinearCode quintic_code(const ConstructionPair& pair);

/// Evaluates each coordinate's block polynomial c0 + c1*y + ... + c4*y^4 at
/// y = 1 and y = alpha. On quintic_map(x, s) this returns (x, (1 + alpha) s).
std::pair<Vector, Vector> crt_components(const Vector& c);

/// (B_1, ..., B_b) -> (B_b, B_1, ..., B_{b-1}).
Vector block_rotate(const Vector& c, std::size_t blocks);

/// Block order (m blocks of length l) to section order (l sections of
/// length m): out[i*m + j] = in[j*l + i].
Vector interleave(const Vector& c, std::size_t sections, std::size_t m);
Vector deinterleave(const Vector& c, std::size_t sections, std::size_t m);
LinearCode interleave(const LinearCode& c, std::size_t sections, std::size_t m);

/// Shifts every section of `profile` cyclically by one position.
Vector section_shift(const Vector& c, const GqcProfile& profile);

/// True iff the simultaneous section shift maps the binary code onto itself.
bool is_gqc_invariant(const LinearCode& c, const GqcProfile& profile);

/// True iff block_rotate(., blocks) maps the code onto itself.
bool is_block_rotation_invariant(const LinearCode& c, std::size_t blocks);

/// {(u | v)} for a binary code a of length 3l and b of length 5l, both
/// already in section order. The result has profile mixed_3_5(l).
LinearCode direct_sum_gqc(const LinearCode& a, const LinearCode& b);

}  // namespace sdgqc
