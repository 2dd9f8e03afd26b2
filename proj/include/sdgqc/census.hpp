// Exhaustive census of self-dual codes, brute-force word counts for the
// quintic construction, and seeded uniform sampling of self-dual codes.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdgqc/bigcount.hpp"
#include "sdgqc/linear_code.hpp"
#include "sdgqc/rng.hpp"

namespace sdgqc {

class InfeasibleCensus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Self-dual codes of length n over `field` (Euclidean for GF(2), Hermitian
/// otherwise), optionally restricted to Type II and/or to codes containing
/// a given vector.
struct CensusQuery {
  FieldId field = FieldId::GF2;
  std::size_t n = 0;
  bool type2 = false;
  std::optional<Vector> containing;
};

struct CensusOptions {
  std::uint64_t max_codes = 1'000'000;
  /// Total number of candidate vectors examined across all levels.
  std::uint64_t max_states = 100'000'000;
  unsigned threads = 1;
  bool keep_codes = false;
};

struct CensusResult {
  BigCount count;
  std::vector<LinearCode> codes;  // sorted; filled when keep_codes is set
  std::uint64_t states = 0;
};

/// Breadth-first extension of isotropic subspaces: every self-orthogonal
/// code of dimension j is extended by each isotropic vector of its dual,
/// and the resulting (j+1)-dimensional codes are de-duplicated by canonical
/// form. Throws InfeasibleCensus when a limit is exceeded and
/// std::invalid_argument for inconsistent queries.
CensusResult census(const CensusQuery& query, const CensusOptions& opts = {});

/// Number of length-5l binary words of each weight that are images
/// quintic_map(x, s) of pairs of a given kind:
///   a1: x != 0, s != 0     a2: x == 0, s != 0     a3: x != 0, s == 0
/// Brute force over all x in GF(2)^l and s in GF(16)^l. With `restricted`,
/// only x of even weight and Hermitian-isotropic s are counted.
struct WordTypeCounts {
  std::vector<BigCount> a1, a2, a3;  // indexed by weight 0..5l
};

WordTypeCounts word_type_counts(std::size_t l, bool restricted = false);
std::array<BigCount, 3> count_words_by_type(std::size_t l, std::size_t d, bool restricted = false);

struct SdSampler {
  FieldId field = FieldId::GF2;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Uniformly random self-dual code: starting from {0}, repeatedly adjoin a
/// uniformly chosen isotropic vector of the current dual that is not already
/// in the code. n must be even.
LinearCode sample_self_dual(const SdSampler& s);
LinearCode sample_self_dual(FieldId field, std::size_t n, Rng& rng);

/// Uniform vector of the code (uniform GF(2)-combination of its binary spanning set).
Vector random_codeword(const LinearCode& c, Rng& rng);

/// v.v = 0 under the field's designated inner product.
bool is_isotropic(const Vector& v);

struct QuinticWitness {
  bool found = false;
  std::uint64_t trials = 0;  // trials used, including the successful one
  LinearCode code;           // block order; valid when found
  std::size_t min_distance = 0;
};

/// Samples independent self-dual pairs (binary, Hermitian GF(16)) of length l
/// and returns the first quintic code with minimum distance >= d. Trial t
/// draws from Rng(derive_seed(seed, t)), so the outcome depends only on
/// (l, d, seed) and the budget.
QuinticWitness find_quintic_witness(std::size_t l, std::size_t d, std::uint64_t max_trials, std::uint64_t seed);

}  // namespace sdgqc
