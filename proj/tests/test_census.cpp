#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sdgqc/census.hpp"
#include "sdgqc/mass_formulas.hpp"
#include "sdgqc/rng.hpp"
#include "test_support.hpp"

using namespace sdgqc;
using sdgqc::test::bin;
using sdgqc::test::vec;

namespace {

CensusResult run(FieldId f, std::size_t n, bool type2 = false, std::optional<Vector> v = std::nullopt) {
  CensusOptions o;
  o.keep_codes = true;
  return census({f, n, type2, std::move(v)}, o);
}

// Unrestricted binary census, computed once per length.
const CensusResult& binary(std::size_t n) {
  static std::map<std::size_t, CensusResult> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, run(FieldId::GF2, n)).first;
  return it->second;
}

bool doubly_even_exhaustive(const LinearCode& c) {
  bool ok = true;
  for_each_codeword(c, [&](const Vector& w) { ok = ok && w.weight() % 4 == 0; });
  return ok;
}

std::vector<std::uint64_t> as_u64(const std::vector<BigCount>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST_CASE("binary census matches the mass formula") {
  const std::uint64_t expected[] = {1, 3, 15, 135, 2295};
  for (std::size_t n = 2; n <= 10; n += 2) {
    const auto& r = binary(n);
    CHECK(r.count == expected[n / 2 - 1]);
    CHECK(r.count == n_sd_binary(static_cast<unsigned>(n)));
    CHECK(r.codes.size() == expected[n / 2 - 1]);
    CHECK(std::is_sorted(r.codes.begin(), r.codes.end()));
    const Vector ones = Vector::parse(FieldId::GF2, std::string(n, '1'));
    for (const auto& c : r.codes) {
      REQUIRE(is_self_dual(c));
      REQUIRE(c.contains(ones));
    }
  }
}

TEST_CASE("census restricted to codes containing a vector") {
  CHECK(run(FieldId::GF2, 4, false, bin("1100")).count == 1);
  CHECK(run(FieldId::GF2, 8, false, bin("11000000")).count == m_sd_binary(8));
  CHECK(run(FieldId::GF2, 6, false, bin("111100")).count == m_sd_binary(6));
  CHECK(run(FieldId::GF2, 4, false, bin("1000")).count == 0);  // not isotropic
  CHECK(run(FieldId::GF2, 4, false, bin("1111")).count == 3);  // every code contains 1
  CHECK(run(FieldId::GF2, 4, false, bin("0000")).count == 3);
  for (const auto& c : run(FieldId::GF2, 8, false, bin("11000000")).codes) CHECK(c.contains(bin("11000000")));
}

TEST_CASE("Type II census") {
  const auto r = run(FieldId::GF2, 8, true);
  CHECK(r.count == 30);
  CHECK(r.count == t_type2(8));
  for (const auto& c : r.codes) {
    CHECK(is_type_ii(c));
    CHECK(doubly_even_exhaustive(c));
  }
  CHECK(run(FieldId::GF2, 8, true, bin("11110000")).count == s_type2(8));
  CHECK(run(FieldId::GF2, 8, true, bin("11000000")).count == 0);
  CHECK_THROWS_AS(census({FieldId::GF2, 12, true, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(census({FieldId::GF16, 8, true, std::nullopt}), std::invalid_argument);
}

TEST_CASE("Hermitian census over GF(16)") {
  const auto r2 = run(FieldId::GF16, 2);
  CHECK(r2.count == sdgqc::test::load_fixture("small_cases.json")["gf16_sd_n2"].get<int>());
  for (const auto& c : r2.codes) {
    const Symbol a = c.generator()[0][1];
    CHECK(c.generator()[0][0] == 1);
    CHECK(gf::mul(FieldId::GF16, a, gf::conj(FieldId::GF16, a)) == 1);
  }
  CHECK(run(FieldId::GF16, 4).count == 325);
  CHECK(run(FieldId::GF16, 4, false, vec(FieldId::GF16, "1100")).count == 5);
  // Any nonzero multiple of the fixed vector spans the same line.
  CHECK(run(FieldId::GF16, 4, false, vec(FieldId::GF16, "7700")).count == 5);
}

TEST_CASE("Hermitian census over GF(4)") {
  // prod_{i=0}^{n/2-1} (2^{2i+1} + 1)
  CHECK(run(FieldId::GF4, 2).count == 3);
  CHECK(run(FieldId::GF4, 4).count == 27);
  CHECK(run(FieldId::GF4, 6).count == 891);
}

TEST_CASE("census is independent of the thread count") {
  CensusOptions o;
  o.keep_codes = true;
  o.threads = 4;
  const auto& one = binary(10);
  const auto four = census({FieldId::GF2, 10, false, std::nullopt}, o);
  CHECK(one.count == four.count);
  CHECK(one.codes == four.codes);
  CHECK(one.states == four.states);
}

TEST_CASE("census limits fail loudly") {
  CHECK_THROWS_AS(census({FieldId::GF16, 40, false, std::nullopt}), InfeasibleCensus);
  CensusOptions tiny;
  tiny.max_codes = 10;
  CHECK_THROWS_AS(census({FieldId::GF2, 8, false, std::nullopt}, tiny), InfeasibleCensus);
  tiny.max_codes = 1'000'000;
  tiny.max_states = 100'000;
  CHECK_THROWS_AS(census({FieldId::GF2, 12, false, std::nullopt}, tiny), InfeasibleCensus);
  CHECK(census({FieldId::GF2, 5, false, std::nullopt}).count == 0);
  CHECK_THROWS_AS(census({FieldId::GF2, 4, false, bin("110")}), std::invalid_argument);
  CHECK_THROWS_AS(census({FieldId::GF2, 4, false, vec(FieldId::GF4, "1100")}), std::invalid_argument);
}

TEST_CASE("Type II generator criterion agrees with exhaustive check") {
  for (std::size_t n = 2; n <= 10; n += 2)
    for (const auto& c : binary(n).codes) REQUIRE(is_type_ii(c) == doubly_even_exhaustive(c));
  // Beyond the census limit: random self-dual codes of length 12 to 16.
  Rng rng(31);
  int type2_seen = 0;
  for (std::size_t n : {12U, 14U, 16U}) {
    for (int t = 0; t < 1500; ++t) {
      const auto c = sample_self_dual(FieldId::GF2, n, rng);
      const bool exhaustive = doubly_even_exhaustive(c);
      REQUIRE(is_type_ii(c) == exhaustive);
      type2_seen += exhaustive;
    }
  }
  CHECK(type2_seen > 0);
}

TEST_CASE("word counts by type") {
  const auto fixtures = sdgqc::test::load_fixture("small_cases.json");
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto& f = fixtures["word_types_ell" + std::to_string(l)];
    const auto w = word_type_counts(l);
    CHECK(as_u64(w.a1) == f["a1"].get<std::vector<std::uint64_t>>());
    CHECK(as_u64(w.a2) == f["a2"].get<std::vector<std::uint64_t>>());
    CHECK(as_u64(w.a3) == f["a3"].get<std::vector<std::uint64_t>>());
  }
  for (std::size_t l = 1; l <= 4; ++l) {
    const auto w = word_type_counts(l);
    BigCount s1 = 0, s2 = 0, s3 = 0;
    for (std::size_t d = 0; d <= 5 * l; ++d) {
      s1 += w.a1[d];
      s2 += w.a2[d];
      s3 += w.a3[d];
      const auto by_type = count_words_by_type(l, d);
      CHECK(by_type[0] == w.a1[d]);
      CHECK(by_type[1] == w.a2[d]);
      CHECK(by_type[2] == w.a3[d]);
    }
    const BigCount x = (BigCount(1) << l) - 1, s = (BigCount(1) << (4 * l)) - 1;
    CHECK(s1 == x * s);
    CHECK(s2 == s);
    CHECK(s3 == x);
  }
  CHECK_THROWS_AS(word_type_counts(7), InfeasibleCensus);
}

TEST_CASE("restricted word counts vanish at odd weight") {
  for (std::size_t l = 1; l <= 4; ++l) {
    const auto w = word_type_counts(l, true);
    for (std::size_t d = 1; d <= 5 * l; d += 2) {
      CHECK(w.a1[d] == 0);
      CHECK(w.a2[d] == 0);
      CHECK(w.a3[d] == 0);
    }
  }
}

TEST_CASE("sampler") {
  const auto& known = binary(4).codes;
  std::set<LinearCode> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c = sample_self_dual({FieldId::GF2, 4, seed});
    CHECK(std::find(known.begin(), known.end(), c) != known.end());
    CHECK(c == sample_self_dual({FieldId::GF2, 4, seed}));
    seen.insert(c);
  }
  CHECK(seen.size() == 3);

  const auto gf16 = run(FieldId::GF16, 2).codes;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = sample_self_dual({FieldId::GF16, 2, seed});
    CHECK(std::find(gf16.begin(), gf16.end(), c) != gf16.end());
  }

  Rng rng(12);
  for (FieldId f : {FieldId::GF2, FieldId::GF4, FieldId::GF16}) {
    for (std::size_t n : {2U, 6U, 16U, 40U}) {
      const auto c = sample_self_dual(f, n, rng);
      CHECK(c.dimension() == n / 2);
      CHECK(is_self_dual(c));
      if (f == FieldId::GF2) CHECK(c.contains(Vector::parse(FieldId::GF2, std::string(n, '1'))));
    }
  }
  CHECK_THROWS_AS(sample_self_dual({FieldId::GF2, 5, 0}), std::invalid_argument);
}

TEST_CASE("sampler output is pinned") {
  // Changing the generator or the draw order breaks these on purpose.
  CHECK(sample_self_dual({FieldId::GF2, 8, 42}) == sample_self_dual({FieldId::GF2, 8, 42}));
  const auto a = sample_self_dual({FieldId::GF2, 16, 1});
  const auto b = sample_self_dual({FieldId::GF2, 16, 2});
  CHECK(a != b);
}

TEST_CASE("quintic witness search") {
  const auto w = find_quintic_witness(4, 2, 1000, 9);
  CHECK(w.found);
  CHECK(w.min_distance >= 2);
  CHECK(w.min_distance == min_distance(w.code));
  CHECK(is_self_dual(w.code));
  const auto again = find_quintic_witness(4, 2, 1000, 9);
  CHECK(again.trials == w.trials);
  CHECK(again.code == w.code);
  // Self-dual binary codes of length 20 have distance at most 4.
  CHECK_FALSE(find_quintic_witness(4, 6, 20, 9).found);
  CHECK_THROWS_AS(find_quintic_witness(3, 2, 10, 0), std::invalid_argument);
}
