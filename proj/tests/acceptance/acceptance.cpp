// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances are fixed here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdgqc/census.hpp"
#include "sdgqc/constructions.hpp"
#include "sdgqc/gv_bounds.hpp"
#include "sdgqc/linear_code.hpp"
#include "sdgqc/mass_formulas.hpp"
#include "sdgqc/rng.hpp"

using namespace sdgqc;

namespace {

constexpr double kCensusSeconds = 60.0;
constexpr double kEntropyIdentityTol = 1e-12;
constexpr double kInverseEntropyExpected = 0.110025;
constexpr double kInverseEntropyTol = 1e-6;
constexpr double kBallRateTol = 0.01;
constexpr double kGqcConstantExpected = 0.041259;
constexpr double kGqcConstantTol = 1e-5;
constexpr double kChiSquare99Df2 = 9.21034;
constexpr int kConstructionTrials = 100;
constexpr int kCrtTrials = 1000;
constexpr std::uint64_t kWitnessBudget = 100'000;
constexpr int kUniformitySamples = 3000;
constexpr int kUniformitySeeds = 100;
constexpr int kUniformityMinAccepted = 95;

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool report() const {
    const bool ok = failures_.empty();
    std::cout << (ok ? "PASS" : "FAIL") << " AC" << id_ << ' ' << title_ << " (" << checks_ << " checks";
    for (const auto& n : notes_) std::cout << "; " << n;
    std::size_t shown = 0;
    for (const auto& f : failures_) {
      if (shown++ == 5) {
        std::cout << "; ... " << failures_.size() - 5 << " more";
        break;
      }
      std::cout << "; failed: " << f;
    }
    std::cout << ")\n";
    return ok;
  }

 private:
  int id_;
  std::string title_;
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <class... Ts>
std::string str(const Ts&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

Vector random_vector(FieldId f, std::size_t n, Rng& rng) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<Symbol>(rng.below(order(f))));
  return v;
}

LinearCode extended_hamming8() {
  std::vector<Vector> rows;
  for (const char* r : {"11110000", "00111100", "00001111", "01010101"}) rows.push_back(Vector::parse(FieldId::GF2, r));
  return LinearCode::from_rows(FieldId::GF2, 8, rows);
}

nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(SDGQC_FIXTURE_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

bool ac1() {
  Criterion c(1, "census equals mass formulas");
  const auto start = std::chrono::steady_clock::now();
  auto count = [](FieldId f, std::size_t n, bool type2 = false, std::optional<Vector> v = std::nullopt) {
    return census({f, n, type2, std::move(v)}).count;
  };
  const int binary[] = {1, 3, 15, 135};
  for (std::size_t n = 2; n <= 8; n += 2) {
    const auto got = count(FieldId::GF2, n);
    c.expect(got == binary[n / 2 - 1] && got == n_sd_binary(static_cast<unsigned>(n)), str("binary n=", n));
  }
  c.expect(count(FieldId::GF2, 8, true) == 30 && t_type2(8) == 30, "Type II n=8");
  c.expect(count(FieldId::GF2, 4, false, Vector::parse(FieldId::GF2, "1100")) == 1 && m_sd_binary(4) == 1,
           "containing v n=4");
  c.expect(count(FieldId::GF16, 2) == 5 && n_sd_hermitian16(2) == 5, "GF(16) n=2");
  c.expect(count(FieldId::GF16, 4) == 325 && n_sd_hermitian16(4) == 325, "GF(16) n=4");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < kCensusSeconds, str("runtime ", secs, " s"));
  c.note(str("runtime ", std::round(secs * 100) / 100, " s"));
  return c.report();
}

bool ac2() {
  Criterion c(2, "ratio anchors for even l <= 64");
  for (unsigned l = 4; l <= 64; l += 2) {
    const BigCount r2 = (BigCount(1) << (l / 2 - 1)) + 1;
    const BigCount r16 = (BigCount(1) << (2 * l - 2)) + 1;
    c.expect(n_sd_binary(l) % m_sd_binary(l) == 0 && n_sd_binary(l) / m_sd_binary(l) == r2, str("binary l=", l));
    c.expect(n_sd_hermitian16(l) % m_sd_hermitian16(l) == 0 && n_sd_hermitian16(l) / m_sd_hermitian16(l) == r16,
             str("GF(16) l=", l));
    c.expect(ratio_sd_binary(l) == r2 && ratio_sd_hermitian16(l) == r16, str("ratio helpers l=", l));
    // The printed RHS uses the binary factor 2^{(l-2)/2}+1, which is r2 itself.
    c.expect(theorem1_check(l, 1, BoundMode::Exact).rhs == r2 * r16, str("exact RHS l=", l));
  }
  return c.report();
}

bool ac3() {
  Criterion c(3, "constructions preserve self-duality and GQC structure");
  Rng rng(3);
  for (std::size_t l : {2U, 4U, 6U}) {
    for (int t = 0; t < kConstructionTrials; ++t) {
      const auto c1 = sample_self_dual(FieldId::GF2, l, rng);
      const auto c4 = sample_self_dual(FieldId::GF4, l, rng);
      const auto c16 = sample_self_dual(FieldId::GF16, l, rng);
      const auto cubic = cubic_code({c1, c4});
      const auto quintic = quintic_code({c1, c16});
      c.expect(is_self_dual(cubic), str("cubic self-dual l=", l, " t=", t));
      c.expect(is_block_rotation_invariant(cubic, 3), str("cubic rotation l=", l, " t=", t));
      c.expect(is_gqc_invariant(interleave(cubic, l, 3), GqcProfile::uniform(3, l)), str("cubic QC l=", l));
      c.expect(is_self_dual(quintic), str("quintic self-dual l=", l, " t=", t));
      c.expect(is_block_rotation_invariant(quintic, 5), str("quintic rotation l=", l, " t=", t));
      c.expect(is_gqc_invariant(interleave(quintic, l, 5), GqcProfile::uniform(5, l)), str("quintic QC l=", l));
    }
  }
  const auto hamming = extended_hamming8();
  for (int t = 0; t < 10; ++t) {
    const auto cubic = cubic_code({hamming, sample_self_dual(FieldId::GF4, 8, rng)});
    const auto quintic = quintic_code({hamming, sample_self_dual(FieldId::GF16, 8, rng)});
    c.expect(is_type_ii(cubic), str("cubic Type II t=", t));
    c.expect(is_type_ii(quintic), str("quintic Type II t=", t));
  }
  // One exhaustive confirmation over all 2^20 codewords.
  const auto tally = weight_tally(quintic_code({hamming, sample_self_dual(FieldId::GF16, 8, rng)}));
  bool doubly_even = true;
  for (std::size_t w = 0; w < tally.counts.size(); ++w) doubly_even = doubly_even && (tally.counts[w] == 0 || w % 4 == 0);
  c.expect(doubly_even, "exhaustive Type II weights");
  return c.report();
}

bool ac4() {
  Criterion c(4, "CRT identity");
  const Symbol one_plus_alpha = 1 ^ gf::kAlpha;
  Rng rng(4);
  for (int t = 0; t < kCrtTrials; ++t) {
    const std::size_t l = 1 + rng.below(16);
    const auto x = random_vector(FieldId::GF2, l, rng);
    const auto s = random_vector(FieldId::GF16, l, rng);
    const auto [y, z] = crt_components(quintic_map(x, s));
    c.expect(y == x && z == s.scaled(one_plus_alpha), str("trial ", t));
  }
  return c.report();
}

bool ac5() {
  Criterion c(5, "per-type bounds dominate brute-force counts");
  int a2_violations = 0;
  bool inside_region = true;
  for (unsigned l = 1; l <= 4; ++l) {
    const auto w = word_type_counts(l);
    for (unsigned d = 0; d <= 5 * l; ++d) {
      if (w.a2[d] > a2_bound(l, d)) {
        ++a2_violations;
        inside_region = inside_region && d % 2 == 0 && d > 2 * l && d <= 4 * l;
        c.expect(false, str("A2(", l, ",", d, ")=", to_decimal(w.a2[d]), " > ", to_decimal(a2_bound(l, d))));
      } else {
        c.expect(true, "");
      }
      c.expect(w.a3[d] <= a3_bound(l, d), str("a3 l=", l, " d=", d));
      // The zero word (d = 0) is not a nonzero codeword of any type.
      if (d > 0 && d % 5 == 0) c.expect(w.a3[d] == a3_bound(l, d), str("a3 equality l=", l, " d=", d));
    }
  }
  if (a2_violations > 0)
    c.note(str(a2_violations, " a2 violations", inside_region ? ", all at even d in (2l, 4l]" : ", some outside (2l, 4l]"));
  return c.report();
}

bool ac6() {
  Criterion c(6, "printed inequality at l = 2");
  const auto fail = theorem1_check(2, 2, BoundMode::Literal);
  c.expect(fail.lhs == 16 && fail.rhs == 10 && !fail.holds, "l=2 d=2");
  const auto ok = theorem1_check(2, 1, BoundMode::Literal);
  c.expect(ok.lhs == 6 && ok.rhs == 10 && ok.holds, "l=2 d=1");
  return c.report();
}

bool ac7() {
  Criterion c(7, "existence witnesses");
  for (auto [l, d] : {std::pair<unsigned, unsigned>{4, 2}, {6, 2}}) {
    c.expect(theorem1_check(l, d, BoundMode::Exact).holds, str("certified l=", l, " d=", d));
    const auto w = find_quintic_witness(l, d, kWitnessBudget, 7);
    c.expect(w.found && is_self_dual(w.code) && is_block_rotation_invariant(w.code, 5) &&
                 min_distance(w.code) >= d,
             str("witness l=", l, " d=", d));
    c.note(str("l=", l, ": ", w.trials, " trials, distance ", w.min_distance));
  }
  return c.report();
}

bool ac8() {
  Criterion c(8, "entropy suite");
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    c.expect(std::abs(4 * entropy(16, x) - (x * std::log2(15.0) + entropy(2, x))) < kEntropyIdentityTol,
             str("identity x=", x));
  }
  const double inv = inverse_entropy(2, 0.5);
  c.expect(std::abs(inv - kInverseEntropyExpected) < kInverseEntropyTol,
           str("inverse_entropy(2,1/2)=", inv, " vs ", kInverseEntropyExpected));
  const unsigned n = 4000;
  const double rate = log2_big(ball_volume(2, n, 1200)) / n;
  c.expect(std::abs(rate - entropy(2, 0.3)) < kBallRateTol, str("ball rate ", rate));
  const double gqc = 3 * inv / 8;
  c.expect(std::abs(gqc - kGqcConstantExpected) < kGqcConstantTol, str("GQC constant ", gqc));
  c.note(str("inverse_entropy(2,1/2)=", inv, ", GQC constant ", gqc));
  return c.report();
}

bool ac9() {
  Criterion c(9, "asymptote regression against the frozen oracle");
  const auto fixture = load_fixture("gv_fixtures.json");
  const auto& rows = fixture["asymptote"];
  c.expect(rows.size() == 16, "fixture size");
  for (const auto& e : rows) {
    const auto family = e["type2"].get<bool>() ? AsymptoteFamily::QuinticType2 : AsymptoteFamily::Quintic;
    const auto mode = bound_mode_from_string(e["mode"].get<std::string>());
    const unsigned l = e["ell"].get<unsigned>();
    const auto got = asymptote_table(family, {l}, mode);
    c.expect(got.size() == 1 && got[0].d_star == e["d_star"].get<unsigned>(), str("row ", e.dump()));
  }
  return c.report();
}

bool ac10() {
  Criterion c(10, "sampler uniformity");
  CensusOptions o;
  o.keep_codes = true;
  const auto codes = census({FieldId::GF2, 4, false, std::nullopt}, o).codes;
  c.expect(codes.size() == 3, "census size");
  int accepted = 0;
  for (int seed = 0; seed < kUniformitySeeds; ++seed) {
    std::vector<int> hist(codes.size(), 0);
    for (int i = 0; i < kUniformitySamples; ++i) {
      const auto code = sample_self_dual({FieldId::GF2, 4, derive_seed(static_cast<std::uint64_t>(seed), i)});
      const auto it = std::find(codes.begin(), codes.end(), code);
      if (it == codes.end()) {
        c.expect(false, "sample outside census");
        continue;
      }
      ++hist[static_cast<std::size_t>(it - codes.begin())];
    }
    const double expected = static_cast<double>(kUniformitySamples) / static_cast<double>(codes.size());
    double chi2 = 0;
    for (int h : hist) chi2 += (h - expected) * (h - expected) / expected;
    accepted += chi2 < kChiSquare99Df2;
  }
  c.expect(accepted >= kUniformityMinAccepted, str(accepted, "/", kUniformitySeeds, " accepted"));
  c.note(str(accepted, "/", kUniformitySeeds, " seeds accepted"));
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  int id = 0;
  for (auto f : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10}) {
    ++id;
    try {
      ok = f() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL AC" << id << " (exception: " << e.what() << ")\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
