#include "sdgqc/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "sdgqc/census.hpp"
#include "sdgqc/gv_bounds.hpp"
#include "sdgqc/mass_formulas.hpp"

namespace sdgqc {

namespace {

SelftestCheck compare(std::string name, const BigCount& counted, const BigRational& expected) {
  SelftestCheck c;
  c.name = std::move(name);
  c.passed = BigRational(counted) == expected;
  c.detail = "census " + to_decimal(counted) + ", formula " + to_decimal(expected);
  return c;
}

BigCount count(FieldId f, std::size_t n, bool type2, const char* containing, unsigned threads) {
  CensusQuery q{f, n, type2, std::nullopt};
  if (containing) q.containing = Vector::parse(f, containing);
  CensusOptions o;
  o.threads = threads;
  return census(q, o).count;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestOptions& opts) {
  std::vector<SelftestCheck> checks;
  const unsigned th = opts.threads;

  for (unsigned n : {2U, 4U, 6U, 8U, 10U}) {
    checks.push_back(compare("binary self-dual n=" + std::to_string(n), count(FieldId::GF2, n, false, nullptr, th),
                             BigRational(n_sd_binary(n))));
  }
  checks.push_back(compare("binary self-dual containing 1100 n=4", count(FieldId::GF2, 4, false, "1100", th),
                           BigRational(m_sd_binary(4))));
  checks.push_back(compare("binary self-dual containing 11000000 n=8", count(FieldId::GF2, 8, false, "11000000", th),
                           BigRational(m_sd_binary(8))));
  checks.push_back(
      compare("Type II n=8", count(FieldId::GF2, 8, true, nullptr, th), BigRational(t_type2(8))));
  checks.push_back(compare("Type II containing 11110000 n=8", count(FieldId::GF2, 8, true, "11110000", th),
                           BigRational(s_type2(8))));

  for (unsigned n : {2U, 4U}) {
    const BigRational formula =
        opts.literal_paper ? literal_n_sd_hermitian16(n) : BigRational(n_sd_hermitian16(n));
    checks.push_back(compare("GF(16) Hermitian self-dual n=" + std::to_string(n),
                             count(FieldId::GF16, n, false, nullptr, th), formula));
  }
  {
    const BigRational formula = opts.literal_paper ? literal_m_sd_hermitian16(4) : BigRational(m_sd_hermitian16(4));
    checks.push_back(compare("GF(16) Hermitian self-dual containing 1100 n=4",
                             count(FieldId::GF16, 4, false, "1100", th), formula));
  }

  {
    SelftestCheck c{"entropy identity 4 H16(x) = x log2(15) + H2(x)", true, ""};
    double worst = 0;
    for (int i = 1; i <= 99; ++i) {
      const double x = i / 100.0;
      worst = std::max(worst, std::abs(4 * entropy(16, x) - (x * std::log2(15.0) + entropy(2, x))));
    }
    c.passed = worst <= 1e-12;
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3g on 99-point grid", worst);
    c.detail = buf;
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace sdgqc
