// Built-in consistency checks: census counts against the mass formulas at
// small lengths, and the GF(16)/GF(2) entropy identity on a grid.

#pragma once

#include <string>
#include <vector>

namespace sdgqc {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  /// Compare GF(16) censuses against the historical printed formula instead
  /// of the corrected product. Expected to fail.
  bool literal_paper = false;
  unsigned threads = 1;
};

std::vector<SelftestCheck> run_selftest(const SelftestOptions& opts = {});

}  // namespace sdgqc
