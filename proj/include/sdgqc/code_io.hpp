// Text format for codes:
//
//   sdgqc-code v1
//   q <2|4|16>
//   n <int>
//   k <int>
//   <k lines of n symbols>
//
// Lines starting with '#' are comments and may appear anywhere. Writing
// always emits the canonical generator matrix, so write(read(write(c))) is
// byte-identical to write(c).

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdgqc/linear_code.hpp"

namespace sdgqc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);

LinearCode load_code(const std::filesystem::path& path);
void save_code(const std::filesystem::path& path, const LinearCode& c);

std::string code_to_string(const LinearCode& c);
LinearCode code_from_string(const std::string& text);

}  // namespace sdgqc
