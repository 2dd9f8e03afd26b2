#include "sdgqc/code_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sdgqc {

namespace {

constexpr std::string_view kMagic = "sdgqc-code v1";

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-comment line with any trailing '\r' removed; false at EOF.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("code file line " + std::to_string(line_no) + ": " + msg);
  }
};

std::size_t parse_header_int(LineReader& r, std::string_view key) {
  std::string line;
  if (!r.next(line)) r.fail("unexpected end of file, expected '" + std::string(key) + " <int>'");
  const std::string prefix = std::string(key) + " ";
  if (line.rfind(prefix, 0) != 0) r.fail("expected '" + std::string(key) + " <int>', got '" + line + "'");
  const std::string_view digits = std::string_view(line).substr(prefix.size());
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    r.fail("malformed integer in '" + line + "'");
  }
  return v;
}

}  // namespace

LinearCode read_code(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  if (line != kMagic) r.fail("bad magic line '" + line + "'");

  const std::size_t q = parse_header_int(r, "q");
  FieldId field{};
  try {
    field = field_from_order(static_cast<unsigned>(q));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  const std::size_t n = parse_header_int(r, "n");
  const std::size_t k = parse_header_int(r, "k");
  if (k > n) r.fail("k exceeds n");

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (!r.next(line)) r.fail("expected " + std::to_string(k) + " rows, found " + std::to_string(i));
    if (line.size() != n) r.fail("row has " + std::to_string(line.size()) + " symbols, expected " + std::to_string(n));
    try {
      rows.push_back(Vector::parse(field, line));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  while (r.next(line)) {
    if (!line.empty()) r.fail("trailing content after generator rows");
  }
  auto code = LinearCode::from_rows(field, n, rows);
  if (code.dimension() != k) {
    r.fail("rows span a space of dimension " + std::to_string(code.dimension()) + ", header says k " + std::to_string(k));
  }
  return code;
}

void write_code(std::ostream& out, const LinearCode& c) {
  out << kMagic << '\n'
      << "q " << order(c.field()) << '\n'
      << "n " << c.length() << '\n'
      << "k " << c.dimension() << '\n';
  for (const auto& row : c.generator()) out << row.to_string() << '\n';
}

LinearCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open code file '" + path.string() + "'");
  return read_code(in);
}

void save_code(const std::filesystem::path& path, const LinearCode& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write code file '" + path.string() + "'");
  write_code(out, c);
}

std::string code_to_string(const LinearCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

LinearCode code_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_code(is);
}

}  // namespace sdgqc
