#include "sdgqc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sdgqc {

GqcProfile::GqcProfile(std::vector<std::size_t> co_indices) : co_indices_(std::move(co_indices)) {
  if (std::find(co_indices_.begin(), co_indices_.end(), std::size_t{0}) != co_indices_.end()) {
    throw std::invalid_argument("GqcProfile: co-indices must be positive");
  }
}

GqcProfile GqcProfile::uniform(std::size_t m, std::size_t sections) {
  return GqcProfile(std::vector<std::size_t>(sections, m));
}

GqcProfile GqcProfile::mixed_3_5(std::size_t l) {
  std::vector<std::size_t> m(l, 3);
  m.insert(m.end(), l, 5);
  return GqcProfile(std::move(m));
}

std::size_t GqcProfile::total_length() const noexcept {
  return std::accumulate(co_indices_.begin(), co_indices_.end(), std::size_t{0});
}

bool GqcProfile::is_quasi_cyclic() const noexcept {
  return std::adjacent_find(co_indices_.begin(), co_indices_.end(), std::not_equal_to<>()) == co_indices_.end();
}

namespace {

void require_binary(const Vector& x, const char* what) {
  if (x.field() != FieldId::GF2) throw FieldMismatch(std::string(what) + ": binary vector required");
}

void require_pair_lengths(const Vector& x, const Vector& s) {
  if (x.size() != s.size()) {
    throw std::invalid_argument("construction map: length mismatch " + std::to_string(x.size()) + " vs " +
                                std::to_string(s.size()));
  }
}

// Binary vector of bit `b` of every symbol of s.
Vector bit_plane(const Vector& s, unsigned b) {
  Vector out(FieldId::GF2, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.set(i, static_cast<Symbol>((s[i] >> b) & 1U));
  return out;
}

void require_pair(const ConstructionPair& p, FieldId expected) {
  if (p.c1.field() != FieldId::GF2) throw FieldMismatch("construction: c1 must be binary");
  if (p.c2.field() != expected) {
    throw FieldMismatch("construction: c2 must be over " + std::string(field_name(expected)));
  }
  if (p.c1.length() != p.c2.length()) {
    throw std::invalid_argument("construction: c1 and c2 lengths differ (" + std::to_string(p.c1.length()) + " vs " +
                                std::to_string(p.c2.length()) + ")");
  }
}

}  // namespace

Vector cubic_map(const Vector& x, const Vector& s) {
  require_binary(x, "cubic_map");
  if (s.field() != FieldId::GF4) throw FieldMismatch("cubic_map: GF(4) vector required");
  require_pair_lengths(x, s);
  const Vector a = bit_plane(s, 0);
  const Vector b = bit_plane(s, 1);
  const Vector blocks[] = {x + a, x + b, x + a + b};
  return concat(blocks);
}

Vector quintic_map(const Vector& x, const Vector& s) {
  require_binary(x, "quintic_map");
  if (s.field() != FieldId::GF16) throw FieldMismatch("quintic_map: GF(16) vector required");
  require_pair_lengths(x, s);
  const Vector a0 = bit_plane(s, 0);
  const Vector a1 = bit_plane(s, 1);
  const Vector a2 = bit_plane(s, 2);
  const Vector a3 = bit_plane(s, 3);
  const Vector blocks[] = {x + a0, x + a0 + a1, x + a1 + a2, x + a2 + a3, x + a3};
  return concat(blocks);
}

LinearCode cubic_code(const ConstructionPair& pair) {
  require_pair(pair, FieldId::GF4);
  const std::size_t l = pair.length();
  const Vector zero_x(FieldId::GF2, l);
  const Vector zero_s(FieldId::GF4, l);
  std::vector<Vector> rows;
  for (const auto& x : pair.c1.generator()) rows.push_back(cubic_map(x, zero_s));
  // The GF(4)-span of a row s is the GF(2)-span of s and w*s.
  for (const auto& s : binary_spanning_set(pair.c2)) rows.push_back(cubic_map(zero_x, s));
  return LinearCode::from_rows(FieldId::GF2, 3 * l, rows);
}

LinearCode quintic_code(const ConstructionPair& pair) {
  require_pair(pair, FieldId::GF16);
  const std::size_t l = pair.length();
  const Vector zero_x(FieldId::GF2, l);
  const Vector zero_s(FieldId::GF16, l);
  std::vector<Vector> rows;
  for (const auto& x : pair.c1.generator()) rows.push_back(quintic_map(x, zero_s));
  for (const auto& s : binary_spanning_set(pair.c2)) rows.push_back(quintic_map(zero_x, s));
  return LinearCode::from_rows(FieldId::GF2, 5 * l, rows);
}

std::pair<Vector, Vector> crt_components(const Vector& c) {
  require_binary(c, "crt_components");
  if (c.size() % 5 != 0) throw std::invalid_argument("crt_components: length must be divisible by 5");
  const std::size_t l = c.size() / 5;
  Vector x(FieldId::GF2, l);
  Vector s(FieldId::GF16, l);
  Symbol alpha_pow[5];
  alpha_pow[0] = 1;
  for (int j = 1; j < 5; ++j) alpha_pow[j] = gf::mul(FieldId::GF16, alpha_pow[j - 1], gf::kAlpha);
  for (std::size_t i = 0; i < l; ++i) {
    Symbol at_one = 0;
    Symbol at_alpha = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (c[j * l + i]) {
        at_one ^= 1;
        at_alpha ^= alpha_pow[j];
      }
    }
    x.set(i, at_one);
    s.set(i, at_alpha);
  }
  return {x, s};
}

Vector block_rotate(const Vector& c, std::size_t blocks) {
  if (blocks == 0 || c.size() % blocks != 0) {
    throw std::invalid_argument("block_rotate: length " + std::to_string(c.size()) + " not divisible into " +
                                std::to_string(blocks) + " blocks");
  }
  const std::size_t len = c.size() / blocks;
  Vector out(c.field(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.set((i + len) % c.size(), c[i]);
  return out;
}

namespace {

void require_interleave_shape(const Vector& c, std::size_t sections, std::size_t m) {
  if (c.size() != sections * m) {
    throw std::invalid_argument("interleave: length " + std::to_string(c.size()) + " != " + std::to_string(m) +
                                " * " + std::to_string(sections));
  }
}

}  // namespace

Vector interleave(const Vector& c, std::size_t sections, std::size_t m) {
  require_interleave_shape(c, sections, m);
  Vector out(c.field(), c.size());
  for (std::size_t i = 0; i < sections; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(i * m + j, c[j * sections + i]);
  return out;
}

Vector deinterleave(const Vector& c, std::size_t sections, std::size_t m) {
  require_interleave_shape(c, sections, m);
  Vector out(c.field(), c.size());
  for (std::size_t i = 0; i < sections; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(j * sections + i, c[i * m + j]);
  return out;
}

LinearCode interleave(const LinearCode& c, std::size_t sections, std::size_t m) {
  std::vector<Vector> rows;
  for (const auto& r : c.generator()) rows.push_back(interleave(r, sections, m));
  return LinearCode::from_rows(c.field(), c.length(), rows);
}

Vector section_shift(const Vector& c, const GqcProfile& profile) {
  if (c.size() != profile.total_length()) {
    throw std::invalid_argument("section_shift: length " + std::to_string(c.size()) + " does not match profile total " +
                                std::to_string(profile.total_length()));
  }
  Vector out(c.field(), c.size());
  std::size_t base = 0;
  for (auto m : profile.co_indices()) {
    for (std::size_t t = 0; t < m; ++t) out.set(base + (t + 1) % m, c[base + t]);
    base += m;
  }
  return out;
}

bool is_gqc_invariant(const LinearCode& c, const GqcProfile& profile) {
  if (c.length() != profile.total_length()) {
    throw std::invalid_argument("is_gqc_invariant: code length " + std::to_string(c.length()) +
                                " does not match profile total " + std::to_string(profile.total_length()));
  }
  // The shift is a bijection, so mapping generators into the code suffices.
  return std::all_of(c.generator().begin(), c.generator().end(),
                     [&](const Vector& r) { return c.contains(section_shift(r, profile)); });
}

bool is_block_rotation_invariant(const LinearCode& c, std::size_t blocks) {
  return std::all_of(c.generator().begin(), c.generator().end(),
                     [&](const Vector& r) { return c.contains(block_rotate(r, blocks)); });
}

LinearCode direct_sum_gqc(const LinearCode& a, const LinearCode& b) {
  if (a.field() != FieldId::GF2 || b.field() != FieldId::GF2) throw FieldMismatch("direct_sum_gqc: binary codes required");
  if (a.length() % 3 != 0 || b.length() % 5 != 0 || a.length() / 3 != b.length() / 5) {
    throw std::invalid_argument("direct_sum_gqc: lengths " + std::to_string(a.length()) + " and " +
                                std::to_string(b.length()) + " are not 3l and 5l for a common l");
  }
  const std::size_t n = a.length() + b.length();
  const Vector za(FieldId::GF2, a.length());
  const Vector zb(FieldId::GF2, b.length());
  std::vector<Vector> rows;
  for (const auto& u : a.generator()) {
    const Vector parts[] = {u, zb};
    rows.push_back(concat(parts));
  }
  for (const auto& v : b.generator()) {
    const Vector parts[] = {za, v};
    rows.push_back(concat(parts));
  }
  return LinearCode::from_rows(FieldId::GF2, n, rows);
}

}  // namespace sdgqc
