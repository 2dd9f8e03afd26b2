#include "sdgqc/field.hpp"

#include <string>

namespace sdgqc {

FieldId field_from_order(unsigned q) {
  switch (q) {
    case 2: return FieldId::GF2;
    case 4: return FieldId::GF4;
    case 16: return FieldId::GF16;
    default: throw std::invalid_argument("unsupported field order " + std::to_string(q) + " (expected 2, 4 or 16)");
  }
}

std::string_view field_name(FieldId f) noexcept {
  switch (f) {
    case FieldId::GF2: return "GF(2)";
    case FieldId::GF4: return "GF(4)";
    case FieldId::GF16: return "GF(16)";
  }
  return "?";
}

FieldElement::FieldElement(FieldId field, unsigned value) : field_(field), value_(static_cast<Symbol>(value)) {
  if (value >= order(field)) {
    throw std::invalid_argument("element encoding " + std::to_string(value) + " out of range for " +
                                std::string(field_name(field)));
  }
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("field mismatch: " + std::string(field_name(a.field())) + " vs " +
                        std::string(field_name(b.field())));
  }
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field(), gf::add(a.value(), b.value())};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field(), gf::mul(a.field(), a.value(), b.value())};
}

FieldElement conjugate(const FieldElement& a) {
  if (a.field() == FieldId::GF2) throw std::invalid_argument("conjugate: GF(2) has no Hermitian conjugation");
  return {a.field(), gf::conj(a.field(), a.value())};
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return {a.field(), gf::inv(a.field(), a.value())};
}

FieldElement pow(const FieldElement& a, unsigned e) {
  FieldElement result{a.field(), 1};
  FieldElement base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::array<std::uint8_t, 4> expand_binary(const FieldElement& a) {
  if (a.field() != FieldId::GF16) throw std::invalid_argument("expand_binary: GF(16) element required");
  const Symbol v = a.value();
  return {static_cast<std::uint8_t>(v & 1U), static_cast<std::uint8_t>((v >> 1) & 1U),
          static_cast<std::uint8_t>((v >> 2) & 1U), static_cast<std::uint8_t>((v >> 3) & 1U)};
}

FieldElement compose_binary(const std::array<std::uint8_t, 4>& bits) {
  unsigned v = 0;
  for (unsigned i = 0; i < 4; ++i) {
    if (bits[i] > 1) throw std::invalid_argument("compose_binary: coefficients must be 0 or 1");
    v |= static_cast<unsigned>(bits[i]) << i;
  }
  return {FieldId::GF16, v};
}

char symbol_to_char(FieldId f, Symbol s) {
  if (s >= order(f)) throw std::invalid_argument("symbol out of range");
  return "0123456789abcdef"[s];
}

Symbol symbol_from_char(FieldId f, char c) {
  unsigned v = 16;
  if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
  else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a') + 10;
  if (v >= order(f)) {
    throw std::invalid_argument(std::string("invalid symbol '") + c + "' for " + std::string(field_name(f)));
  }
  return static_cast<Symbol>(v);
}

}  // namespace sdgqc
