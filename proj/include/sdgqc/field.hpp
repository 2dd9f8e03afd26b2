// Arithmetic in GF(2), GF(4) and GF(16).
//
// GF(4)  = GF(2)[w] / (w^2 + w + 1)
// GF(16) = GF(2)[a] / (a^4 + a^3 + a^2 + a + 1)
//
// The GF(16) modulus is the 5th cyclotomic polynomial, so a has
// multiplicative order 5. That is what lets rotation of five binary blocks
// act as multiplication by a in the quintic construction. The modulus is not
// primitive; a generator of the multiplicative group is 1 + a.
//
// Elements are stored as their coordinate vectors over the power basis,
// bit i = coefficient of the i-th power, so addition is XOR.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace sdgqc {

enum class FieldId : std::uint8_t { GF2 = 2, GF4 = 4, GF16 = 16 };

using Symbol = std::uint8_t;

constexpr unsigned order(FieldId f) noexcept { return static_cast<unsigned>(f); }

/// Bits per symbol: 1, 2 or 4.
constexpr unsigned degree(FieldId f) noexcept {
  switch (f) {
    case FieldId::GF2: return 1;
    case FieldId::GF4: return 2;
    case FieldId::GF16: return 4;
  }
  return 0;
}

/// Parses 2, 4 or 16; throws std::invalid_argument otherwise.
FieldId field_from_order(unsigned q);

std::string_view field_name(FieldId f) noexcept;

namespace gf {

namespace detail {

constexpr Symbol clmul_reduce(Symbol a, Symbol b, unsigned deg, unsigned modulus) {
  unsigned r = 0;
  for (unsigned i = 0; i < deg; ++i) {
    if ((b >> i) & 1U) r ^= static_cast<unsigned>(a) << i;
  }
  for (int i = static_cast<int>(2 * deg) - 2; i >= static_cast<int>(deg); --i) {
    if ((r >> i) & 1U) r ^= modulus << (i - static_cast<int>(deg));
  }
  return static_cast<Symbol>(r);
}

template <unsigned Deg, unsigned Modulus>
constexpr auto make_mul_table() {
  constexpr unsigned q = 1U << Deg;
  std::array<std::array<Symbol, q>, q> t{};
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      t[a][b] = clmul_reduce(static_cast<Symbol>(a), static_cast<Symbol>(b), Deg, Modulus);
  return t;
}

inline constexpr auto kMul4 = make_mul_table<2, 0b111>();
inline constexpr auto kMul16 = make_mul_table<4, 0b11111>();

template <std::size_t Q>
constexpr auto make_inv_table(const std::array<std::array<Symbol, Q>, Q>& mul) {
  std::array<Symbol, Q> inv{};
  for (unsigned a = 1; a < Q; ++a)
    for (unsigned b = 1; b < Q; ++b)
      if (mul[a][b] == 1) inv[a] = static_cast<Symbol>(b);
  return inv;
}

inline constexpr auto kInv4 = make_inv_table(kMul4);
inline constexpr auto kInv16 = make_inv_table(kMul16);

}  // namespace detail

// Unchecked kernels. Callers guarantee operands are < order(f).

constexpr Symbol add(Symbol a, Symbol b) noexcept { return a ^ b; }

constexpr Symbol mul(FieldId f, Symbol a, Symbol b) noexcept {
  switch (f) {
    case FieldId::GF2: return a & b;
    case FieldId::GF4: return detail::kMul4[a][b];
    case FieldId::GF16: return detail::kMul16[a][b];
  }
  return 0;
}

/// The order-2 automorphism: x -> x^2 on GF(4), x -> x^4 on GF(16), identity on GF(2).
constexpr Symbol conj(FieldId f, Symbol a) noexcept {
  switch (f) {
    case FieldId::GF2: return a;
    case FieldId::GF4: return detail::kMul4[a][a];
    case FieldId::GF16: {
      const Symbol a2 = detail::kMul16[a][a];
      return detail::kMul16[a2][a2];
    }
  }
  return a;
}

/// 0 maps to 0.
constexpr Symbol inv(FieldId f, Symbol a) noexcept {
  switch (f) {
    case FieldId::GF2: return a;
    case FieldId::GF4: return detail::kInv4[a];
    case FieldId::GF16: return detail::kInv16[a];
  }
  return 0;
}

inline constexpr Symbol kOmega = 0b10;  // w in GF(4)
inline constexpr Symbol kAlpha = 0b10;  // a in GF(16)

}  // namespace gf

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked field element: (field, encoding).
class FieldElement {
 public:
  constexpr FieldElement() = default;
  /// Throws std::invalid_argument when value >= q.
  FieldElement(FieldId field, unsigned value);

  constexpr FieldId field() const noexcept { return field_; }
  constexpr Symbol value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldId field_ = FieldId::GF2;
  Symbol value_ = 0;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement conjugate(const FieldElement& a);
FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, unsigned e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/// (a0, a1, a2, a3) with a = a0 + a1*alpha + a2*alpha^2 + a3*alpha^3. GF(16) only.
std::array<std::uint8_t, 4> expand_binary(const FieldElement& a);
FieldElement compose_binary(const std::array<std::uint8_t, 4>& bits);

// Text encoding of a single symbol: '0'/'1' for GF(2), '0'..'3' for GF(4),
// lowercase hex for GF(16).
char symbol_to_char(FieldId f, Symbol s);
/// Throws std::invalid_argument on a character outside the field's alphabet.
Symbol symbol_from_char(FieldId f, char c);

}  // namespace sdgqc
