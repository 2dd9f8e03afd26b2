// Packed vectors over GF(2), GF(4), GF(16).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgqc/field.hpp"

namespace sdgqc {

enum class InnerProduct : std::uint8_t { Euclidean, Hermitian };

/// Euclidean for GF(2), Hermitian for GF(4) and GF(16).
constexpr InnerProduct default_inner_product(FieldId f) noexcept {
  return f == FieldId::GF2 ? InnerProduct::Euclidean : InnerProduct::Hermitian;
}

/// Throws std::invalid_argument unless (f, ip) is Euclidean/GF(2) or Hermitian/GF(4|16).
void check_inner_product(FieldId f, InnerProduct ip);

std::string_view inner_product_name(InnerProduct ip) noexcept;

/// A length-n vector over a small field, packed degree(f) bits per symbol
/// into 64-bit words. Bits past the last symbol are always zero, so word-wise
/// comparison and hashing are exact.
class Vector {
 public:
  Vector() = default;
  Vector(FieldId field, std::size_t n);

  static Vector from_symbols(FieldId field, std::span<const Symbol> symbols);
  /// One character per symbol (see symbol_from_char).
  static Vector parse(FieldId field, std::string_view text);

  FieldId field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }

  Symbol operator[](std::size_t i) const noexcept {
    const unsigned d = degree(field_);
    const std::size_t per = 64 / d;
    return static_cast<Symbol>((words_[i / per] >> ((i % per) * d)) & ((1U << d) - 1));
  }
  void set(std::size_t i, Symbol s) noexcept {
    const unsigned d = degree(field_);
    const std::size_t per = 64 / d;
    const unsigned shift = static_cast<unsigned>((i % per) * d);
    auto& w = words_[i / per];
    w = (w & ~(((std::uint64_t{1} << d) - 1) << shift)) | (std::uint64_t{s} << shift);
  }

  Vector& operator+=(const Vector& other);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }

  Vector scaled(Symbol c) const;
  /// Entrywise conjugation (identity over GF(2)).
  Vector conjugated() const;

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the first nonzero symbol, or size() if zero.
  std::size_t leading_index() const noexcept;

  std::vector<Symbol> symbols() const;
  std::string to_string() const;

  /// Symbols [pos, pos+len).
  Vector slice(std::size_t pos, std::size_t len) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& a, const Vector& b) {
    if (auto c = a.field_ <=> b.field_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  FieldId field_ = FieldId::GF2;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Weight of a single packed word: number of nonzero symbols.
inline std::size_t packed_weight(FieldId f, std::uint64_t w) noexcept {
  switch (f) {
    case FieldId::GF2: break;
    case FieldId::GF4: w = (w | (w >> 1)) & 0x5555555555555555ULL; break;
    case FieldId::GF16:
      w |= w >> 1;
      w |= w >> 2;
      w &= 0x1111111111111111ULL;
      break;
  }
  return static_cast<std::size_t>(__builtin_popcountll(w));
}

Vector concat(std::span<const Vector> parts);

/// sum_i u_i * v_i (Euclidean) or sum_i u_i * conj(v_i) (Hermitian).
Symbol inner(const Vector& u, const Vector& v, InnerProduct ip);

}  // namespace sdgqc
