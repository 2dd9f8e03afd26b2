#include "sdgqc/vector.hpp"

#include <stdexcept>

namespace sdgqc {

void check_inner_product(FieldId f, InnerProduct ip) {
  const bool ok = (ip == InnerProduct::Euclidean) == (f == FieldId::GF2);
  if (!ok) {
    throw std::invalid_argument(std::string(inner_product_name(ip)) + " inner product is not used over " +
                                std::string(field_name(f)));
  }
}

std::string_view inner_product_name(InnerProduct ip) noexcept {
  return ip == InnerProduct::Euclidean ? "euclidean" : "hermitian";
}

Vector::Vector(FieldId field, std::size_t n)
    : field_(field), n_(n), words_((n * degree(field) + 63) / 64, 0) {}

Vector Vector::from_symbols(FieldId field, std::span<const Symbol> symbols) {
  Vector v(field, symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= order(field)) {
      throw std::invalid_argument("symbol " + std::to_string(symbols[i]) + " out of range for " +
                                  std::string(field_name(field)));
    }
    v.set(i, symbols[i]);
  }
  return v;
}

Vector Vector::parse(FieldId field, std::string_view text) {
  Vector v(field, text.size());
  for (std::size_t i = 0; i < text.size(); ++i) v.set(i, symbol_from_char(field, text[i]));
  return v;
}

namespace {

void require_compatible(const Vector& a, const Vector& b) {
  if (a.field() != b.field()) throw FieldMismatch("vector field mismatch");
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

Vector& Vector::operator+=(const Vector& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Vector Vector::scaled(Symbol c) const {
  if (c == 1) return *this;
  Vector out(field_, n_);
  if (c == 0) return out;
  for (std::size_t i = 0; i < n_; ++i) {
    const Symbol s = (*this)[i];
    if (s) out.set(i, gf::mul(field_, c, s));
  }
  return out;
}

Vector Vector::conjugated() const {
  if (field_ == FieldId::GF2) return *this;
  Vector out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) out.set(i, gf::conj(field_, (*this)[i]));
  return out;
}

std::size_t Vector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += packed_weight(field_, word);
  return w;
}

bool Vector::is_zero() const noexcept {
  for (auto word : words_)
    if (word) return false;
  return true;
}

std::size_t Vector::leading_index() const noexcept {
  const unsigned d = degree(field_);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return k * (64 / d) + static_cast<std::size_t>(__builtin_ctzll(words_[k])) / d;
  }
  return n_;
}

std::vector<Symbol> Vector::symbols() const {
  std::vector<Symbol> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
  return out;
}

std::string Vector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) s[i] = symbol_to_char(field_, (*this)[i]);
  return s;
}

Vector Vector::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > n_) throw std::out_of_range("Vector::slice out of range");
  Vector out(field_, len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, (*this)[pos + i]);
  return out;
}

Vector concat(std::span<const Vector> parts) {
  if (parts.empty()) return {};
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (p.field() != parts.front().field()) throw FieldMismatch("concat: field mismatch");
    n += p.size();
  }
  Vector out(parts.front().field(), n);
  std::size_t pos = 0;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) out.set(pos++, p[i]);
  return out;
}

Symbol inner(const Vector& u, const Vector& v, InnerProduct ip) {
  require_compatible(u, v);
  check_inner_product(u.field(), ip);
  if (u.field() == FieldId::GF2) {
    unsigned parity = 0;
    for (std::size_t k = 0; k < u.words().size(); ++k)
      parity ^= static_cast<unsigned>(__builtin_popcountll(u.words()[k] & v.words()[k]));
    return static_cast<Symbol>(parity & 1U);
  }
  Symbol acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc ^= gf::mul(u.field(), u[i], gf::conj(u.field(), v[i]));
  return acc;
}

}  // namespace sdgqc
