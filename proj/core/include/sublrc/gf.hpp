// SPDX-License-Identifier: Apache-2.0
//
// Finite field arithmetic over GF(p^m) and over extensions GF(q^s) of an
// arbitrary GF(q).
//
// Elements are encoded as integers in [0, order). The integer is the base-B
// digit vector of the polynomial representative, least significant digit is
// the constant coefficient, where B is the order of the field being extended
// (p for FieldContext, q for ExtensionContext). 0 and 1 therefore always
// encode the additive and multiplicative identities.
//
// The modulus is the lexicographically smallest monic irreducible polynomial
// of the requested degree, comparing the encodings of its lower coefficients.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sublrc {

using Elem = std::uint32_t;

class FieldContext;

namespace detail {

/// Arithmetic for a quotient ring base[x]/(f) with f irreducible. Shared by
/// FieldContext (base GF(p)) and ExtensionContext (base any FieldContext).
class FieldTables {
 public:
  FieldTables() = default;
  FieldTables(unsigned characteristic, std::shared_ptr<const FieldContext> base,
              unsigned degree, std::uint64_t table_limit);

  Elem order() const noexcept { return order_; }
  Elem base_order() const noexcept { return base_order_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_table_[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * order_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

 private:
  using Poly = std::vector<Elem>;

  Elem base_add(Elem a, Elem b) const noexcept;
  Elem base_mul(Elem a, Elem b) const noexcept;
  Elem base_neg(Elem a) const noexcept;

  Elem add_digits(Elem a, Elem b) const noexcept;
  Poly to_digits(Elem a) const;
  Elem from_digits(const Poly& digits) const;
  Poly poly_mod(Poly num, const Poly& monic_divisor) const;
  bool is_irreducible(const Poly& monic) const;
  Poly find_modulus() const;
  Elem mul_slow(Elem a, Elem b) const;

  unsigned characteristic_ = 0;
  std::shared_ptr<const FieldContext> base_;
  Elem base_order_ = 0;
  unsigned degree_ = 0;
  Elem order_ = 0;
  Poly modulus_;

  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept;

/// GF(p^m). Immutable after construction and safe to share across threads.
class FieldContext {
 public:
  static constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 16;

  /// Throws NotPrime when p is composite, OrderTooLarge when p^m exceeds
  /// `table_limit`, BadParams when m is zero.
  static std::shared_ptr<const FieldContext> make(
      unsigned p, unsigned m, std::uint64_t table_limit = kDefaultTableLimit);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return tables_.degree(); }
  Elem order() const noexcept { return tables_.order(); }
  /// Coefficients c_0..c_m over GF(p); c_m == 1.
  const std::vector<Elem>& modulus() const noexcept { return tables_.modulus(); }
  /// "gf(p)" or "gf(p^m)".
  std::string descriptor() const;

  bool contains(Elem a) const noexcept { return a < order(); }
  Elem add(Elem a, Elem b) const noexcept { return tables_.add(a, b); }
  Elem sub(Elem a, Elem b) const noexcept { return tables_.sub(a, b); }
  Elem neg(Elem a) const noexcept { return tables_.neg(a); }
  Elem mul(Elem a, Elem b) const noexcept { return tables_.mul(a, b); }
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const { return tables_.inv(a); }
  Elem div(Elem a, Elem b) const { return tables_.div(a, b); }
  Elem pow(Elem a, std::uint64_t e) const noexcept { return tables_.pow(a, e); }

  FieldContext(unsigned p, unsigned m, std::uint64_t table_limit);

 private:
  unsigned p_;
  detail::FieldTables tables_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Parses "gf(p)" or "gf(p^m)". Throws Parse on malformed input.
FieldPtr parse_field(std::string_view descriptor,
                     std::uint64_t table_limit = FieldContext::kDefaultTableLimit);

/// GF(q^s) as a degree-s extension of a given GF(q), with the polynomial basis
/// 1, x, ..., x^{s-1} as the fixed basis over GF(q).
class ExtensionContext {
 public:
  ExtensionContext(FieldPtr base, unsigned s,
                   std::uint64_t table_limit = FieldContext::kDefaultTableLimit);

  const FieldContext& base() const noexcept { return *base_; }
  const FieldPtr& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return tables_.degree(); }
  Elem order() const noexcept { return tables_.order(); }
  /// Coefficients over the base field, monic.
  const std::vector<Elem>& modulus() const noexcept { return tables_.modulus(); }

  Elem add(Elem a, Elem b) const noexcept { return tables_.add(a, b); }
  Elem sub(Elem a, Elem b) const noexcept { return tables_.sub(a, b); }
  Elem neg(Elem a) const noexcept { return tables_.neg(a); }
  Elem mul(Elem a, Elem b) const noexcept { return tables_.mul(a, b); }
  Elem inv(Elem a) const { return tables_.inv(a); }
  Elem div(Elem a, Elem b) const { return tables_.div(a, b); }
  Elem pow(Elem a, std::uint64_t e) const noexcept { return tables_.pow(a, e); }

  /// x^{q^i}; i is taken modulo the degree.
  Elem frobenius(Elem x, std::uint64_t i) const noexcept;

  /// i-th fixed basis element (x^i).
  Elem basis(unsigned i) const;
  std::vector<Elem> basis() const;

  /// Coordinates over the base field with respect to the fixed basis.
  std::vector<Elem> expand(Elem x) const;
  /// Inverse of expand. Throws DimensionMismatch unless coords.size() == s.
  Elem recombine(std::span<const Elem> coords) const;

 private:
  FieldPtr base_;
  detail::FieldTables tables_;
};

}  // namespace sublrc
