// SPDX-License-Identifier: Apache-2.0

#include "sublrc/gf.hpp"

#include <cctype>
#include <charconv>

#include "sublrc/error.hpp"

namespace sublrc {

namespace {

constexpr Elem kFullTableOrder = 1024;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

FieldTables::FieldTables(unsigned characteristic, std::shared_ptr<const FieldContext> base,
                         unsigned degree, std::uint64_t table_limit)
    : characteristic_(characteristic), base_(std::move(base)), degree_(degree) {
  if (degree_ == 0) throw Error(ErrorCode::BadParams, "extension degree must be positive");
  base_order_ = base_ ? base_->order() : characteristic_;
  std::uint64_t order = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    order *= base_order_;
    if (order > table_limit)
      throw Error(ErrorCode::OrderTooLarge,
                  "field order exceeds table limit " + std::to_string(table_limit));
  }
  order_ = static_cast<Elem>(order);
  modulus_ = find_modulus();

  neg_table_.resize(order_);
  for (Elem a = 0; a < order_; ++a) {
    Poly d = to_digits(a);
    for (auto& c : d) c = base_neg(c);
    neg_table_[a] = from_digits(d);
  }

  // Primitive element: g^((order-1)/r) != 1 for every prime r | order-1.
  const std::uint64_t group = order_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem generator = 1;
  if (order_ > 2) {
    for (Elem g = 2; g < order_; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(g, group / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
  }
  exp_.resize(group);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul_slow(x, generator);
  }
  inv_table_.assign(order_, 0);
  for (Elem a = 1; a < order_; ++a) inv_table_[a] = exp_[(group - log_[a]) % group];

  if (order_ <= kFullTableOrder) {
    add_table_.resize(std::size_t{order_} * order_);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) add_table_[std::size_t{a} * order_ + b] = add_digits(a, b);
    std::vector<Elem> mt(std::size_t{order_} * order_, 0);
    for (Elem a = 1; a < order_; ++a)
      for (Elem b = 1; b < order_; ++b) {
        std::uint32_t s = log_[a] + log_[b];
        if (s >= group) s -= static_cast<std::uint32_t>(group);
        mt[std::size_t{a} * order_ + b] = exp_[s];
      }
    mul_table_ = std::move(mt);
  }
}

Elem FieldTables::inv(Elem a) const {
  if (a == 0 || a >= order_) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_table_[a];
}

Elem FieldTables::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % group)) % group];
}

Elem FieldTables::base_add(Elem a, Elem b) const noexcept {
  if (base_) return base_->add(a, b);
  Elem s = a + b;
  return s >= characteristic_ ? s - characteristic_ : s;
}

Elem FieldTables::base_mul(Elem a, Elem b) const noexcept {
  if (base_) return base_->mul(a, b);
  return static_cast<Elem>((std::uint64_t{a} * b) % characteristic_);
}

Elem FieldTables::base_neg(Elem a) const noexcept {
  if (base_) return base_->neg(a);
  return a == 0 ? 0 : characteristic_ - a;
}

Elem FieldTables::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0;
  Elem place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += base_add(a % base_order_, b % base_order_) * place;
    a /= base_order_;
    b /= base_order_;
    place *= base_order_;
  }
  return out;
}

FieldTables::Poly FieldTables::to_digits(Elem a) const {
  Poly d(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    d[i] = a % base_order_;
    a /= base_order_;
  }
  return d;
}

Elem FieldTables::from_digits(const Poly& digits) const {
  Elem out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * base_order_ + digits[i];
  return out;
}

FieldTables::Poly FieldTables::poly_mod(Poly num, const Poly& monic_divisor) const {
  const std::size_t dd = monic_divisor.size() - 1;
  while (num.size() > dd) {
    const Elem lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i < dd; ++i)
        num[shift + i] = base_add(num[shift + i], base_neg(base_mul(lead, monic_divisor[i])));
    }
    num.pop_back();
  }
  return num;
}

bool FieldTables::is_irreducible(const Poly& monic) const {
  const unsigned deg = static_cast<unsigned>(monic.size() - 1);
  for (unsigned k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= base_order_;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(k + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        g[i] = static_cast<Elem>(c % base_order_);
        c /= base_order_;
      }
      g[k] = 1;
      Poly r = poly_mod(monic, g);
      bool zero = true;
      for (auto v : r) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldTables::Poly FieldTables::find_modulus() const {
  for (Elem code = 0; code < order_; ++code) {
    Poly f = to_digits(code);
    f.push_back(1);
    if (is_irreducible(f)) return f;
  }
  throw Error(ErrorCode::BadParams, "no irreducible polynomial found");
}

Elem FieldTables::mul_slow(Elem a, Elem b) const {
  const Poly x = to_digits(a);
  const Poly y = to_digits(b);
  Poly prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[i + j] = base_add(prod[i + j], base_mul(x[i], y[j]));
  }
  return from_digits(poly_mod(std::move(prod), modulus_));
}

}  // namespace detail

FieldContext::FieldContext(unsigned p, unsigned m, std::uint64_t table_limit)
    : p_(p), tables_(p, nullptr, m, table_limit) {}

std::shared_ptr<const FieldContext> FieldContext::make(unsigned p, unsigned m,
                                                       std::uint64_t table_limit) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::BadParams, "extension degree must be positive");
  return std::make_shared<const FieldContext>(p, m, table_limit);
}

std::string FieldContext::descriptor() const {
  if (degree() == 1) return "gf(" + std::to_string(p_) + ")";
  return "gf(" + std::to_string(p_) + "^" + std::to_string(degree()) + ")";
}

FieldPtr parse_field(std::string_view text, std::uint64_t table_limit) {
  auto fail = [&] { return Error(ErrorCode::Parse, "bad field descriptor '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.size() < 5 || s.compare(0, 3, "gf(") != 0 || s.back() != ')') throw fail();
  const std::string_view body = std::string_view(s).substr(3, s.size() - 4);
  const auto caret = body.find('^');
  auto parse_uint = [&](std::string_view v) {
    unsigned out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) throw fail();
    return out;
  };
  const unsigned p = parse_uint(body.substr(0, caret));
  const unsigned m = caret == std::string_view::npos ? 1 : parse_uint(body.substr(caret + 1));
  return FieldContext::make(p, m, table_limit);
}

ExtensionContext::ExtensionContext(FieldPtr base, unsigned s, std::uint64_t table_limit)
    : base_(std::move(base)),
      tables_(base_ ? base_->characteristic() : 0, base_, s, table_limit) {}

Elem ExtensionContext::frobenius(Elem x, std::uint64_t i) const noexcept {
  i %= degree();
  for (std::uint64_t k = 0; k < i; ++k) x = pow(x, base_->order());
  return x;
}

Elem ExtensionContext::basis(unsigned i) const {
  if (i >= degree()) throw Error(ErrorCode::OutOfRange, "basis index out of range");
  Elem e = 1;
  for (unsigned k = 0; k < i; ++k) e *= base_->order();
  return e;
}

std::vector<Elem> ExtensionContext::basis() const {
  std::vector<Elem> out;
  for (unsigned i = 0; i < degree(); ++i) out.push_back(basis(i));
  return out;
}

std::vector<Elem> ExtensionContext::expand(Elem x) const {
  std::vector<Elem> out(degree());
  for (auto& c : out) {
    c = x % base_->order();
    x /= base_->order();
  }
  return out;
}

Elem ExtensionContext::recombine(std::span<const Elem> coords) const {
  if (coords.size() != degree())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(degree()) + " coordinates");
  Elem out = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= base_->order()) throw Error(ErrorCode::OutOfRange, "coordinate not a base element");
    out = out * base_->order() + coords[i];
  }
  return out;
}

}  // namespace sublrc
