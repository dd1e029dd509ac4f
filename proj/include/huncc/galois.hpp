// Copyright 2026 The HUNCC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite fields GF(p^m), polynomials over them, and dense linear algebra.
//
// An element of GF(p^m) is stored as the integer sum_i c_i p^i of its
// coefficient vector (c_0 .. c_{m-1}) in the polynomial basis modulo the
// field's monic irreducible modulus. For p = 2 this is the usual bit-vector
// encoding. The encoding is canonical, so elements compare as integers.
//
// Fields of order <= 2^16 use log/antilog tables for multiplication and
// inversion; larger fields (order < 2^32) fall back to schoolbook
// multiplication modulo the modulus. Observable results are identical.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "huncc/bytes.hpp"
#include "huncc/error.hpp"

namespace huncc::gf {

using Value = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Field {
  struct Token {};

 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
  static constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;

  /// GF(p^m) with the smallest irreducible modulus, where polynomials are
  /// ordered by the integer encoding of their non-leading coefficients.
  static FieldPtr make(unsigned p, unsigned m);

  /// GF(p^m) with a caller-supplied modulus, coefficients low to high
  /// (size m + 1). Throws InvalidArgument if the modulus is reducible.
  static FieldPtr make(unsigned p, unsigned m, std::vector<Value> modulus);

  static FieldPtr binary(unsigned m) { return make(2, m); }

  Field(Token, unsigned p, unsigned m, std::vector<Value> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Value>& modulus() const { return modulus_; }
  bool is_binary() const { return p_ == 2; }

  /// Bits needed to hold one encoded element: ceil(log2(order)).
  unsigned symbol_bits() const {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < order_) ++bits;
    return bits;
  }
  unsigned symbol_bytes() const { return (symbol_bits() + 7) / 8; }

  bool contains(std::uint64_t a) const { return a < order_; }

  Value add(Value a, Value b) const {
    if (p_ == 2) return a ^ b;
    Value r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      r += static_cast<Value>(((a % p_) + (b % p_)) % p_ * pow_p_[i]);
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Value neg(Value a) const {
    if (p_ == 2) return a;
    Value r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      r += static_cast<Value>((p_ - a % p_) % p_ * pow_p_[i]);
      a /= p_;
    }
    return r;
  }

  Value sub(Value a, Value b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
  }

  Value inv(Value a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return slow_pow(a, order_ - 2);
  }

  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  Value pow(Value a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % (order_ - 1))) % (order_ - 1))];
    return slow_pow(a, e);
  }

  /// Coefficients c_0 .. c_{m-1} of the element in the polynomial basis.
  std::vector<Value> digits(Value a) const {
    std::vector<Value> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Value from_digits(std::span<const Value> d) const {
    if (d.size() > m_) throw InvalidArgument("too many digits for field");
    Value r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= p_) throw InvalidArgument("digit out of range");
      r += static_cast<Value>(d[i] * pow_p_[i]);
    }
    return r;
  }

  /// Image of an integer in the prime subfield.
  Value from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Value>(r);
  }

  bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

  std::string name() const {
    return m_ == 1 ? "GF(" + std::to_string(p_) + ")"
                   : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
  }

 private:
  Value slow_mul(Value a, Value b) const {
    if (p_ == 2) {
      std::uint64_t r = 0;
      for (unsigned i = 0; i < m_; ++i)
        if ((b >> i) & 1) r ^= std::uint64_t{a} << i;
      for (int k = 2 * static_cast<int>(m_) - 2; k >= static_cast<int>(m_); --k)
        if ((r >> k) & 1) r ^= mod_bits_ << (k - m_);
      return static_cast<Value>(r);
    }
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    for (int k = 2 * static_cast<int>(m_) - 2; k >= static_cast<int>(m_); --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned i = 0; i <= m_; ++i) {
        const std::size_t idx = k - m_ + i;
        prod[idx] = (prod[idx] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    Value r = 0;
    for (unsigned i = 0; i < m_; ++i) r += static_cast<Value>(prod[i] * pow_p_[i]);
    return r;
  }

  Value slow_pow(Value a, std::uint64_t e) const {
    Value r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables();

  unsigned p_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<Value> modulus_;
  std::uint64_t mod_bits_ = 0;
  std::vector<std::uint64_t> pow_p_;
  std::vector<Value> exp_;
  std::vector<Value> log_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw InvalidArgument("operands belong to different fields");
}

// ---------------------------------------------------------------------------
// Elements

class Element {
 public:
  Element(FieldPtr f, Value v) : f_(std::move(f)), v_(v) {
    if (!f_->contains(v)) throw InvalidArgument("value outside field");
  }

  Value value() const { return v_; }
  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return v_ == 0; }

  Element inverse() const { return {f_, f_->inv(v_)}; }
  Element pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }

  friend Element operator+(const Element& a, const Element& b) {
    require_same_field(a.f_, b.f_);
    return {a.f_, a.f_->add(a.v_, b.v_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    require_same_field(a.f_, b.f_);
    return {a.f_, a.f_->sub(a.v_, b.v_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    require_same_field(a.f_, b.f_);
    return {a.f_, a.f_->mul(a.v_, b.v_)};
  }
  friend Element operator/(const Element& a, const Element& b) {
    require_same_field(a.f_, b.f_);
    return {a.f_, a.f_->div(a.v_, b.v_)};
  }
  Element operator-() const { return {f_, f_->neg(v_)}; }

  friend bool operator==(const Element& a, const Element& b) { return same_field(a.f_, b.f_) && a.v_ == b.v_; }

 private:
  FieldPtr f_;
  Value v_;
};

// ---------------------------------------------------------------------------
// Polynomials

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Value> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (auto v : c_)
      if (!f_->contains(v)) throw InvalidArgument("coefficient outside field");
    trim();
  }

  static Poly constant(FieldPtr f, Value v) { return Poly(std::move(f), {v}); }
  static Poly monomial(FieldPtr f, Value coeff, std::size_t deg) {
    std::vector<Value> c(deg + 1, 0);
    c[deg] = coeff;
    return Poly(std::move(f), std::move(c));
  }
  static Poly x(FieldPtr f) { return monomial(std::move(f), 1, 1); }

  const FieldPtr& field() const { return f_; }
  const std::vector<Value>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Value coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Value lead() const { return c_.empty() ? 0 : c_.back(); }

  Value eval(Value x) const {
    if (!f_->contains(x)) throw InvalidArgument("evaluation point outside field");
    Value acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_->add(f_->mul(acc, x), *it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const Value li = f_->inv(lead());
    return scaled(li);
  }

  Poly scaled(Value s) const {
    std::vector<Value> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
    return Poly(f_, std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    std::vector<Value> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    std::vector<Value> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    const Field& f = *a.f_;
    std::vector<Value> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return same_field(a.f_, b.f_) && a.c_ == b.c_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (c_[i] != 1 || i == 0) s += std::to_string(c_[i]);
      if (i >= 1) s += (c_[i] != 1 ? "*x" : "x");
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldPtr f_;
  std::vector<Value> c_;  // low to high, no trailing zeros
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Field& f = *a.field();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Value> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Value> q(a.degree() - db + 1, 0);
  const Value li = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const Value coef = f.mul(r[i], li);
    q[i - db] = coef;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, bc[j]));
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

inline Poly poly_mod(const Poly& a, const Poly& m) { return divmod(a, m).remainder; }

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

/// Monic greatest common divisor (zero if both inputs are zero).
inline Poly poly_gcd(Poly a, Poly b) {
  require_same_field(a.field(), b.field());
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = poly_mod(Poly::constant(m.field(), 1), m);
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mod(r * base, m);
    e >>= 1;
    if (e) base = poly_mod(base * base, m);
  }
  return r;
}

/// a^{-1} mod m. Throws InvalidArgument when gcd(a, m) != 1.
inline Poly poly_inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = poly_mod(a, m);
  Poly t0(m.field()), t1 = Poly::constant(m.field(), 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) throw InvalidArgument("polynomial not invertible modulo m");
  return poly_mod(t0.scaled(m.field()->inv(r0.lead())), m);
}

/// Ben-Or test: f of degree n is irreducible over GF(q) iff
/// gcd(f, x^{q^i} - x) = 1 for every 1 <= i <= n/2.
inline bool poly_is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t q = f.field()->order();
  const Poly x = Poly::x(f.field());
  Poly h = poly_mod(x, f);
  for (int i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, q, f);
    if (poly_gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field construction (needs Poly for the irreducibility check)

inline Field::Field(Token, unsigned p, unsigned m, std::vector<Value> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  order_ = 1;
  pow_p_.resize(m_ + 1);
  for (unsigned i = 0; i <= m_; ++i) {
    pow_p_[i] = order_;
    if (i < m_) order_ *= p_;
  }
  if (p_ == 2)
    for (unsigned i = 0; i <= m_; ++i)
      if (modulus_[i]) mod_bits_ |= std::uint64_t{1} << i;
  if (order_ <= kTableOrder) build_tables();
}

inline void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t rem = n;
  for (std::uint64_t d = 2; d * d <= rem; ++d) {
    if (rem % d == 0) {
      primes.push_back(d);
      while (rem % d == 0) rem /= d;
    }
  }
  if (rem > 1) primes.push_back(rem);
  Value gen = 1;
  for (Value g = (order_ == 2 ? 1 : 2); g < order_; ++g) {
    bool primitive = true;
    for (auto r : primes)
      if (slow_pow(g, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  Value a = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = a;
    log_[a] = static_cast<Value>(i);
    a = slow_mul(a, gen);
  }
}

namespace detail {

inline void check_field_params(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("field extension degree must be >= 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    order *= p;
    if (order >= Field::kMaxOrder) throw InvalidArgument("field order must be below 2^32");
  }
}

}  // namespace detail

inline FieldPtr Field::make(unsigned p, unsigned m, std::vector<Value> modulus) {
  detail::check_field_params(p, m);
  if (modulus.size() != m + 1) throw InvalidArgument("modulus must have m + 1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (modulus.back() == 0) throw InvalidArgument("modulus leading coefficient is zero");
  if (m > 1) {
    auto prime = std::make_shared<const Field>(Token{}, p, 1, std::vector<Value>{0, 1});
    Poly f(prime, modulus);
    if (!poly_is_irreducible(f)) throw InvalidArgument("modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  const Value lead = modulus.back();
  if (lead != 1) {
    Value li = 1;
    while ((std::uint64_t{li} * lead) % p != 1) ++li;
    for (auto& c : modulus) c = static_cast<Value>((std::uint64_t{c} * li) % p);
  }
  return std::make_shared<const Field>(Token{}, p, m, std::move(modulus));
}

inline FieldPtr Field::make(unsigned p, unsigned m) {
  detail::check_field_params(p, m);
  if (m == 1) return std::make_shared<const Field>(Token{}, p, 1, std::vector<Value>{0, 1});
  auto prime = std::make_shared<const Field>(Token{}, p, 1, std::vector<Value>{0, 1});
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 1; low < count; ++low) {
    if (low % p == 0) continue;  // divisible by x
    std::vector<Value> c(m + 1);
    std::uint64_t v = low;
    for (unsigned i = 0; i < m; ++i) {
      c[i] = static_cast<Value>(v % p);
      v /= p;
    }
    c[m] = 1;
    if (poly_is_irreducible(Poly(prime, c))) return std::make_shared<const Field>(Token{}, p, m, std::move(c));
  }
  throw InvalidArgument("no irreducible modulus found");  // unreachable for valid p, m
}

/// FieldSpec wire form: p (u32), m (u16), then m + 1 modulus coefficients,
/// one byte each, constant term first.
inline void write_field(ByteWriter& w, const Field& f) {
  if (f.characteristic() > 255) throw InvalidArgument("field characteristic too large to serialize");
  w.u32(f.characteristic());
  w.u16(static_cast<std::uint16_t>(f.degree()));
  for (auto c : f.modulus()) w.u8(static_cast<std::uint8_t>(c));
}

inline FieldPtr read_field(ByteReader& r) {
  const unsigned p = r.u32();
  const unsigned m = r.u16();
  if (m == 0 || m > 32) throw FormatError("bad field degree");
  std::vector<Value> mod(m + 1);
  for (auto& c : mod) c = r.u8();
  try {
    return Field::make(p, m, std::move(mod));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("bad field spec: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Matrices

class Matrix {
 public:
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Entries given as encoded field values (for prime fields: the integers).
  static Matrix from_rows(FieldPtr f, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(std::move(f), r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw InvalidArgument("ragged matrix rows");
      std::size_t j = 0;
      for (auto v : row) {
        if (!m.f_->contains(v)) throw InvalidArgument("matrix entry outside field");
        m(i, j++) = static_cast<Value>(v);
      }
      ++i;
    }
    return m;
  }

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Value operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Value> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Value> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  std::vector<Value> column(std::size_t c) const {
    std::vector<Value> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, std::span<const Value> v) {
    if (v.size() != rows_) throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) std::ranges::copy(row(idx[i]), m.row(i).begin());
    return m;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(f_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  Matrix row_range(std::size_t begin, std::size_t end) const {
    Matrix m(f_, end - begin, cols_);
    std::copy(a_.begin() + begin * cols_, a_.begin() + end * cols_, m.a_.begin());
    return m;
  }

  bool is_zero() const {
    return std::ranges::all_of(a_, [](Value v) { return v == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return same_field(a.f_, b.f_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch in product");
    const Field& f = *a.f_;
    Matrix out(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Value aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix dimension mismatch in sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.f_->add(a.a_[i], b.a_[i]);
    return out;
  }

 private:
  FieldPtr f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> a_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

/// Row-echelon rank.
inline std::size_t mat_rank(Matrix m) {
  const Field& f = *m.field();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    const Value inv = f.inv(m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Value factor = f.mul(m(r, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse. Throws SingularMatrix.
inline Matrix mat_inv(const Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(a.field(), n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Value pi = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), pi);
      inv(c, j) = f.mul(inv(c, j), pi);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Value factor = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

struct LinearSolution {
  std::optional<std::vector<Value>> x;  // empty when the system is inconsistent
  bool unique = false;
  std::uint64_t ops = 0;  // field operations performed (mul, sub, inv each count 1)
};

/// Solves A x = b by Gaussian elimination and back substitution. Free
/// variables (if any) are set to zero. The operation count does not skip
/// zero entries, so it depends only on the shape and the pivot structure.
inline LinearSolution solve_linear(const Matrix& a, std::span<const Value> b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  const Field& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix m(a.field(), rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    if (!f.contains(b[r])) throw InvalidArgument("right-hand side outside field");
    m(r, cols) = b[r];
  }
  LinearSolution out;
  std::vector<std::size_t> pivot_col;
  std::vector<Value> pivot_inv;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(piv, j), m(rank, j));
    const Value inv = f.inv(m(rank, c));
    ++out.ops;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Value factor = f.mul(m(r, c), inv);
      ++out.ops;
      for (std::size_t j = c + 1; j <= cols; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
      out.ops += 2 * (cols - c);
      m(r, c) = 0;
    }
    pivot_col.push_back(c);
    pivot_inv.push_back(inv);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m(r, cols) != 0) return out;
  std::vector<Value> x(cols, 0);
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t c = pivot_col[k];
    Value s = m(k, cols);
    for (std::size_t j = c + 1; j < cols; ++j) {
      s = f.sub(s, f.mul(m(k, j), x[j]));
      out.ops += 2;
    }
    x[c] = f.mul(s, pivot_inv[k]);
    ++out.ops;
  }
  out.unique = rank == cols;
  out.x = std::move(x);
  return out;
}

/// Operation count solve_linear reports for a dense nonsingular n x n system.
inline std::uint64_t elimination_ops(std::size_t n) {
  std::uint64_t ops = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t below = n - 1 - k;
    ops += 1 + below * (1 + 2 * (n - k)) + 2 * below + 1;
  }
  return ops;
}

}  // namespace huncc::gf
