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

// Public-key cryptosystems: the encrypt/decrypt contract, an identity cipher
// for pipeline tests, and McEliece over binary Goppa codes with Patterson
// decoding.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "huncc/bits.hpp"
#include "huncc/bytes.hpp"
#include "huncc/error.hpp"
#include "huncc/galois.hpp"
#include "huncc/kv.hpp"
#include "huncc/rng.hpp"

namespace huncc::crypto {

using gf::FieldPtr;
using gf::Poly;
using gf::Value;

enum class Scheme : std::uint8_t { kIdentity = 0, kMcEliece = 1 };

inline const char* scheme_name(Scheme s) { return s == Scheme::kIdentity ? "identity" : "mceliece"; }

struct CryptosystemSpec {
  std::size_t k_bits = 0;  // plaintext length
  std::size_t n_bits = 0;  // ciphertext length
  unsigned security_bits = 0;
  Scheme scheme = Scheme::kIdentity;

  double rate() const { return static_cast<double>(k_bits) / static_cast<double>(n_bits); }
  bool operator==(const CryptosystemSpec&) const = default;
};

class Encryptor {
 public:
  virtual ~Encryptor() = default;
  virtual CryptosystemSpec spec() const = 0;
  virtual BitVector encrypt(const BitVector& plaintext, Rng& rng) const = 0;
};

class Decryptor {
 public:
  virtual ~Decryptor() = default;
  virtual CryptosystemSpec spec() const = 0;
  /// Throws DecodingFailure when the ciphertext cannot be decrypted.
  virtual BitVector decrypt(const BitVector& ciphertext) const = 0;
};

/// No cryptography at all: ciphertext = plaintext. Security level 0.
class IdentityCipher final : public Encryptor, public Decryptor {
 public:
  explicit IdentityCipher(std::size_t bits) : bits_(bits) {
    if (bits == 0) throw InvalidArgument("identity cipher needs a nonzero block length");
  }
  CryptosystemSpec spec() const override { return {bits_, bits_, 0, Scheme::kIdentity}; }
  BitVector encrypt(const BitVector& m, Rng&) const override {
    check(m);
    return m;
  }
  BitVector decrypt(const BitVector& c) const override {
    check(c);
    return c;
  }

 private:
  void check(const BitVector& v) const {
    if (v.size() != bits_) throw InvalidArgument("identity cipher block length mismatch");
  }
  std::size_t bits_;
};

// ---------------------------------------------------------------------------
// Parameters

struct McElieceParams {
  std::string name;
  unsigned d = 0;       // extension degree of GF(2^d)
  std::size_t n = 0;    // code length (support size), n <= 2^d
  std::size_t k = 0;    // dimension, n - t d
  unsigned t = 0;       // Goppa polynomial degree = correctable errors
  unsigned b = 0;       // security level label

  void validate() const {
    if (d < 2 || d > 16) throw InvalidArgument("extension degree d must be in [2, 16]");
    if (t < 1) throw InvalidArgument("error weight t must be >= 1");
    if (n < 2 || n > (std::size_t{1} << d)) throw InvalidArgument("code length must satisfy 2 <= n <= 2^d");
    if (n <= std::size_t{t} * d) throw InvalidArgument("parameters admit no code: n - t d <= 0");
    if (k != n - std::size_t{t} * d) throw InvalidArgument("dimension must equal n - t d");
    if (b > k) throw InvalidArgument("security level cannot exceed the plaintext length");
  }

  CryptosystemSpec spec() const { return {k, n, b, Scheme::kMcEliece}; }
  bool operator==(const McElieceParams&) const = default;
};

inline McElieceParams make_params(std::string name, unsigned d, std::size_t n, unsigned t, unsigned b) {
  if (n <= std::size_t{t} * d) throw InvalidArgument("parameters admit no code: n - t d <= 0");
  McElieceParams p{std::move(name), d, n, n - std::size_t{t} * d, t, b};
  p.validate();
  return p;
}

inline std::vector<McElieceParams> builtin_presets() {
  return {
      {"toy16", 4, 16, 8, 2, 0},
      {"classic1024", 10, 1024, 524, 50, 58},
      {"pq2960", 12, 2960, 2288, 56, 128},
      {"pq6624", 13, 6624, 5129, 115, 256},
  };
}

inline constexpr const char* kPresetPathEnv = "HUNCC_PRESET_PATH";

/// Presets from a key/value file: "<id>.d", "<id>.n", "<id>.t", "<id>.b".
inline std::vector<McElieceParams> presets_from(const KeyValues& kv) {
  std::vector<McElieceParams> out;
  for (const auto& [key, value] : kv.entries()) {
    const auto dot = key.rfind('.');
    if (dot == std::string::npos || key.substr(dot) != ".d") continue;
    const std::string id = key.substr(0, dot);
    out.push_back(make_params(id, static_cast<unsigned>(kv.u64(id + ".d")), kv.u64(id + ".n"),
                              static_cast<unsigned>(kv.u64(id + ".t")), static_cast<unsigned>(kv.u64(id + ".b", 0))));
    if (kv.has(id + ".k") && kv.u64(id + ".k") != out.back().k)
      throw FormatError("preset '" + id + "': k must equal n - t d");
  }
  return out;
}

inline std::vector<McElieceParams> all_presets() {
  auto out = builtin_presets();
  if (const char* path = std::getenv(kPresetPathEnv); path && *path) {
    for (auto& p : presets_from(KeyValues::load(path))) {
      std::erase_if(out, [&](const McElieceParams& q) { return q.name == p.name; });
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline McElieceParams preset(const std::string& name) {
  for (auto& p : all_presets())
    if (p.name == name) return p;
  throw InvalidArgument("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Binary Goppa code

/// Gamma(L, g) for monic irreducible g of degree t over GF(2^d) and a support
/// L of distinct elements with g(alpha) != 0.
class GoppaCode {
 public:
  GoppaCode(Poly g, std::vector<Value> support) : f_(g.field()), g_(std::move(g)), support_(std::move(support)) {
    if (!f_->is_binary()) throw InvalidArgument("Goppa codes here are binary: field must have characteristic 2");
    t_ = static_cast<unsigned>(g_.degree());
    if (g_.degree() < 1) throw InvalidArgument("Goppa polynomial must have degree >= 1");
    if (g_.lead() != 1) throw InvalidArgument("Goppa polynomial must be monic");
    const unsigned d = f_->degree();
    const std::size_t n = support_.size();
    if (n <= std::size_t{t_} * d) throw InvalidArgument("support too small for this Goppa polynomial");
    {
      std::vector<bool> seen(f_->order(), false);
      for (auto a : support_) {
        if (!f_->contains(a) || seen[a]) throw InvalidArgument("support elements must be distinct field elements");
        seen[a] = true;
      }
    }
    // h_j = (x - alpha_j)^{-1} mod g = (g(x) - g(alpha_j)) / (x - alpha_j) / g(alpha_j)
    // (signs vanish in characteristic 2).
    const auto& gc = g_.coeffs();
    inv_lin_.assign(n * t_, 0);
    h_bin_ = BitMatrix(std::size_t{t_} * d, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Value a = support_[j];
      const Value ga = g_.eval(a);
      if (ga == 0) throw InvalidArgument("support contains a root of the Goppa polynomial");
      const Value s = f_->inv(ga);
      Value carry = 0;
      Value* h = &inv_lin_[j * t_];
      for (std::size_t i = t_; i-- > 0;) {
        carry = f_->add(gc[i + 1], f_->mul(carry, a));
        h[i] = f_->mul(carry, s);
      }
      // Rows of the binary parity check: coefficient i of h_j, bit r.
      for (unsigned i = 0; i < t_; ++i)
        for (unsigned r = 0; r < d; ++r)
          if ((h[i] >> r) & 1) h_bin_.set(std::size_t{i} * d + r, j);
    }
    BitMatrix red = h_bin_;
    const auto pivots = red.rref();
    rank_ = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free_.push_back(c);
    gen_ = BitMatrix(free_.size(), n);
    for (std::size_t r = 0; r < free_.size(); ++r) {
      gen_.set(r, free_[r]);
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if (red.get(i, free_[r])) gen_.set(r, pivots[i]);
    }
    // sqrt(x) = x^(2^(dt - 1)) in GF(2^d)[x] / g.
    sqrt_x_ = gf::poly_mod(Poly::x(f_), g_);
    for (unsigned i = 0; i + 1 < d * t_; ++i) sqrt_x_ = gf::poly_mod(sqrt_x_ * sqrt_x_, g_);
  }

  const FieldPtr& field() const { return f_; }
  const Poly& goppa_polynomial() const { return g_; }
  const std::vector<Value>& support() const { return support_; }
  std::size_t length() const { return support_.size(); }
  std::size_t dimension() const { return free_.size(); }
  unsigned t() const { return t_; }

  /// Binary (t d) x n parity check.
  const BitMatrix& parity_check() const { return h_bin_; }
  /// Systematic generator: the message occupies the free columns.
  const BitMatrix& generator() const { return gen_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Poly syndrome(const BitVector& r) const {
    if (r.size() != length()) throw InvalidArgument("received word length mismatch");
    std::vector<Value> s(t_, 0);
    for (std::size_t j = 0; j < length(); ++j)
      if (r.get(j))
        for (unsigned i = 0; i < t_; ++i) s[i] ^= inv_lin_[j * t_ + i];
    return Poly(f_, std::move(s));
  }

  /// Error vector of weight <= t with r + e a codeword; throws
  /// DecodingFailure when none is found.
  BitVector decode_error(const BitVector& r) const {
    const Poly s = syndrome(r);
    BitVector e(length());
    if (s.is_zero()) return e;
    const Poly x = Poly::x(f_);
    const Poly tinv = gf::poly_inverse_mod(s, g_);
    const Poly rr = sqrt_mod(tinv + x);
    // Euclid until deg(a) <= t/2, keeping a = b * rr mod g.
    Poly r0 = g_, r1 = rr, b0(f_), b1 = Poly::constant(f_, 1);
    while (r1.degree() > static_cast<int>(t_ / 2)) {
      auto [q, rem] = gf::divmod(r0, r1);
      Poly nb = b0 - q * b1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      b0 = std::move(b1);
      b1 = std::move(nb);
    }
    const Poly sigma = r1 * r1 + x * b1 * b1;
    const int deg = sigma.degree();
    if (deg < 1 || deg > static_cast<int>(t_)) throw DecodingFailure("error locator has invalid degree");
    int roots = 0;
    for (std::size_t j = 0; j < length(); ++j)
      if (sigma.eval(support_[j]) == 0) {
        e.set(j);
        ++roots;
      }
    if (roots != deg) throw DecodingFailure("error locator does not split over the support");
    if (!syndrome(r ^ e).is_zero()) throw DecodingFailure("corrected word is not a codeword");
    return e;
  }

  BitVector decode(const BitVector& r) const { return r ^ decode_error(r); }

 private:
  Poly sqrt_mod(const Poly& a) const {
    // sqrt(sum c_i x^i) = sum sqrt(c_{2i}) x^i + sqrt(x) * sum sqrt(c_{2i+1}) x^i
    const unsigned d = f_->degree();
    const std::uint64_t half = std::uint64_t{1} << (d - 1);
    const auto& c = a.coeffs();
    std::vector<Value> even((c.size() + 1) / 2, 0), odd(c.size() / 2 + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) (i % 2 ? odd : even)[i / 2] = f_->pow(c[i], half);
    return gf::poly_mod(Poly(f_, std::move(even)) + sqrt_x_ * Poly(f_, std::move(odd)), g_);
  }

  FieldPtr f_;
  Poly g_;
  std::vector<Value> support_;
  unsigned t_ = 0;
  std::vector<Value> inv_lin_;  // n x t, coefficients of (x - alpha_j)^{-1} mod g
  BitMatrix h_bin_;
  BitMatrix gen_;
  std::vector<std::size_t> free_;
  std::size_t rank_ = 0;
  Poly sqrt_x_{nullptr};
};

// ---------------------------------------------------------------------------
// McEliece

inline constexpr unsigned kKeygenAttempts = 64;

class McEliecePublicKey final : public Encryptor {
 public:
  McEliecePublicKey(McElieceParams params, BitMatrix g_pub) : params_(std::move(params)), g_pub_(std::move(g_pub)) {
    params_.validate();
    if (g_pub_.rows() != params_.k || g_pub_.cols() != params_.n)
      throw InvalidArgument("public matrix shape does not match parameters");
  }

  const McElieceParams& params() const { return params_; }
  const BitMatrix& matrix() const { return g_pub_; }
  CryptosystemSpec spec() const override { return params_.spec(); }

  /// c = m G_pub + z with z uniform of weight t (partial Fisher-Yates).
  BitVector encrypt(const BitVector& m, Rng& rng) const override {
    std::vector<std::size_t> pos(params_.n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    BitVector z(params_.n);
    for (std::size_t i = 0; i < params_.t; ++i) {
      std::swap(pos[i], pos[i + rng.uniform(params_.n - i)]);
      z.set(pos[i]);
    }
    return encrypt_with_error(m, z);
  }

  /// Deterministic form with a caller-chosen error vector (any weight).
  BitVector encrypt_with_error(const BitVector& m, const BitVector& z) const {
    if (m.size() != params_.k) throw InvalidArgument("plaintext must be k bits");
    if (z.size() != params_.n) throw InvalidArgument("error vector must be n bits");
    return g_pub_.left_mul(m) ^ z;
  }

  bool operator==(const McEliecePublicKey& o) const { return params_ == o.params_ && g_pub_ == o.g_pub_; }

 private:
  McElieceParams params_;
  BitMatrix g_pub_;
};

class McEliecePrivateKey final : public Decryptor {
 public:
  /// perm[j] = code coordinate carried by public coordinate j.
  McEliecePrivateKey(McElieceParams params, GoppaCode code, BitMatrix s, std::vector<std::size_t> perm)
      : params_(std::move(params)), code_(std::move(code)), s_(std::move(s)), perm_(std::move(perm)) {
    params_.validate();
    if (code_.length() != params_.n || code_.t() != params_.t || code_.dimension() != params_.k)
      throw InvalidArgument("Goppa code does not match parameters");
    if (s_.rows() != params_.k || s_.cols() != params_.k) throw InvalidArgument("scrambler must be k x k");
    s_inv_ = s_.inverse();
    std::vector<bool> seen(params_.n, false);
    if (perm_.size() != params_.n) throw InvalidArgument("permutation length mismatch");
    for (auto p : perm_) {
      if (p >= params_.n || seen[p]) throw InvalidArgument("permutation is not a bijection");
      seen[p] = true;
    }
  }

  const McElieceParams& params() const { return params_; }
  const GoppaCode& code() const { return code_; }
  const BitMatrix& scrambler() const { return s_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  CryptosystemSpec spec() const override { return params_.spec(); }

  /// S G P, recomputed from the private half.
  BitMatrix public_matrix() const { return (s_ * code_.generator()).select_columns(perm_); }

  BitVector decrypt(const BitVector& c) const override {
    if (c.size() != params_.n) throw InvalidArgument("ciphertext must be n bits");
    BitVector r(params_.n);
    for (std::size_t j = 0; j < params_.n; ++j)
      if (c.get(j)) r.set(perm_[j]);
    const BitVector cw = code_.decode(r);
    BitVector ms(params_.k);
    const auto& fc = code_.free_columns();
    for (std::size_t i = 0; i < fc.size(); ++i) ms.set(i, cw.get(fc[i]));
    return s_inv_.left_mul(ms);
  }

 private:
  McElieceParams params_;
  GoppaCode code_;
  BitMatrix s_;
  BitMatrix s_inv_;
  std::vector<std::size_t> perm_;
};

struct McElieceKeyPair {
  McEliecePublicKey pub;
  McEliecePrivateKey priv;
};

namespace detail {

inline Poly random_irreducible(const FieldPtr& f, unsigned t, Rng& rng) {
  const std::size_t budget = 256 * std::size_t{t} + 64;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Value> c(t + 1);
    for (unsigned i = 0; i < t; ++i) c[i] = static_cast<Value>(rng.uniform(f->order()));
    c[t] = 1;
    Poly g(f, std::move(c));
    if (gf::poly_is_irreducible(g)) return g;
  }
  throw Error("irreducible polynomial search exceeded its retry bound");
}

inline void shuffle(std::vector<std::size_t>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform(i)]);
}

/// Random invertible k x k: row permutation times unit lower times unit upper.
inline BitMatrix random_scrambler(std::size_t k, Rng& rng) {
  BitMatrix lo = BitMatrix::identity(k), up = BitMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.bit()) lo.set(i, j);
      if (rng.bit()) up.set(j, i);
    }
  BitMatrix lu = lo * up;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  shuffle(rows, rng);
  BitMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i) s.row(i) = lu.row(rows[i]);
  return s;
}

}  // namespace detail

/// Deterministic in (params, seed). Retries with a fresh Goppa polynomial when
/// the code dimension exceeds k (rank-deficient parity check).
inline McElieceKeyPair mceliece_keygen(const McElieceParams& params, const Seed& seed) {
  params.validate();
  auto f = gf::Field::binary(params.d);
  Rng rng = Rng(seed).derive("mceliece.keygen");
  for (unsigned attempt = 0; attempt < kKeygenAttempts; ++attempt) {
    Poly g = detail::random_irreducible(f, params.t, rng);
    std::vector<std::size_t> cand;
    for (Value a = 0; a < f->order(); ++a)
      if (g.eval(a) != 0) cand.push_back(a);
    if (cand.size() < params.n) continue;
    detail::shuffle(cand, rng);
    std::vector<Value> support(params.n);
    for (std::size_t i = 0; i < params.n; ++i) support[i] = static_cast<Value>(cand[i]);
    GoppaCode code(std::move(g), std::move(support));
    if (code.dimension() != params.k) continue;
    BitMatrix s = detail::random_scrambler(params.k, rng);
    std::vector<std::size_t> perm(params.n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    detail::shuffle(perm, rng);
    McEliecePrivateKey priv(params, std::move(code), std::move(s), std::move(perm));
    McEliecePublicKey pub(params, priv.public_matrix());
    return {std::move(pub), std::move(priv)};
  }
  throw Error("key generation exceeded its retry bound");
}

inline McElieceKeyPair mceliece_keygen(const McElieceParams& params, std::uint64_t seed) {
  return mceliece_keygen(params, Seed::from_u64(seed));
}

// ---------------------------------------------------------------------------
// Key files: "HNCK", version, scheme, half (0 public / 1 private), params,
// then the half's matrices.

inline constexpr std::uint8_t kKeyVersion = 1;

namespace detail {

inline void write_params(ByteWriter& w, const McElieceParams& p) {
  w.u8(static_cast<std::uint8_t>(p.name.size()));
  w.tag(p.name);
  w.u16(static_cast<std::uint16_t>(p.d));
  w.u32(static_cast<std::uint32_t>(p.n));
  w.u32(static_cast<std::uint32_t>(p.k));
  w.u32(p.t);
  w.u32(p.b);
}

inline McElieceParams read_params(ByteReader& r) {
  McElieceParams p;
  const auto len = r.u8();
  auto name = r.raw(len);
  p.name.assign(name.begin(), name.end());
  p.d = r.u16();
  p.n = r.u32();
  p.k = r.u32();
  p.t = r.u32();
  p.b = r.u32();
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("bad key parameters: ") + e.what());
  }
  return p;
}

inline void write_header(ByteWriter& w, std::uint8_t half) {
  w.tag("HNCK");
  w.u8(kKeyVersion);
  w.u8(static_cast<std::uint8_t>(Scheme::kMcEliece));
  w.u8(half);
}

inline void read_header(ByteReader& r, std::uint8_t half) {
  r.expect_tag("HNCK");
  if (r.u8() != kKeyVersion) throw FormatError("unsupported key file version");
  if (r.u8() != static_cast<std::uint8_t>(Scheme::kMcEliece)) throw FormatError("unsupported key scheme");
  const auto h = r.u8();
  if (h != half) throw FormatError(half == 0 ? "expected a public key file" : "expected a private key file");
}

}  // namespace detail

inline Bytes serialize(const McEliecePublicKey& k) {
  ByteWriter w;
  detail::write_header(w, 0);
  detail::write_params(w, k.params());
  k.matrix().write(w);
  return std::move(w).bytes();
}

inline Bytes serialize(const McEliecePrivateKey& k) {
  ByteWriter w;
  detail::write_header(w, 1);
  detail::write_params(w, k.params());
  const auto& code = k.code();
  gf::write_field(w, *code.field());
  const unsigned width = code.field()->symbol_bytes();
  for (auto c : code.goppa_polynomial().coeffs()) w.uint(c, width);
  for (auto a : code.support()) w.uint(a, width);
  for (auto p : k.permutation()) w.u16(static_cast<std::uint16_t>(p));
  k.scrambler().write(w);
  return std::move(w).bytes();
}

inline McEliecePublicKey parse_public_key(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  detail::read_header(r, 0);
  auto params = detail::read_params(r);
  auto m = BitMatrix::read(r);
  if (!r.done()) throw FormatError("trailing bytes in public key file");
  try {
    return McEliecePublicKey(std::move(params), std::move(m));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

inline McEliecePrivateKey parse_private_key(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  detail::read_header(r, 1);
  auto params = detail::read_params(r);
  auto f = gf::read_field(r);
  if (!f->is_binary() || f->degree() != params.d) throw FormatError("key field does not match parameters");
  const unsigned width = f->symbol_bytes();
  auto read_value = [&] {
    const auto v = r.uint(width);
    if (!f->contains(v)) throw FormatError("field element out of range");
    return static_cast<Value>(v);
  };
  std::vector<Value> gc(params.t + 1);
  for (auto& c : gc) c = read_value();
  std::vector<Value> support(params.n);
  for (auto& a : support) a = read_value();
  std::vector<std::size_t> perm(params.n);
  for (auto& p : perm) p = r.u16();
  auto s = BitMatrix::read(r);
  if (!r.done()) throw FormatError("trailing bytes in private key file");
  try {
    Poly g(f, std::move(gc));
    if (g.degree() != static_cast<int>(params.t) || !gf::poly_is_irreducible(g))
      throw FormatError("Goppa polynomial is not irreducible of degree t");
    return McEliecePrivateKey(std::move(params), GoppaCode(std::move(g), std::move(support)), std::move(s),
                              std::move(perm));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  } catch (const SingularMatrix& e) {
    throw FormatError(e.what());
  }
}

inline Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("write failed for " + path);
}

}  // namespace huncc::crypto
