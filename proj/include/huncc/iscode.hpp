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

// (l, w)-individually secure linear codes.
//
// A code is an l x l nonsingular generator G whose first c = l - w rows are
// the coset selectors and whose last w rows generate the inner code. A message
// column M (length l) encodes to the row vector X = M G, so an l x B message
// block encodes to G^T M. Decoding uses the partitioned inverse:
//   H      = first c columns of G^{-1}, transposed   (recovers M_1..M_c)
//   Gtilde = last  w columns of G^{-1}, transposed   (recovers M_{c+1}..M_l)

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "huncc/bytes.hpp"
#include "huncc/error.hpp"
#include "huncc/galois.hpp"
#include "huncc/rng.hpp"

namespace huncc::is {

using gf::FieldPtr;
using gf::Matrix;
using gf::Value;

/// A column subset omega and message index j (both 0-based) for which the
/// observed columns determine M_j.
struct Witness {
  std::vector<std::size_t> omega;
  std::size_t j = 0;

  std::string to_string() const {
    std::ostringstream os;
    os << "omega={";
    for (std::size_t i = 0; i < omega.size(); ++i) os << (i ? "," : "") << omega[i] + 1;
    os << "}, j=" << j + 1;
    return os.str();
  }
};

namespace detail {

/// Advances idx to the next k-subset of [0, n) in lexicographic order.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

inline bool leaks(const Matrix& g, const std::vector<std::size_t>& omega, std::size_t j) {
  Matrix sub = g.select_columns(omega);
  const std::size_t base = gf::mat_rank(sub);
  Matrix ext(g.field(), g.rows(), omega.size() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < omega.size(); ++c) ext(r, c) = sub(r, c);
    ext(r, omega.size()) = r == j ? 1 : 0;
  }
  return gf::mat_rank(ext) != base + 1;
}

inline std::uint64_t checked_pow(std::uint64_t q, std::size_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

}  // namespace detail

inline constexpr std::size_t kExhaustiveRankCheckMaxLength = 12;
inline constexpr std::size_t kSampledRankChecks = 10000;

/// Rank criterion: for every |omega| = w and every j, e_j is outside the span
/// of the omega columns of G. Exhaustive for l <= 12, otherwise sampled with
/// the given stream. Returns the first violation found.
inline std::optional<Witness> find_rank_violation(const Matrix& g, std::size_t w, Rng* sampler = nullptr) {
  const std::size_t l = g.rows();
  if (w == 0) return std::nullopt;
  if (l <= kExhaustiveRankCheckMaxLength || sampler == nullptr) {
    auto omega = detail::first_subset(w);
    do {
      for (std::size_t j = 0; j < l; ++j)
        if (detail::leaks(g, omega, j)) return Witness{omega, j};
    } while (detail::next_subset(omega, l));
    return std::nullopt;
  }
  std::vector<std::size_t> cols(l);
  for (std::size_t s = 0; s < kSampledRankChecks; ++s) {
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    for (std::size_t i = 0; i < w; ++i) std::swap(cols[i], cols[i + sampler->uniform(l - i)]);
    std::vector<std::size_t> omega(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(w));
    std::ranges::sort(omega);
    const std::size_t j = sampler->uniform(l);
    if (detail::leaks(g, omega, j)) return Witness{omega, j};
  }
  return std::nullopt;
}

class IsCode {
 public:
  /// Cauchy-matrix construction. Needs field order >= 2l and 0 <= w < l.
  static IsCode build(FieldPtr f, std::size_t l, std::size_t w, std::uint64_t seed = 0) {
    if (!f) throw InvalidArgument("null field");
    if (l < 1) throw InvalidArgument("code length must be >= 1");
    if (w >= l) throw InvalidArgument("secrecy parameter w must satisfy 0 <= w <= l - 1");
    if (f->order() < 2 * std::uint64_t{l})
      throw InvalidArgument("field of order " + std::to_string(f->order()) + " is too small for length " +
                            std::to_string(l) + " (needs >= " + std::to_string(2 * l) + ")");
    Rng rng = Rng(seed).derive("iscode.cauchy");
    std::vector<Value> pts;
    std::set<Value> used;
    while (pts.size() < 2 * l) {
      const auto v = static_cast<Value>(rng.uniform(f->order()));
      if (used.insert(v).second) pts.push_back(v);
    }
    Matrix g(f, l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) g(i, j) = f->inv(f->sub(pts[i], pts[l + j]));
    Rng sampler = Rng(seed).derive("iscode.rank-sample");
    if (auto bad = find_rank_violation(g, w, &sampler))
      throw Error("constructed code violates the rank criterion at " + bad->to_string());
    return IsCode(std::move(g), w);
  }

  /// Wraps a user generator. Throws SingularMatrix for singular G and
  /// InvalidArgument naming the witness when the rank criterion fails.
  static IsCode from_matrix(const Matrix& g, std::size_t w) {
    if (g.rows() != g.cols() || g.rows() == 0) throw InvalidArgument("generator must be a nonempty square matrix");
    if (w >= g.rows()) throw InvalidArgument("secrecy parameter w must satisfy 0 <= w <= l - 1");
    if (gf::mat_rank(g) != g.rows()) throw SingularMatrix("generator is singular");
    Rng sampler(0);
    if (auto bad = find_rank_violation(g, w, &sampler))
      throw InvalidArgument("generator is not individually secure: " + bad->to_string());
    return IsCode(g, w);
  }

  const FieldPtr& field() const { return g_.field(); }
  std::size_t length() const { return g_.rows(); }
  std::size_t secrecy() const { return w_; }
  std::size_t coset_symbols() const { return g_.rows() - w_; }

  const Matrix& generator() const { return g_; }
  Matrix g_star() const { return g_.row_range(0, coset_symbols()); }
  Matrix g_star_star() const { return g_.row_range(coset_symbols(), length()); }
  /// c x l parity check.
  Matrix parity_check() const { return dec_.row_range(0, coset_symbols()); }
  /// w x l basis.
  Matrix basis() const { return dec_.row_range(coset_symbols(), length()); }
  const Matrix& inverse() const { return inv_; }

  /// M is l x B (column i is one message column). Returns G^T M.
  Matrix encode(const Matrix& m) const {
    check_block(m);
    return gt_ * m;
  }

  Matrix decode(const Matrix& x) const {
    check_block(x);
    return dec_ * x;
  }

  std::vector<Value> encode_column(std::span<const Value> m) const { return apply(gt_, m); }
  std::vector<Value> decode_column(std::span<const Value> x) const { return apply(dec_, x); }

  void write(ByteWriter& w) const {
    w.tag("HNCI");
    w.u8(1);
    w.u16(static_cast<std::uint16_t>(length()));
    w.u16(static_cast<std::uint16_t>(w_));
    gf::write_field(w, *field());
    const unsigned width = field()->symbol_bytes();
    for (std::size_t r = 0; r < length(); ++r)
      for (auto v : g_.row(r)) w.uint(v, width);
  }

  static IsCode read(ByteReader& r) {
    r.expect_tag("HNCI");
    if (r.u8() != 1) throw FormatError("unsupported code container version");
    const std::size_t l = r.u16(), w = r.u16();
    auto f = gf::read_field(r);
    Matrix g(f, l, l);
    const unsigned width = f->symbol_bytes();
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        const auto v = r.uint(width);
        if (!f->contains(v)) throw FormatError("code entry outside field");
        g(i, j) = static_cast<Value>(v);
      }
    return from_matrix(g, w);
  }

  friend bool operator==(const IsCode& a, const IsCode& b) { return a.w_ == b.w_ && a.g_ == b.g_; }

 private:
  IsCode(Matrix g, std::size_t w) : g_(std::move(g)), w_(w), inv_(gf::mat_inv(g_)), gt_(g_.transpose()), dec_(inv_.transpose()) {}

  void check_block(const Matrix& m) const {
    gf::require_same_field(m.field(), field());
    if (m.rows() != length())
      throw InvalidArgument("block has " + std::to_string(m.rows()) + " rows, code length is " + std::to_string(length()));
  }

  std::vector<Value> apply(const Matrix& a, std::span<const Value> v) const {
    if (v.size() != length()) throw InvalidArgument("column length does not match code length");
    const gf::Field& f = *field();
    std::vector<Value> out(length(), 0);
    for (std::size_t i = 0; i < length(); ++i)
      for (std::size_t k = 0; k < length(); ++k) {
        if (!f.contains(v[k])) throw InvalidArgument("symbol outside field");
        out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
      }
    return out;
  }

  Matrix g_;
  std::size_t w_;
  Matrix inv_;
  Matrix gt_;
  Matrix dec_;
};

// ---------------------------------------------------------------------------
// Exhaustive secrecy oracle

struct SecrecyReport {
  bool pass = true;
  std::uint64_t messages = 0;       // q^l messages enumerated
  std::size_t subsets = 0;          // observed subsets checked
  double max_tv = 0.0;              // max TV(P(M_j | X_omega = v), uniform) over omega, j, v
  std::optional<Witness> witness;   // first (omega, j) whose conditional is not flat
};

inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 24;

/// Per message index j: whether P(M_j | X_omega = v) is uniform for every v,
/// and the largest total-variation distance from uniform over v.
struct SubsetFlatness {
  std::vector<bool> flat;
  std::vector<double> max_tv;
};

/// Enumerates all q^l messages of a single column (q^l <= 2^24).
inline SubsetFlatness subset_flatness(const Matrix& g, std::span<const std::size_t> omega) {
  const std::size_t l = g.rows();
  if (g.cols() != l) throw InvalidArgument("generator must be square");
  for (auto c : omega)
    if (c >= l) throw InvalidArgument("observed index out of range");
  const gf::Field& f = *g.field();
  const std::uint64_t q = f.order();
  const std::uint64_t total = detail::checked_pow(q, l, kBruteForceLimit);
  if (total > kBruteForceLimit) throw InvalidArgument("instance too large for exhaustive enumeration (q^l > 2^24)");
  const std::uint64_t nobs = detail::checked_pow(q, omega.size(), kBruteForceLimit);

  SubsetFlatness out{std::vector<bool>(l, true), std::vector<double>(l, 0.0)};
  std::vector<std::uint32_t> obs(total);
  std::vector<Value> msg(l, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t key = 0;
    for (std::size_t t = omega.size(); t-- > 0;) {
      Value x = 0;
      for (std::size_t i = 0; i < l; ++i) x = f.add(x, f.mul(msg[i], g(i, omega[t])));
      key = key * q + x;
    }
    obs[idx] = static_cast<std::uint32_t>(key);
    for (std::size_t i = 0; i < l && ++msg[i] == q; ++i) msg[i] = 0;  // odometer, digit 0 fastest
  }
  std::vector<std::uint32_t> counts(nobs * q);
  std::uint64_t stride = 1;
  for (std::size_t j = 0; j < l; ++j, stride *= q) {
    std::ranges::fill(counts, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) ++counts[obs[idx] * q + (idx / stride) % q];
    for (std::uint64_t v = 0; v < nobs; ++v) {
      const std::uint32_t* c = &counts[v * q];
      std::uint64_t n = 0;
      for (std::uint64_t m = 0; m < q; ++m) n += c[m];
      if (n == 0) continue;
      double tv = 0.0;
      for (std::uint64_t m = 0; m < q; ++m) {
        if (c[m] != c[0]) out.flat[j] = false;
        tv += std::abs(static_cast<double>(c[m]) / static_cast<double>(n) - 1.0 / static_cast<double>(q));
      }
      out.max_tv[j] = std::max(out.max_tv[j], tv / 2);
    }
  }
  return out;
}

/// For every |omega| = w_obs and every j, checks that the number of messages
/// with X_omega = v and M_j = m does not depend on m, for every v.
inline SecrecyReport verify_individual_secrecy_bruteforce(const Matrix& g, std::size_t w_obs) {
  const std::size_t l = g.rows();
  if (g.cols() != l) throw InvalidArgument("generator must be square");
  if (w_obs >= l && l > 0) throw InvalidArgument("observed count must be below the code length");
  const std::uint64_t total = detail::checked_pow(g.field()->order(), l, kBruteForceLimit);
  if (total > kBruteForceLimit) throw InvalidArgument("instance too large for exhaustive enumeration (q^l > 2^24)");

  SecrecyReport rep;
  rep.messages = total;
  if (w_obs == 0) return rep;
  auto omega = detail::first_subset(w_obs);
  do {
    ++rep.subsets;
    const auto fl = subset_flatness(g, omega);
    for (std::size_t j = 0; j < l; ++j) {
      rep.max_tv = std::max(rep.max_tv, fl.max_tv[j]);
      if (!fl.flat[j] && rep.pass) {
        rep.pass = false;
        rep.witness = Witness{omega, j};
      }
    }
  } while (detail::next_subset(omega, l));
  return rep;
}

inline SecrecyReport verify_individual_secrecy_bruteforce(const IsCode& code, std::size_t w_obs) {
  if (w_obs > code.secrecy()) throw InvalidArgument("observed count exceeds the code's secrecy parameter");
  return verify_individual_secrecy_bruteforce(code.generator(), w_obs);
}

// ---------------------------------------------------------------------------
// Linear-system reconstruction

struct Reconstruction {
  std::vector<Value> encoded;  // full X column
  std::vector<Value> message;  // full M column
  std::uint64_t ops = 0;       // elimination operation count
};

/// Given c message symbols (at msg_pos) and l - c encoded symbols (at
/// enc_pos), recovers the whole column by solving the l x l system
///   M_i = known           for i in msg_pos
///   sum_i M_i G_ik = X_k  for k in enc_pos
inline Reconstruction reconstruct_encoded(const IsCode& code, std::span<const std::size_t> msg_pos,
                                          std::span<const Value> msg_vals, std::span<const std::size_t> enc_pos,
                                          std::span<const Value> enc_vals) {
  const std::size_t l = code.length();
  if (msg_pos.size() != msg_vals.size() || enc_pos.size() != enc_vals.size())
    throw InvalidArgument("positions and values differ in length");
  if (msg_pos.size() + enc_pos.size() != l) throw InvalidArgument("exactly l symbols must be given");
  for (auto p : msg_pos)
    if (p >= l) throw InvalidArgument("message position out of range");
  for (auto p : enc_pos)
    if (p >= l) throw InvalidArgument("encoded position out of range");
  const Matrix& g = code.generator();
  Matrix a(code.field(), l, l);
  std::vector<Value> b(l);
  std::size_t row = 0;
  for (std::size_t t = 0; t < msg_pos.size(); ++t, ++row) {
    a(row, msg_pos[t]) = 1;
    b[row] = msg_vals[t];
  }
  for (std::size_t t = 0; t < enc_pos.size(); ++t, ++row) {
    for (std::size_t i = 0; i < l; ++i) a(row, i) = g(i, enc_pos[t]);
    b[row] = enc_vals[t];
  }
  auto sol = gf::solve_linear(a, b);
  if (!sol.x) throw InvalidArgument("inconsistent inputs: no message produces them");
  if (!sol.unique) throw SingularMatrix("reconstruction system is singular for these positions");
  Reconstruction out;
  out.message = std::move(*sol.x);
  out.encoded = code.encode_column(out.message);
  out.ops = sol.ops;
  return out;
}

}  // namespace huncc::is
