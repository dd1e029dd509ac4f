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

// Packed GF(2) vectors and matrices. Bit i of a vector lives in bit (i % 64)
// of word i / 64; the byte form is little-endian bit-within-byte.

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "huncc/bytes.hpp"
#include "huncc/error.hpp"

namespace huncc {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVector from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (bytes.size() * 8 < nbits) throw FormatError("bit vector shorter than declared length");
    BitVector v(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
      if ((bytes[i / 8] >> (i % 8)) & 1) v.set(i);
    for (std::size_t i = nbits; i < bytes.size() * 8; ++i)
      if ((bytes[i / 8] >> (i % 8)) & 1) throw FormatError("nonzero padding bits after bit vector");
    return v;
  }

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') v.set(i);
      else if (s[i] != '0') throw InvalidArgument("bit string contains a non-binary character");
    }
    return v;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool b = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (b) w_[i >> 6] |= mask;
    else w_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  BitVector& operator^=(const BitVector& o) {
    if (o.n_ != n_) throw InvalidArgument("bit vector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

  /// Parity of the bitwise AND.
  bool dot(const BitVector& o) const {
    if (o.n_ != n_) throw InvalidArgument("bit vector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
  }

  BitVector slice(std::size_t begin, std::size_t len) const {
    if (begin + len > n_) throw InvalidArgument("bit slice out of range");
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i)
      if (get(begin + i)) out.set(i);
    return out;
  }

  /// Writes src into bits [begin, begin + src.size()).
  void assign(std::size_t begin, const BitVector& src) {
    if (begin + src.n_ > n_) throw InvalidArgument("bit assign out of range");
    for (std::size_t i = 0; i < src.n_; ++i) set(begin + i, src.get(i));
  }

  void append(const BitVector& o) {
    const std::size_t old = n_;
    resize(n_ + o.n_);
    assign(old, o);
  }

  void resize(std::size_t n) {
    n_ = n;
    w_.resize((n + 63) / 64, 0);
    if (n & 63) w_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  }

  /// Low `bits` bits starting at `begin` as an integer (bits <= 64).
  std::uint64_t read_uint(std::size_t begin, unsigned bits) const {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bits; ++i)
      if (get(begin + i)) v |= std::uint64_t{1} << i;
    return v;
  }
  void write_uint(std::size_t begin, unsigned bits, std::uint64_t v) {
    for (unsigned i = 0; i < bits; ++i) set(begin + i, (v >> i) & 1);
  }

  Bytes to_bytes() const {
    Bytes out((n_ + 7) / 8, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(w_[i / 8] >> (8 * (i % 8)));
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  std::span<std::uint64_t> words() { return w_; }
  std::span<const std::uint64_t> words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool b = true) { rows_[r].set(c, b); }

  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  /// Row vector times matrix.
  BitVector left_mul(const BitVector& v) const {
    if (v.size() != rows()) throw InvalidArgument("vector length does not match matrix rows");
    BitVector out(cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      if (v.get(i)) out ^= rows_[i];
    return out;
  }

  /// Matrix times column vector.
  BitVector right_mul(const BitVector& v) const {
    if (v.size() != cols_) throw InvalidArgument("vector length does not match matrix columns");
    BitVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
      if (rows_[i].dot(v)) out.set(i);
    return out;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows()) throw InvalidArgument("bit matrix dimension mismatch in product");
    BitMatrix out(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) out.rows_[i] = b.left_mul(a.rows_[i]);
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  /// New matrix whose column j is column idx[j] of this one.
  BitMatrix select_columns(std::span<const std::size_t> idx) const {
    BitMatrix m(rows(), idx.size());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (get(r, idx[j])) m.set(r, j);
    return m;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows(); ++c) {
      std::size_t piv = rank;
      while (piv < rows() && !get(piv, c)) ++piv;
      if (piv == rows()) continue;
      swap_rows(piv, rank);
      for (std::size_t r = 0; r < rows(); ++r)
        if (r != rank && get(r, c)) rows_[r] ^= rows_[rank];
      pivots.push_back(c);
      ++rank;
    }
    return pivots;
  }

  std::size_t rank() const {
    BitMatrix m = *this;
    return m.rref().size();
  }

  BitMatrix inverse() const {
    if (rows() != cols_) throw InvalidArgument("inverse of a non-square bit matrix");
    const std::size_t n = cols_;
    BitMatrix a = *this, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && !a.get(piv, c)) ++piv;
      if (piv == n) throw SingularMatrix("bit matrix is singular");
      a.swap_rows(piv, c);
      inv.swap_rows(piv, c);
      for (std::size_t r = 0; r < n; ++r)
        if (r != c && a.get(r, c)) {
          a.rows_[r] ^= a.rows_[c];
          inv.rows_[r] ^= inv.rows_[c];
        }
    }
    return inv;
  }

  /// Row-major, each row padded to a byte boundary.
  void write(ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(rows()));
    w.u32(static_cast<std::uint32_t>(cols_));
    for (const auto& r : rows_) w.raw(r.to_bytes());
  }

  static BitMatrix read(ByteReader& rd) {
    const std::size_t rows = rd.u32(), cols = rd.u32();
    const std::size_t row_bytes = (cols + 7) / 8;
    if (rows * row_bytes > rd.remaining()) throw FormatError("truncated bit matrix");
    BitMatrix m;
    m.cols_ = cols;
    m.rows_.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) m.rows_.push_back(BitVector::from_bytes(rd.raw(row_bytes), cols));
    return m;
  }

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

}  // namespace huncc
