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

// The hybrid pipeline: premix l messages with an individually secure code,
// then encrypt c of the l coded rows with a public-key cipher.
//
// Symbol rows are cut into cipher blocks of exactly k_b bits. A superblock of
// B = lcm(s, k_b) / s symbol columns (s = bits per symbol) fills every row
// with lcm(s, k_b) / k_b whole cipher blocks, so no bits are wasted. Byte
// messages are terminated by a single 1 bit and filled with random bits up to
// a whole number of superblocks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "huncc/bits.hpp"
#include "huncc/bytes.hpp"
#include "huncc/cryptosys.hpp"
#include "huncc/error.hpp"
#include "huncc/galois.hpp"
#include "huncc/iscode.hpp"
#include "huncc/rng.hpp"

namespace huncc::pipeline {

using crypto::CryptosystemSpec;
using crypto::Decryptor;
using crypto::Encryptor;
using gf::Matrix;
using gf::Value;
using is::IsCode;

// ---------------------------------------------------------------------------
// Symbol packing

/// Packs ceil(k_bits / u) symbols of u bits into exactly k_bits bits. Symbol j
/// fills bits [j u, (j + 1) u); the last symbol keeps only its low bits and its
/// dropped high bits must be zero.
inline BitVector pack_symbols_to_bits(std::span<const Value> symbols, unsigned u, std::size_t k_bits) {
  if (u == 0 || u > 32) throw InvalidArgument("symbol width must be in [1, 32]");
  const std::size_t count = (k_bits + u - 1) / u;
  if (symbols.size() != count)
    throw InvalidArgument("expected " + std::to_string(count) + " symbols, got " + std::to_string(symbols.size()));
  BitVector out(k_bits);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t begin = j * u;
    const unsigned width = static_cast<unsigned>(std::min<std::size_t>(u, k_bits - begin));
    if (width < 32 && (std::uint64_t{symbols[j]} >> width) != 0)
      throw FormatError("symbol " + std::to_string(j) + " has nonzero bits beyond the block length");
    out.write_uint(begin, width, symbols[j]);
  }
  return out;
}

inline std::vector<Value> unpack_bits_to_symbols(const BitVector& bits, unsigned u) {
  if (u == 0 || u > 32) throw InvalidArgument("symbol width must be in [1, 32]");
  const std::size_t k = bits.size();
  std::vector<Value> out((k + u - 1) / u);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::size_t begin = j * u;
    out[j] = static_cast<Value>(bits.read_uint(begin, static_cast<unsigned>(std::min<std::size_t>(u, k - begin))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

enum class KeyMode : std::uint8_t { kShared = 0, kPerPath = 1 };

class HunccConfig {
 public:
  /// Standard mode: GF(2^u) with u >= l, Cauchy code from code_seed.
  static HunccConfig standard(std::size_t l, std::size_t c, unsigned u, CryptosystemSpec cipher,
                              std::uint64_t code_seed = 0) {
    check_counts(l, c);
    if (u < l) throw InvalidArgument("field degree u must be >= l (got u=" + std::to_string(u) + ", l=" + std::to_string(l) + ")");
    if (u > 31) throw InvalidArgument("field degree u must be <= 31");
    return HunccConfig(IsCode::build(gf::Field::binary(u), l, l - c, code_seed), cipher);
  }

  /// Any code; c is the code's coset-symbol count.
  static HunccConfig with_code(IsCode code, CryptosystemSpec cipher) {
    check_counts(code.length(), code.coset_symbols());
    return HunccConfig(std::move(code), cipher);
  }

  /// Physical paths (0-based) that carry the c encrypted rows, in row order.
  HunccConfig& assign_encrypted(std::vector<std::size_t> paths) {
    if (paths.size() != c()) throw InvalidArgument("encrypted path set must have exactly c entries");
    std::vector<bool> seen(l(), false);
    for (auto p : paths) {
      if (p >= l() || seen[p]) throw InvalidArgument("encrypted paths must be distinct indices below l");
      seen[p] = true;
    }
    encrypted_ = std::move(paths);
    rebuild_routes();
    return *this;
  }

  HunccConfig& key_mode(KeyMode m) {
    key_mode_ = m;
    return *this;
  }

  std::size_t l() const { return code_.length(); }
  std::size_t c() const { return code_.coset_symbols(); }
  std::size_t w() const { return code_.secrecy(); }
  unsigned u() const { return code_.field()->degree(); }
  unsigned symbol_bits() const { return code_.field()->symbol_bits(); }
  const IsCode& code() const { return code_; }
  const CryptosystemSpec& cipher() const { return cipher_; }
  KeyMode key_mode() const { return key_mode_; }
  const std::vector<std::size_t>& encrypted_paths() const { return encrypted_; }
  std::size_t ciphers_needed() const { return key_mode_ == KeyMode::kShared ? 1 : c(); }

  /// Coded row carried by physical path p, and its inverse.
  std::size_t row_of_path(std::size_t p) const { return row_of_path_.at(p); }
  std::size_t path_of_row(std::size_t r) const { return path_of_row_.at(r); }
  bool path_encrypted(std::size_t p) const { return row_of_path(p) < c(); }

  /// Symbol columns per superblock and cipher blocks per row per superblock.
  std::size_t superblock_columns() const { return std::lcm<std::size_t>(symbol_bits(), cipher_.k_bits) / symbol_bits(); }
  std::size_t blocks_per_superblock() const {
    return std::lcm<std::size_t>(symbol_bits(), cipher_.k_bits) / cipher_.k_bits;
  }

  Digest digest() const {
    ByteWriter w;
    w.tag("huncc-config");
    w.u8(1);
    code_.write(w);
    w.u16(static_cast<std::uint16_t>(c()));
    for (auto p : encrypted_) w.u16(static_cast<std::uint16_t>(p));
    w.u8(static_cast<std::uint8_t>(cipher_.scheme));
    w.u64(cipher_.k_bits);
    w.u64(cipher_.n_bits);
    w.u32(cipher_.security_bits);
    w.u8(static_cast<std::uint8_t>(key_mode_));
    return sha256(w.bytes());
  }

 private:
  HunccConfig(IsCode code, CryptosystemSpec cipher) : code_(std::move(code)), cipher_(cipher) {
    if (cipher_.k_bits == 0 || cipher_.n_bits < cipher_.k_bits) throw InvalidArgument("cipher needs 1 <= k_b <= n_b");
    encrypted_.resize(c());
    std::iota(encrypted_.begin(), encrypted_.end(), std::size_t{0});
    rebuild_routes();
  }

  static void check_counts(std::size_t l, std::size_t c) {
    if (l < 1) throw InvalidArgument("need at least one path");
    if (c < 1) throw InvalidArgument("at least one path must be encrypted (c >= 1)");
    if (c > l) throw InvalidArgument("cannot encrypt more paths than exist (c <= l)");
    if (l > 0xFFFF) throw InvalidArgument("too many paths");
  }

  void rebuild_routes() {
    path_of_row_.assign(l(), 0);
    row_of_path_.assign(l(), 0);
    std::vector<bool> enc(l(), false);
    for (std::size_t r = 0; r < c(); ++r) {
      path_of_row_[r] = encrypted_[r];
      enc[encrypted_[r]] = true;
    }
    std::size_t r = c();
    for (std::size_t p = 0; p < l(); ++p)
      if (!enc[p]) path_of_row_[r++] = p;
    for (std::size_t i = 0; i < l(); ++i) row_of_path_[path_of_row_[i]] = i;
  }

  IsCode code_;
  CryptosystemSpec cipher_;
  std::vector<std::size_t> encrypted_;
  std::vector<std::size_t> path_of_row_;
  std::vector<std::size_t> row_of_path_;
  KeyMode key_mode_ = KeyMode::kShared;
};

// ---------------------------------------------------------------------------
// Wire types

struct PathPayload {
  std::size_t path = 0;
  bool encrypted = false;
  std::size_t bit_length = 0;
  Bytes bytes;

  BitVector bits() const { return BitVector::from_bytes(bytes, bit_length); }
  bool operator==(const PathPayload&) const = default;
};

struct Transmission {
  Digest config_digest{};
  std::uint64_t message_bytes = 0;
  std::uint32_t block_count = 0;  // symbol columns
  std::vector<PathPayload> payloads;

  bool operator==(const Transmission&) const = default;

  std::size_t payload_bits() const {
    std::size_t n = 0;
    for (const auto& p : payloads) n += p.bit_length;
    return n;
  }
};

inline constexpr std::uint8_t kTransmissionVersion = 1;

inline Bytes serialize(const Transmission& t) {
  ByteWriter w;
  w.tag("HNCT");
  w.u8(kTransmissionVersion);
  w.raw(t.config_digest);
  w.u64(t.message_bytes);
  w.u32(t.block_count);
  for (const auto& p : t.payloads) {
    w.u16(static_cast<std::uint16_t>(p.path));
    w.u8(p.encrypted ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(p.bytes.size()));
    w.raw(p.bytes);
  }
  return std::move(w).bytes();
}

/// Payload bit lengths are set to 8 * byte length; decode recomputes them from
/// the configuration.
inline Transmission parse_transmission(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  r.expect_tag("HNCT");
  if (r.u8() != kTransmissionVersion) throw FormatError("unsupported transmission version");
  Transmission t;
  auto d = r.raw(32);
  std::copy(d.begin(), d.end(), t.config_digest.begin());
  t.message_bytes = r.u64();
  t.block_count = r.u32();
  while (!r.done()) {
    PathPayload p;
    p.path = r.u16();
    const auto flag = r.u8();
    if (flag > 1) throw FormatError("bad encrypted flag");
    p.encrypted = flag == 1;
    const auto len = r.u32();
    auto bytes = r.raw(len);
    p.bytes.assign(bytes.begin(), bytes.end());
    p.bit_length = 8 * p.bytes.size();
    t.payloads.push_back(std::move(p));
  }
  return t;
}

/// Replaces byte-rounded payload bit lengths with the exact ones implied by
/// the configuration and the header's column count.
inline void set_exact_bit_lengths(const HunccConfig& cfg, Transmission& t) {
  const std::size_t row_bits = std::size_t{t.block_count} * cfg.symbol_bits();
  const std::size_t blocks = row_bits / cfg.cipher().k_bits;
  for (auto& p : t.payloads) {
    const std::size_t want = p.encrypted ? blocks * cfg.cipher().n_bits : row_bits;
    if (p.bytes.size() != (want + 7) / 8) throw FormatError("path " + std::to_string(p.path + 1) + " payload length mismatch");
    p.bit_length = want;
  }
}

inline Transmission parse_transmission(const HunccConfig& cfg, std::span<const std::uint8_t> data) {
  Transmission t = parse_transmission(data);
  set_exact_bit_lengths(cfg, t);
  return t;
}

// ---------------------------------------------------------------------------
// Block level

namespace detail {

inline void check_ciphers(const HunccConfig& cfg, std::size_t given, const CryptosystemSpec& spec) {
  if (given != cfg.ciphers_needed())
    throw InvalidArgument("expected " + std::to_string(cfg.ciphers_needed()) + " cipher(s), got " + std::to_string(given));
  if (spec.k_bits != cfg.cipher().k_bits || spec.n_bits != cfg.cipher().n_bits)
    throw InvalidArgument("cipher block sizes do not match the configuration");
}

inline BitVector row_bits(const Matrix& x, std::size_t r, unsigned s) {
  BitVector out(x.cols() * s);
  for (std::size_t j = 0; j < x.cols(); ++j) out.write_uint(j * s, s, x(r, j));
  return out;
}

template <class F>
auto run_paths(std::size_t n, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::future<R>> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) jobs.push_back(std::async(std::launch::async, f, i));
  std::vector<R> out;
  out.reserve(n);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace detail

/// M is l x B with B s a multiple of k_b. Returns one payload per physical
/// path, ordered by path index. ciphers has one entry (shared key) or c
/// entries (per-path keys, in encrypted-row order).
inline std::vector<PathPayload> encode_block(const HunccConfig& cfg, const Matrix& m,
                                             std::span<const Encryptor* const> ciphers, const Seed& seed) {
  for (auto* e : ciphers)
    if (!e) throw InvalidArgument("null cipher");
  if (ciphers.empty()) throw InvalidArgument("no cipher given");
  detail::check_ciphers(cfg, ciphers.size(), ciphers[0]->spec());
  for (auto* e : ciphers) detail::check_ciphers(cfg, ciphers.size(), e->spec());
  const unsigned s = cfg.symbol_bits();
  const std::size_t kb = cfg.cipher().k_bits, nb = cfg.cipher().n_bits;
  if ((m.cols() * s) % kb != 0) throw InvalidArgument("row bit length must be a multiple of the cipher block length");
  const std::size_t blocks = m.cols() * s / kb;
  const Matrix x = cfg.code().encode(m);
  auto payloads = detail::run_paths(cfg.l(), [&](std::size_t p) {
    const std::size_t r = cfg.row_of_path(p);
    BitVector bits = detail::row_bits(x, r, s);
    PathPayload out;
    out.path = p;
    out.encrypted = r < cfg.c();
    if (!out.encrypted) {
      out.bit_length = bits.size();
      out.bytes = bits.to_bytes();
      return out;
    }
    const Encryptor& enc = *ciphers[cfg.key_mode() == KeyMode::kShared ? 0 : r];
    Rng rng = Rng(seed).derive("huncc.cipher", p);
    BitVector ct(blocks * nb);
    for (std::size_t b = 0; b < blocks; ++b) ct.assign(b * nb, enc.encrypt(bits.slice(b * kb, kb), rng));
    out.bit_length = ct.size();
    out.bytes = ct.to_bytes();
    return out;
  });
  return payloads;
}

/// Inverse of encode_block for a block of `cols` symbol columns.
inline Matrix decode_block(const HunccConfig& cfg, std::span<const PathPayload> payloads, std::size_t cols,
                           std::span<const Decryptor* const> keys) {
  for (auto* k : keys)
    if (!k) throw InvalidArgument("null key");
  if (keys.empty()) throw InvalidArgument("no key given");
  for (auto* k : keys) detail::check_ciphers(cfg, keys.size(), k->spec());
  if (payloads.size() != cfg.l())
    throw FormatError("expected " + std::to_string(cfg.l()) + " payloads, got " + std::to_string(payloads.size()));
  const unsigned s = cfg.symbol_bits();
  const std::size_t kb = cfg.cipher().k_bits, nb = cfg.cipher().n_bits;
  if ((cols * s) % kb != 0) throw FormatError("block column count is not a whole number of cipher blocks");
  const std::size_t blocks = cols * s / kb;
  std::vector<const PathPayload*> by_path(cfg.l(), nullptr);
  std::size_t enc_count = 0;
  for (const auto& p : payloads) {
    if (p.path >= cfg.l() || by_path[p.path]) throw FormatError("duplicate or out-of-range path index " + std::to_string(p.path));
    if (p.encrypted != cfg.path_encrypted(p.path))
      throw FormatError("path " + std::to_string(p.path + 1) + " encrypted flag disagrees with the configuration");
    by_path[p.path] = &p;
    enc_count += p.encrypted;
  }
  if (enc_count != cfg.c()) throw FormatError("transmission does not carry exactly c encrypted payloads");
  auto rows = detail::run_paths(cfg.l(), [&](std::size_t p) {
    const PathPayload& pl = *by_path[p];
    const std::size_t r = cfg.row_of_path(p);
    const std::size_t want = pl.encrypted ? blocks * nb : blocks * kb;
    if (pl.bytes.size() != (want + 7) / 8)
      throw FormatError("path " + std::to_string(p + 1) + " payload has " + std::to_string(pl.bytes.size()) +
                        " bytes, expected " + std::to_string((want + 7) / 8));
    BitVector in = BitVector::from_bytes(pl.bytes, want);
    if (!pl.encrypted) return in;
    const Decryptor& dec = *keys[cfg.key_mode() == KeyMode::kShared ? 0 : r];
    BitVector bits(blocks * kb);
    for (std::size_t b = 0; b < blocks; ++b) {
      try {
        bits.assign(b * kb, dec.decrypt(in.slice(b * nb, nb)));
      } catch (const DecodingFailure& e) {
        throw DecodingFailure("path " + std::to_string(p + 1) + ", block " + std::to_string(b) + ": " + e.what());
      }
    }
    return bits;
  });
  const gf::Field& f = *cfg.code().field();
  Matrix x(cfg.code().field(), cfg.l(), cols);
  for (std::size_t p = 0; p < cfg.l(); ++p) {
    const std::size_t r = cfg.row_of_path(p);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = rows[p].read_uint(j * s, s);
      if (!f.contains(v)) throw FormatError("path " + std::to_string(p + 1) + " carries a symbol outside the field");
      x(r, j) = static_cast<Value>(v);
    }
  }
  return cfg.code().decode(x);
}

// ---------------------------------------------------------------------------
// Byte messages

/// Splits `message` into l contiguous rows, premixes, encrypts. The field must
/// be binary so that every s-bit chunk is a symbol.
inline Transmission encode(const HunccConfig& cfg, std::span<const std::uint8_t> message,
                           std::span<const Encryptor* const> ciphers, const Seed& seed) {
  if (!cfg.code().field()->is_binary()) throw InvalidArgument("byte messages need a binary field");
  const unsigned s = cfg.symbol_bits();
  const std::size_t cols_per_sb = cfg.superblock_columns();
  const std::size_t row_bits_sb = cols_per_sb * s;
  const std::size_t need = 8 * message.size() + 1;
  const std::size_t sbs = (need + cfg.l() * row_bits_sb - 1) / (cfg.l() * row_bits_sb);
  const std::size_t cols = sbs * cols_per_sb;
  if (cols > 0xFFFFFFFFu) throw InvalidArgument("message too large");
  const std::size_t total = cfg.l() * cols * s;

  BitVector stream(total);
  for (std::size_t i = 0; i < message.size(); ++i)
    for (unsigned b = 0; b < 8; ++b)
      if ((message[i] >> b) & 1) stream.set(8 * i + b);
  stream.set(8 * message.size());
  Rng pad = Rng(seed).derive("huncc.padding");
  for (std::size_t i = need; i < total; ++i) stream.set(i, pad.bit());

  Matrix m(cfg.code().field(), cfg.l(), cols);
  const std::size_t row_len = cols * s;
  for (std::size_t r = 0; r < cfg.l(); ++r)
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = static_cast<Value>(stream.read_uint(r * row_len + j * s, s));

  Transmission t;
  t.config_digest = cfg.digest();
  t.message_bytes = message.size();
  t.block_count = static_cast<std::uint32_t>(cols);
  t.payloads = encode_block(cfg, m, ciphers, seed);
  return t;
}

inline Bytes decode(const HunccConfig& cfg, const Transmission& t, std::span<const Decryptor* const> keys) {
  if (t.config_digest != cfg.digest()) throw FormatError("transmission was produced under a different configuration");
  if (!cfg.code().field()->is_binary()) throw InvalidArgument("byte messages need a binary field");
  const unsigned s = cfg.symbol_bits();
  const std::size_t cols = t.block_count;
  if (cols == 0 || cols % cfg.superblock_columns() != 0) throw FormatError("block count is not a whole number of superblocks");
  const std::size_t total = cfg.l() * cols * s;
  if (8 * t.message_bytes + 1 > total) throw FormatError("header message length exceeds the payload capacity");
  const Matrix m = decode_block(cfg, t.payloads, cols, keys);
  const std::size_t row_len = cols * s;
  BitVector stream(total);
  for (std::size_t r = 0; r < cfg.l(); ++r)
    for (std::size_t j = 0; j < cols; ++j) stream.write_uint(r * row_len + j * s, s, m(r, j));
  if (!stream.get(8 * t.message_bytes)) throw FormatError("message terminator bit missing");
  Bytes out(t.message_bytes);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(stream.read_uint(8 * i, 8));
  return out;
}

// ---------------------------------------------------------------------------
// Single-path mode: one blob carrying all l payloads, each prefixed by its
// u32 byte length.

inline Bytes frame_single_path(const Transmission& t) {
  ByteWriter w;
  w.tag("HNCV");
  w.u8(kTransmissionVersion);
  w.raw(t.config_digest);
  w.u64(t.message_bytes);
  w.u32(t.block_count);
  w.u16(static_cast<std::uint16_t>(t.payloads.size()));
  for (const auto& p : t.payloads) {
    w.u32(static_cast<std::uint32_t>(p.bytes.size()));
    w.raw(p.bytes);
  }
  return std::move(w).bytes();
}

inline constexpr std::size_t kSinglePathHeaderBytes = 4 + 1 + 32 + 8 + 4 + 2;

/// Paths are numbered in frame order; encrypted flags come from cfg.
inline Transmission split_single_path(const HunccConfig& cfg, std::span<const std::uint8_t> blob) {
  ByteReader r(blob);
  r.expect_tag("HNCV");
  if (r.u8() != kTransmissionVersion) throw FormatError("unsupported single-path version");
  Transmission t;
  auto d = r.raw(32);
  std::copy(d.begin(), d.end(), t.config_digest.begin());
  t.message_bytes = r.u64();
  t.block_count = r.u32();
  const std::size_t n = r.u16();
  if (n != cfg.l()) throw FormatError("frame count does not match the path count");
  for (std::size_t p = 0; p < n; ++p) {
    PathPayload pl;
    pl.path = p;
    pl.encrypted = cfg.path_encrypted(p);
    const auto len = r.u32();
    auto bytes = r.raw(len);
    pl.bytes.assign(bytes.begin(), bytes.end());
    pl.bit_length = 8 * pl.bytes.size();
    t.payloads.push_back(std::move(pl));
  }
  if (!r.done()) throw FormatError("trailing bytes after the last frame");
  set_exact_bit_lengths(cfg, t);
  return t;
}

}  // namespace huncc::pipeline
