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

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "huncc/bytes.hpp"
#include "huncc/error.hpp"

namespace huncc {

/// 32-byte seed. Every random choice in the library flows from one of these.
struct Seed {
  std::array<std::uint8_t, 32> bytes{};

  static Seed from_u64(std::uint64_t v) {
    Seed s;
    for (int i = 0; i < 8; ++i) s.bytes[i] = static_cast<std::uint8_t>(v >> (8 * i));
    return s;
  }

  /// Parses up to 64 hex digits; shorter strings are left-padded with zeros.
  static Seed from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty() || hex.size() > 64) throw InvalidArgument("seed must be 1..64 hex digits");
    std::string padded(64 - hex.size(), '0');
    padded.append(hex);
    Seed s;
    for (std::size_t i = 0; i < 32; ++i) {
      auto nib = [&](char ch) -> std::uint8_t {
        if (ch >= '0' && ch <= '9') return static_cast<std::uint8_t>(ch - '0');
        if (ch >= 'a' && ch <= 'f') return static_cast<std::uint8_t>(ch - 'a' + 10);
        if (ch >= 'A' && ch <= 'F') return static_cast<std::uint8_t>(ch - 'A' + 10);
        throw InvalidArgument("seed contains a non-hex character");
      };
      s.bytes[i] = static_cast<std::uint8_t>(nib(padded[2 * i]) << 4 | nib(padded[2 * i + 1]));
    }
    return s;
  }

  std::string hex() const { return to_hex(bytes); }
  bool operator==(const Seed&) const = default;
};

/// Deterministic random source: mt19937_64 seeded through std::seed_seq, with
/// bounded sampling done here rather than through the (implementation-defined)
/// std distributions so that outputs are identical across standard libraries.
class Rng {
 public:
  explicit Rng(const Seed& seed) : seed_(seed) {
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t b = 0; b < 4; ++b) words[i] |= std::uint32_t{seed.bytes[4 * i + b]} << (8 * b);
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }
  explicit Rng(std::uint64_t seed) : Rng(Seed::from_u64(seed)) {}

  /// Independent stream for (label, index), e.g. one per trial or per path.
  Rng derive(std::string_view label, std::uint64_t index = 0) const {
    ByteWriter w;
    w.raw(seed_.bytes);
    w.tag(label);
    w.u64(index);
    Seed child;
    child.bytes = sha256(w.bytes());
    return Rng(child);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform(0)");
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound + 1) % bound;
    std::uint64_t x;
    do x = engine_();
    while (x > limit);
    return x % bound;
  }

  bool bit() { return (engine_() >> 63) != 0; }

  void fill(std::span<std::uint8_t> out) {
    for (auto& b : out) b = static_cast<std::uint8_t>(engine_() >> 56);
  }

  const Seed& seed() const { return seed_; }

 private:
  Seed seed_;
  std::mt19937_64 engine_;
};

}  // namespace huncc
