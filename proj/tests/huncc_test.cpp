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

#include "huncc/huncc.hpp"

#include <gtest/gtest.h>

namespace huncc::pipeline {
namespace {

using crypto::IdentityCipher;
using crypto::mceliece_keygen;
using crypto::preset;

Bytes random_bytes(std::size_t n, Rng& rng) {
  Bytes b(n);
  rng.fill(b);
  return b;
}

const crypto::McElieceKeyPair& toy_keys() {
  static const auto kp = mceliece_keygen(preset("toy16"), 1);
  return kp;
}

const crypto::McElieceKeyPair& classic_keys() {
  static const auto kp = mceliece_keygen(preset("classic1024"), 1);
  return kp;
}

IsCode demo_code() { return IsCode::from_matrix(Matrix::from_rows(gf::Field::make(7, 1), {{1, 1}, {2, 1}}), 1); }

TEST(PackTest, TwoNibbles) {
  std::vector<Value> sym{0x3, 0xA};
  auto bits = pack_symbols_to_bits(sym, 4, 8);
  EXPECT_EQ(bits.to_bytes(), (Bytes{0xA3}));  // symbol 0 in the low nibble
  EXPECT_EQ(unpack_bits_to_symbols(bits, 4), sym);
}

TEST(PackTest, ZeroSymbols) {
  std::vector<Value> sym(5, 0);
  EXPECT_FALSE(pack_symbols_to_bits(sym, 7, 33).any());
}

TEST(PackTest, TruncatedLastSymbol) {
  std::vector<Value> ok{7, 5, 3};
  auto bits = pack_symbols_to_bits(ok, 3, 8);
  EXPECT_EQ(unpack_bits_to_symbols(bits, 3), ok);
  std::vector<Value> bad{7, 5, 4};  // bit 2 of the last symbol would be bit 8
  EXPECT_THROW(pack_symbols_to_bits(bad, 3, 8), FormatError);
  std::vector<Value> short_list{7, 5};
  EXPECT_THROW(pack_symbols_to_bits(short_list, 3, 8), InvalidArgument);
}

TEST(PackTest, RandomRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const unsigned u = 1 + static_cast<unsigned>(rng.uniform(16));
    const std::size_t k = 1 + rng.uniform(300);
    std::vector<Value> sym((k + u - 1) / u);
    for (std::size_t j = 0; j < sym.size(); ++j) {
      const std::size_t width = std::min<std::size_t>(u, k - j * u);
      sym[j] = static_cast<Value>(rng.uniform(std::uint64_t{1} << width));
    }
    ASSERT_EQ(unpack_bits_to_symbols(pack_symbols_to_bits(sym, u, k), u), sym);
  }
}

TEST(ConfigTest, Invariants) {
  auto spec = preset("toy16").spec();
  EXPECT_THROW(HunccConfig::standard(2, 0, 2, spec), InvalidArgument);
  EXPECT_THROW(HunccConfig::standard(2, 3, 2, spec), InvalidArgument);
  EXPECT_THROW(HunccConfig::standard(3, 1, 2, spec), InvalidArgument);
  auto cfg = HunccConfig::standard(3, 2, 3, spec);
  EXPECT_EQ(cfg.w(), 1u);
  EXPECT_EQ(cfg.encrypted_paths(), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(cfg.assign_encrypted({0}), InvalidArgument);
  EXPECT_THROW(cfg.assign_encrypted({1, 1}), InvalidArgument);
  cfg.assign_encrypted({2, 0});
  EXPECT_TRUE(cfg.path_encrypted(2));
  EXPECT_FALSE(cfg.path_encrypted(1));
  EXPECT_EQ(cfg.row_of_path(2), 0u);
  EXPECT_EQ(cfg.row_of_path(1), 2u);
}

TEST(ConfigTest, SuperblockGeometry) {
  auto cfg = HunccConfig::standard(10, 5, 10, preset("toy16").spec());
  EXPECT_EQ(cfg.superblock_columns(), 4u);   // lcm(10, 8) = 40 bits
  EXPECT_EQ(cfg.blocks_per_superblock(), 5u);
  auto cfg4 = HunccConfig::standard(2, 1, 4, preset("toy16").spec());
  EXPECT_EQ(cfg4.superblock_columns(), 2u);  // ceil(8 / 4) when u divides k_b
}

TEST(BlockTest, DemoCodeWithIdentityCipher) {
  auto cfg = HunccConfig::with_code(demo_code(), IdentityCipher(3).spec());
  IdentityCipher id(3);
  const Encryptor* enc[] = {&id};
  const Decryptor* dec[] = {&id};
  Matrix m(cfg.code().field(), 2, 1);
  m(0, 0) = 3;
  m(1, 0) = 5;
  auto payloads = encode_block(cfg, m, enc, Seed{});
  ASSERT_EQ(payloads.size(), 2u);
  EXPECT_TRUE(payloads[0].encrypted);
  EXPECT_FALSE(payloads[1].encrypted);
  // X = M G with G = [[1,1],[2,1]]: (3 + 2*5, 3 + 5) mod 7.
  EXPECT_EQ(payloads[0].bits().read_uint(0, 3), (3u + 2 * 5) % 7);
  EXPECT_EQ(payloads[1].bits().read_uint(0, 3), (3u + 5) % 7);
  EXPECT_EQ(decode_block(cfg, payloads, 1, dec), m);
}

TEST(BlockTest, ToyPayloadLengths) {
  auto cfg = HunccConfig::standard(2, 1, 4, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  Matrix m(cfg.code().field(), 2, 2);
  auto payloads = encode_block(cfg, m, enc, Seed{});
  EXPECT_EQ(payloads[0].bit_length, 16u);
  EXPECT_EQ(payloads[1].bit_length, 8u);
}

TEST(BlockTest, CipherMismatchRejected) {
  auto cfg = HunccConfig::standard(2, 1, 4, preset("toy16").spec());
  IdentityCipher id(8);
  const Encryptor* enc[] = {&id};
  Matrix m(cfg.code().field(), 2, 2);
  EXPECT_THROW(encode_block(cfg, m, enc, Seed{}), InvalidArgument);
}

TEST(PipelineTest, RoundTripToyAllShapes) {
  Rng rng(10);
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  for (std::size_t l : {2, 3, 5, 10})
    for (std::size_t c = 1; c <= l; ++c) {
      auto cfg = HunccConfig::standard(l, c, static_cast<unsigned>(l), preset("toy16").spec());
      for (int i = 0; i < 10; ++i) {
        auto msg = random_bytes(rng.uniform(200), rng);
        auto t = encode(cfg, msg, enc, Seed::from_u64(i));
        ASSERT_EQ(decode(cfg, t, dec), msg) << "l=" << l << " c=" << c;
      }
    }
}

TEST(PipelineTest, RoundTripClassic) {
  Rng rng(11);
  const Encryptor* enc[] = {&classic_keys().pub};
  const Decryptor* dec[] = {&classic_keys().priv};
  for (auto [l, c] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 3}, {5, 2}}) {
    auto cfg = HunccConfig::standard(l, c, static_cast<unsigned>(l), preset("classic1024").spec());
    auto msg = random_bytes(3000, rng);
    ASSERT_EQ(decode(cfg, encode(cfg, msg, enc, Seed::from_u64(l)), dec), msg);
  }
}

TEST(PipelineTest, EmptyMessage) {
  auto cfg = HunccConfig::standard(2, 1, 2, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  auto t = encode(cfg, Bytes{}, enc, Seed{});
  EXPECT_TRUE(decode(cfg, t, dec).empty());
}

TEST(PipelineTest, PayloadAccountingPerBlockBatch) {
  Rng rng(12);
  const Encryptor* enc[] = {&toy_keys().pub};
  for (std::size_t l : {2, 3, 5}) {
    for (std::size_t c = 1; c <= l; ++c) {
      auto cfg = HunccConfig::standard(l, c, static_cast<unsigned>(l), preset("toy16").spec());
      auto t = encode(cfg, random_bytes(77, rng), enc, Seed{});
      const std::size_t batches = std::size_t{t.block_count} * cfg.symbol_bits() / 8;
      EXPECT_EQ(t.payload_bits(), batches * (c * 16 + (l - c) * 8));
      std::size_t encrypted = 0;
      for (const auto& p : t.payloads) {
        encrypted += p.encrypted;
        EXPECT_EQ(p.bit_length, batches * (p.encrypted ? 16u : 8u));
      }
      EXPECT_EQ(encrypted, c);
    }
  }
}

TEST(PipelineTest, EncryptedPathAssignmentDoesNotChangeOutput) {
  Rng rng(13);
  auto msg = random_bytes(500, rng);
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  auto cfg = HunccConfig::standard(5, 2, 5, preset("toy16").spec());
  for (auto paths : std::vector<std::vector<std::size_t>>{{0, 1}, {4, 2}, {1, 3}}) {
    cfg.assign_encrypted(paths);
    auto t = encode(cfg, msg, enc, Seed{});
    for (const auto& p : t.payloads)
      EXPECT_EQ(p.encrypted, std::ranges::find(paths, p.path) != paths.end());
    EXPECT_EQ(decode(cfg, t, dec), msg);
  }
}

TEST(PipelineTest, PerPathKeys) {
  auto k2 = mceliece_keygen(preset("toy16"), 2);
  auto k3 = mceliece_keygen(preset("toy16"), 3);
  auto cfg = HunccConfig::standard(3, 2, 3, preset("toy16").spec());
  cfg.key_mode(KeyMode::kPerPath);
  const Encryptor* enc[] = {&k2.pub, &k3.pub};
  const Decryptor* dec[] = {&k2.priv, &k3.priv};
  const Decryptor* swapped[] = {&k3.priv, &k2.priv};
  Rng rng(14);
  auto msg = random_bytes(300, rng);
  auto t = encode(cfg, msg, enc, Seed{});
  EXPECT_EQ(decode(cfg, t, dec), msg);
  const Encryptor* one[] = {&k2.pub};
  EXPECT_THROW(encode(cfg, msg, one, Seed{}), InvalidArgument);
  try {
    EXPECT_NE(decode(cfg, t, swapped), msg);
  } catch (const Error&) {
  }
}

TEST(PipelineTest, DeterministicGivenSeed) {
  auto cfg = HunccConfig::standard(3, 1, 3, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  Bytes msg{1, 2, 3, 4, 5};
  EXPECT_EQ(serialize(encode(cfg, msg, enc, Seed::from_u64(5))), serialize(encode(cfg, msg, enc, Seed::from_u64(5))));
  EXPECT_NE(serialize(encode(cfg, msg, enc, Seed::from_u64(5))), serialize(encode(cfg, msg, enc, Seed::from_u64(6))));
}

TEST(PipelineTest, ConfigMismatchAndTampering) {
  auto cfg = HunccConfig::standard(2, 1, 2, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  Rng rng(15);
  auto msg = random_bytes(64, rng);
  auto t = encode(cfg, msg, enc, Seed{});
  auto other = HunccConfig::standard(2, 1, 2, preset("toy16").spec(), 99);
  EXPECT_THROW(decode(other, t, dec), FormatError);

  auto wrong_len = t;
  wrong_len.payloads[1].bytes.pop_back();
  EXPECT_THROW(decode(cfg, wrong_len, dec), FormatError);

  auto flag = t;
  flag.payloads[1].encrypted = true;
  EXPECT_THROW(decode(cfg, flag, dec), FormatError);

  auto header = t;
  header.message_bytes = 1u << 30;
  EXPECT_THROW(decode(cfg, header, dec), FormatError);
}

// Flipping t + 1 = 3 bits inside one ciphertext block: the decoder either
// reports failure or returns a different block. It never returns the original
// message bytes while claiming success on a corrupted block.
TEST(PipelineTest, TamperedEncryptedPayloadIsDetectedOrDiffers) {
  auto cfg = HunccConfig::standard(2, 1, 2, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  Rng rng(16);
  std::size_t detected = 0, trials = 0;
  for (int i = 0; i < 200; ++i) {
    auto msg = random_bytes(8, rng);
    auto t = encode(cfg, msg, enc, Seed::from_u64(i));
    auto bits = t.payloads[0].bits();
    const std::size_t block = rng.uniform(bits.size() / 16);
    std::vector<std::size_t> pos(16);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (std::size_t k = 0; k < 3; ++k) std::swap(pos[k], pos[k + rng.uniform(16 - k)]);
    for (std::size_t k = 0; k < 3; ++k) bits.flip(block * 16 + pos[k]);
    t.payloads[0].bytes = bits.to_bytes();
    ++trials;
    try {
      decode(cfg, t, dec);
    } catch (const DecodingFailure&) {
      ++detected;
    } catch (const FormatError&) {
      ++detected;
    }
  }
  EXPECT_GT(detected, 0u);
  EXPECT_LE(detected, trials);
}

TEST(TransmissionTest, SerializationRoundTrip) {
  auto cfg = HunccConfig::standard(3, 2, 3, preset("toy16").spec());
  const Encryptor* enc[] = {&toy_keys().pub};
  Rng rng(17);
  auto t = encode(cfg, random_bytes(123, rng), enc, Seed{});
  auto bytes = serialize(t);
  EXPECT_EQ(parse_transmission(cfg, bytes), t);
  auto raw = parse_transmission(bytes);
  EXPECT_EQ(raw.payloads.size(), 3u);
  bytes.resize(bytes.size() - 1);
  EXPECT_THROW(parse_transmission(bytes), FormatError);
}

TEST(SinglePathTest, FramingRoundTripAndSize) {
  Rng rng(18);
  const Encryptor* enc[] = {&toy_keys().pub};
  const Decryptor* dec[] = {&toy_keys().priv};
  for (std::size_t l : {2, 3, 5}) {
    auto cfg = HunccConfig::standard(l, 1, static_cast<unsigned>(l), preset("toy16").spec());
    auto msg = random_bytes(100 + rng.uniform(100), rng);
    auto t = encode(cfg, msg, enc, Seed{});
    auto blob = frame_single_path(t);
    auto back = split_single_path(cfg, blob);
    EXPECT_EQ(back, t);
    EXPECT_EQ(decode(cfg, back, dec), msg);
    std::size_t payload_bytes = 0;
    for (const auto& p : t.payloads) payload_bytes += p.bytes.size();
    EXPECT_EQ(blob.size(), kSinglePathHeaderBytes + 4 * l + payload_bytes);
    // Bits on the wire excluding framing are exactly the multipath payload bits.
    const std::size_t batches = std::size_t{t.block_count} * cfg.symbol_bits() / 8;
    EXPECT_EQ(t.payload_bits(), batches * (16 + (l - 1) * 8));
    blob.push_back(0);
    EXPECT_THROW(split_single_path(cfg, blob), FormatError);
  }
}

}  // namespace
}  // namespace huncc::pipeline
