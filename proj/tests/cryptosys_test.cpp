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

#include "huncc/cryptosys.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

namespace huncc::crypto {
namespace {

BitVector random_bits(std::size_t n, Rng& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng.bit());
  return v;
}

// Independent syndrome: sum over set positions of the inverse of (x - alpha)
// modulo g, using the generic polynomial routines.
Poly reference_syndrome(const GoppaCode& code, const BitVector& r) {
  const auto& f = code.field();
  Poly s(f);
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r.get(j)) s = s + gf::poly_inverse_mod(Poly(f, {code.support()[j], 1}), code.goppa_polynomial());
  return gf::poly_mod(s, code.goppa_polynomial());
}

TEST(ParamsTest, PresetTable) {
  auto toy = preset("toy16");
  EXPECT_EQ(toy.d, 4u);
  EXPECT_EQ(toy.n, 16u);
  EXPECT_EQ(toy.k, 8u);
  EXPECT_EQ(toy.t, 2u);
  EXPECT_EQ(preset("classic1024").k, 524u);
  EXPECT_EQ(preset("classic1024").spec().security_bits, 58u);
  auto pq = preset("pq2960");
  EXPECT_EQ(pq.spec().security_bits, 128u);
  EXPECT_NEAR(pq.spec().rate(), 2288.0 / 2960.0, 1e-12);
  EXPECT_EQ(preset("pq6624").k, 5129u);
  EXPECT_THROW(preset("nope"), InvalidArgument);
}

TEST(ParamsTest, Validation) {
  EXPECT_THROW(make_params("x", 4, 16, 4, 0), InvalidArgument);   // k = 0
  EXPECT_THROW(make_params("x", 4, 17, 1, 0), InvalidArgument);   // n > 2^d
  EXPECT_THROW(make_params("x", 4, 16, 0, 0), InvalidArgument);   // t = 0
  EXPECT_THROW(make_params("x", 4, 16, 2, 9), InvalidArgument);   // b > k
  EXPECT_EQ(make_params("x", 12, 2960, 56, 128).k, 2288u);
}

TEST(ParamsTest, PresetFileFromEnvironment) {
  auto path = std::filesystem::temp_directory_path() / "huncc_presets_test.txt";
  {
    std::ofstream out(path);
    out << "# extra presets\nsmall6.d = 6\nsmall6.n = 40\nsmall6.t = 3\nsmall6.b = 5\n";
  }
  ::setenv(kPresetPathEnv, path.c_str(), 1);
  auto p = preset("small6");
  ::unsetenv(kPresetPathEnv);
  EXPECT_EQ(p.k, 22u);
  EXPECT_EQ(p.b, 5u);
  EXPECT_THROW(preset("small6"), InvalidArgument);
  std::filesystem::remove(path);
  EXPECT_THROW(presets_from(KeyValues::parse("bad.d = 4\nbad.n = 16\nbad.t = 4\n")), InvalidArgument);
}

TEST(IdentityCipherTest, SpecAndRoundTrip) {
  IdentityCipher id(24);
  EXPECT_EQ(id.spec(), (CryptosystemSpec{24, 24, 0, Scheme::kIdentity}));
  Rng rng(1);
  auto m = random_bits(24, rng);
  EXPECT_EQ(id.decrypt(id.encrypt(m, rng)), m);
  EXPECT_THROW(id.encrypt(BitVector(23), rng), InvalidArgument);
}

TEST(GoppaTest, CodewordsHaveZeroSyndromeExhaustiveDegreeOne) {
  auto f = gf::Field::binary(4);
  Rng rng(8);
  for (int trial = 0; trial < 3; ++trial) {
    const Value root = static_cast<Value>(rng.uniform(16));
    Poly g(f, {root, 1});
    std::vector<Value> support;
    for (Value a = 0; a < 16; ++a)
      if (a != root) support.push_back(a);
    GoppaCode code(g, support);
    ASSERT_EQ(code.dimension(), 11u);
    const auto& gen = code.generator();
    for (std::uint32_t m = 0; m < (1u << 11); ++m) {
      BitVector v(11);
      for (int i = 0; i < 11; ++i) v.set(i, (m >> i) & 1);
      auto cw = gen.left_mul(v);
      ASSERT_TRUE(reference_syndrome(code, cw).is_zero());
      ASSERT_TRUE(code.syndrome(cw).is_zero());
      ASSERT_FALSE(code.parity_check().right_mul(cw).any());
    }
  }
}

TEST(GoppaTest, SyndromeMatchesReference) {
  auto kp = mceliece_keygen(preset("toy16"), 3);
  const auto& code = kp.priv.code();
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto r = random_bits(16, rng);
    EXPECT_EQ(code.syndrome(r), reference_syndrome(code, r));
  }
}

TEST(GoppaTest, SupportMustAvoidRoots) {
  auto f = gf::Field::binary(4);
  std::vector<Value> support(16);
  std::iota(support.begin(), support.end(), 0u);
  EXPECT_THROW(GoppaCode(Poly(f, {3, 1}), support), InvalidArgument);
}

TEST(GoppaTest, CorrectsUpToTErrorsShortenedCode) {
  auto p = make_params("mid", 7, 100, 5, 0);
  auto kp = mceliece_keygen(p, 21);
  const auto& code = kp.priv.code();
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    auto cw = code.generator().left_mul(random_bits(code.dimension(), rng));
    BitVector e(code.length());
    const std::size_t wt = rng.uniform(code.t() + 1);
    while (e.weight() < wt) e.set(rng.uniform(code.length()));
    ASSERT_EQ(code.decode(cw ^ e), cw);
  }
}

TEST(McElieceTest, KeyShapesAndInvariants) {
  auto kp = mceliece_keygen(preset("toy16"), 0);
  EXPECT_EQ(kp.pub.matrix().rows(), 8u);
  EXPECT_EQ(kp.pub.matrix().cols(), 16u);
  const auto& code = kp.priv.code();
  EXPECT_TRUE(gf::poly_is_irreducible(code.goppa_polynomial()));
  for (auto a : code.support()) EXPECT_NE(code.goppa_polynomial().eval(a), 0u);
  EXPECT_EQ(kp.priv.scrambler().rank(), 8u);
  // G_pub = S G P, with P applied as a column permutation.
  BitMatrix sg = kp.priv.scrambler() * code.generator();
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(kp.pub.matrix().get(r, j), sg.get(r, kp.priv.permutation()[j]));
}

TEST(McElieceTest, PublicMatrixIdentityAtDegreeSix) {
  auto kp = mceliece_keygen(make_params("d6", 6, 64, 4, 0), 5);
  BitMatrix sg = kp.priv.scrambler() * kp.priv.code().generator();
  BitMatrix p(64, 64);
  for (std::size_t j = 0; j < 64; ++j) p.set(kp.priv.permutation()[j], j);
  EXPECT_EQ(kp.pub.matrix(), sg * p);
}

TEST(McElieceTest, KeygenIsDeterministic) {
  auto a = mceliece_keygen(preset("toy16"), 9), b = mceliece_keygen(preset("toy16"), 9);
  EXPECT_EQ(serialize(a.pub), serialize(b.pub));
  EXPECT_EQ(serialize(a.priv), serialize(b.priv));
  EXPECT_NE(serialize(a.pub), serialize(mceliece_keygen(preset("toy16"), 10).pub));
}

TEST(McElieceTest, ZeroErrorAndUnitError) {
  auto kp = mceliece_keygen(preset("toy16"), 1);
  Rng rng(2);
  auto m = random_bits(8, rng);
  auto c = kp.pub.encrypt_with_error(m, BitVector(16));
  EXPECT_EQ(c, kp.pub.matrix().left_mul(m));
  EXPECT_EQ(kp.priv.decrypt(c), m);
  BitVector e1(16);
  e1.set(0);
  EXPECT_EQ(kp.pub.encrypt_with_error(BitVector(8), e1), e1);
  EXPECT_EQ(kp.priv.decrypt(e1), BitVector(8));
}

TEST(McElieceTest, ErrorWeightIsExactlyT) {
  auto kp = mceliece_keygen(preset("toy16"), 1);
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto m = random_bits(8, rng);
    auto c = kp.pub.encrypt(m, rng);
    ASSERT_EQ((c ^ kp.pub.matrix().left_mul(m)).weight(), 2u);
  }
}

TEST(McElieceTest, RoundTripToy) {
  auto kp = mceliece_keygen(preset("toy16"), 4);
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    auto m = random_bits(8, rng);
    ASSERT_EQ(kp.priv.decrypt(kp.pub.encrypt(m, rng)), m);
  }
}

TEST(McElieceTest, RoundTripClassic) {
  auto kp = mceliece_keygen(preset("classic1024"), 6);
  EXPECT_EQ(kp.pub.matrix().rows(), 524u);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto m = random_bits(524, rng);
    ASSERT_EQ(kp.priv.decrypt(kp.pub.encrypt(m, rng)), m);
  }
}

TEST(McElieceTest, AllPatternsUpToTDecodeAtToy) {
  auto kp = mceliece_keygen(preset("toy16"), 11);
  Rng rng(12);
  auto m = random_bits(8, rng);
  for (std::size_t a = 0; a <= 16; ++a)
    for (std::size_t b = a; b <= 16; ++b) {
      BitVector z(16);
      if (a < 16) z.set(a);
      if (b < 16 && b != a) z.set(b);
      ASSERT_EQ(kp.priv.decrypt(kp.pub.encrypt_with_error(m, z)), m);
    }
}

// With t + 1 errors a bounded-distance decoder either reports failure or lands
// on a different codeword. Silent miscorrections happen exactly when the
// received word lies within distance t of another codeword, so their count is
// (number of weight-(2t+1) codewords) * C(2t+1, t+1).
TEST(McElieceTest, TPlusOneErrorsEitherRejectedOrMiscorrectedPredictably) {
  auto kp = mceliece_keygen(preset("toy16"), 13);
  std::size_t weight5 = 0;
  for (std::uint32_t m = 1; m < 256; ++m) {
    BitVector v(8);
    for (int i = 0; i < 8; ++i) v.set(i, (m >> i) & 1);
    if (kp.pub.matrix().left_mul(v).weight() == 5) ++weight5;
  }
  std::size_t rejected = 0, silent = 0;
  BitVector m(8);
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      for (int c = b + 1; c < 16; ++c) {
        BitVector z(16);
        z.set(a);
        z.set(b);
        z.set(c);
        try {
          EXPECT_NE(kp.priv.decrypt(kp.pub.encrypt_with_error(m, z)), m);
          ++silent;
        } catch (const DecodingFailure&) {
          ++rejected;
        }
      }
  EXPECT_EQ(rejected + silent, 560u);
  EXPECT_EQ(silent, weight5 * 10);
}

TEST(McElieceTest, LengthMismatch) {
  auto kp = mceliece_keygen(preset("toy16"), 1);
  Rng rng(1);
  EXPECT_THROW(kp.pub.encrypt(BitVector(7), rng), InvalidArgument);
  EXPECT_THROW(kp.priv.decrypt(BitVector(15)), InvalidArgument);
}

TEST(KeyFileTest, RoundTrip) {
  auto kp = mceliece_keygen(preset("toy16"), 2);
  auto pub = parse_public_key(serialize(kp.pub));
  auto priv = parse_private_key(serialize(kp.priv));
  EXPECT_TRUE(pub == kp.pub);
  EXPECT_EQ(serialize(priv), serialize(kp.priv));
  Rng rng(3);
  auto m = random_bits(8, rng);
  EXPECT_EQ(priv.decrypt(pub.encrypt(m, rng)), m);
}

TEST(KeyFileTest, RejectsWrongHalfAndCorruption) {
  auto kp = mceliece_keygen(preset("toy16"), 2);
  EXPECT_THROW(parse_private_key(serialize(kp.pub)), FormatError);
  EXPECT_THROW(parse_public_key(serialize(kp.priv)), FormatError);
  auto bytes = serialize(kp.pub);
  bytes[0] = 'X';
  EXPECT_THROW(parse_public_key(bytes), FormatError);
  auto truncated = serialize(kp.priv);
  truncated.resize(truncated.size() - 3);
  EXPECT_THROW(parse_private_key(truncated), FormatError);
}

}  // namespace
}  // namespace huncc::crypto
