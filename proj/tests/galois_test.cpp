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

#include "huncc/galois.hpp"

#include <gtest/gtest.h>

#include <optional>

#include "huncc/rng.hpp"
#include "oracles.hpp"

namespace huncc::gf {
namespace {

TEST(FieldTest, ExplicitIrreducibleModulus) {
  auto f = Field::make(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
  EXPECT_EQ(f->order(), 8u);
  EXPECT_EQ(f->symbol_bits(), 3u);
}

TEST(FieldTest, RejectsReducibleModulus) {
  // x^3 + 1 = (x + 1)(x^2 + x + 1)
  EXPECT_THROW(Field::make(2, 3, {1, 0, 0, 1}), InvalidArgument);
}

TEST(FieldTest, RejectsCompositeCharacteristic) {
  EXPECT_THROW(Field::make(6, 1), InvalidArgument);
  EXPECT_THROW(Field::make(1, 1), InvalidArgument);
  EXPECT_THROW(Field::make(2, 0), InvalidArgument);
}

TEST(FieldTest, PrimeFieldAutoModulusIsX) {
  auto f = Field::make(7, 1);
  EXPECT_EQ(f->order(), 7u);
  EXPECT_EQ(f->modulus(), (std::vector<Value>{0, 1}));
}

TEST(FieldTest, AutoModulusIsSmallestIrreducible) {
  for (unsigned m = 2; m <= 12; ++m) {
    std::uint64_t expected = 0;
    for (std::uint64_t low = 0; low < (1u << m); ++low)
      if (testing::gf2_irreducible_trial_division((std::uint64_t{1} << m) | low)) {
        expected = (std::uint64_t{1} << m) | low;
        break;
      }
    auto f = Field::binary(m);
    std::uint64_t got = 0;
    for (std::size_t i = 0; i < f->modulus().size(); ++i) got |= std::uint64_t{f->modulus()[i]} << i;
    EXPECT_EQ(got, expected) << "m=" << m;
  }
  std::uint64_t aes = 0;
  auto f8 = Field::binary(8);
  for (std::size_t i = 0; i < f8->modulus().size(); ++i) aes |= std::uint64_t{f8->modulus()[i]} << i;
  EXPECT_EQ(aes, 0x11Bu);
}

TEST(FieldTest, Gf8ProductMatchesPolynomialReduction) {
  auto f = Field::make(2, 3, {1, 1, 0, 1});
  // x * x^2 = x^3 = x + 1 mod x^3 + x + 1
  EXPECT_EQ(f->mul(0b010, 0b100), 0b011u);
  for (Value a = 0; a < 8; ++a)
    for (Value b = 0; b < 8; ++b) EXPECT_EQ(f->mul(a, b), testing::gf2_mulmod(a, b, 0b1011));
}

TEST(FieldTest, MultiplicativeIdentity) {
  for (auto f : {Field::make(7, 1), Field::binary(8), Field::make(3, 4), Field::binary(20)}) {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      const Value a = static_cast<Value>(rng.uniform(f->order()));
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->add(a, 0), a);
    }
  }
}

TEST(FieldTest, PrimeFieldInverseMatchesBruteForce) {
  auto f = Field::make(7, 1);
  EXPECT_EQ(f->inv(3), 5u);
  for (Value a = 1; a < 7; ++a) EXPECT_EQ(f->inv(a), testing::zp_inv_bruteforce(a, 7));
}

TEST(FieldTest, InverseOfZeroThrows) {
  EXPECT_THROW(Field::make(7, 1)->inv(0), InvalidArgument);
  EXPECT_THROW(Field::binary(20)->inv(0), InvalidArgument);
}

TEST(FieldTest, ExhaustiveInverseSmallFields) {
  for (auto f : {Field::binary(1), Field::binary(4), Field::binary(10), Field::make(3, 5), Field::make(5, 4),
                 Field::make(7, 3), Field::make(31, 2)}) {
    for (Value a = 1; a < f->order(); ++a) ASSERT_EQ(f->mul(f->inv(a), a), 1u) << f->name() << " a=" << a;
  }
}

TEST(FieldTest, AxiomsOnRandomTriples) {
  // GF(2^20) and GF(3^13) exercise the table-free multiplication path.
  for (auto f : {Field::binary(8), Field::binary(20), Field::make(3, 4), Field::make(3, 13), Field::make(11, 3)}) {
    Rng rng(42);
    for (int i = 0; i < 2000; ++i) {
      const Value a = static_cast<Value>(rng.uniform(f->order()));
      const Value b = static_cast<Value>(rng.uniform(f->order()));
      const Value c = static_cast<Value>(rng.uniform(f->order()));
      ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
      ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
      ASSERT_EQ(f->add(a, b), f->add(b, a));
      ASSERT_EQ(f->mul(a, b), f->mul(b, a));
      ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
      ASSERT_EQ(f->sub(f->add(a, b), b), a);
      if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
    }
  }
}

TEST(FieldTest, PowMatchesRepeatedMultiplication) {
  auto f = Field::make(5, 3);
  for (Value a = 0; a < f->order(); a += 7) {
    Value acc = 1;
    for (std::uint64_t e = 0; e < 20; ++e) {
      EXPECT_EQ(f->pow(a, e), acc);
      acc = f->mul(acc, a);
    }
  }
}

TEST(FieldTest, SerializationRoundTrip) {
  for (auto f : {Field::make(7, 1), Field::binary(10), Field::make(3, 5)}) {
    ByteWriter w;
    write_field(w, *f);
    ByteReader r(w.bytes());
    auto g = read_field(r);
    EXPECT_TRUE(*f == *g);
    EXPECT_TRUE(r.done());
  }
}

TEST(ElementTest, OperatorsAndFieldMismatch) {
  auto f = Field::make(7, 1);
  Element a(f, 3), b(f, 5);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a - b).value(), 5u);
  EXPECT_EQ(a.inverse().value(), 5u);
  EXPECT_EQ((a / b).value(), f->mul(3, 3));
  EXPECT_EQ((-a).value(), 4u);
  Element one(f, 1);
  EXPECT_EQ(a * one, a);

  auto g = Field::make(5, 1);
  EXPECT_THROW(a + Element(g, 1), InvalidArgument);
  EXPECT_THROW(Element(f, 0).inverse(), InvalidArgument);
  EXPECT_THROW(Element(f, 7), InvalidArgument);
}

TEST(PolyTest, EvalConstantTerm) {
  auto f = Field::binary(3);
  Poly p(f, {1, 1, 0, 1});
  EXPECT_EQ(p.eval(0), 1u);
}

TEST(PolyTest, ZeroPolynomialDegreeSentinel) {
  auto f = Field::make(7, 1);
  EXPECT_EQ(Poly(f).degree(), Poly::kZeroDegree);
  EXPECT_EQ(Poly(f, {0, 0, 0}).degree(), Poly::kZeroDegree);
  EXPECT_EQ(Poly(f, {3, 0, 0}).degree(), 0);
}

TEST(PolyTest, GcdIsMonic) {
  auto f = Field::make(7, 1);
  Poly a(f, {6, 0, 1});  // x^2 - 1
  Poly b(f, {6, 1});     // x - 1
  EXPECT_EQ(poly_gcd(a, b), Poly(f, {6, 1}));
  // scaled operands give the same monic gcd
  EXPECT_EQ(poly_gcd(a.scaled(3), b.scaled(5)), Poly(f, {6, 1}));
}

TEST(PolyTest, DivModIdentity) {
  auto f = Field::binary(6);
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Value> ca(1 + rng.uniform(12)), cb(1 + rng.uniform(6));
    for (auto& c : ca) c = static_cast<Value>(rng.uniform(64));
    for (auto& c : cb) c = static_cast<Value>(rng.uniform(64));
    Poly a(f, ca), b(f, cb);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(PolyTest, InverseMod) {
  auto f = Field::binary(4);
  // A monic quadratic is irreducible iff it has no root; check that, then use
  // the first one found as modulus.
  std::optional<Poly> g;
  for (Value c0 = 0; c0 < 16; ++c0)
    for (Value c1 = 0; c1 < 16; ++c1) {
      Poly q(f, {c0, c1, 1});
      bool rootless = true;
      for (Value a = 0; a < 16; ++a) rootless = rootless && q.eval(a) != 0;
      EXPECT_EQ(poly_is_irreducible(q), rootless) << q.to_string();
      if (rootless && !g) g = q;
    }
  ASSERT_TRUE(g.has_value());
  for (Value a0 = 0; a0 < 16; ++a0)
    for (Value a1 = 0; a1 < 16; ++a1) {
      Poly a(f, {a0, a1});
      if (a.is_zero()) continue;
      EXPECT_EQ(poly_mod(a * poly_inverse_mod(a, *g), *g), Poly::constant(f, 1));
    }
  EXPECT_THROW(poly_inverse_mod(Poly(f, {1, 1}), Poly(f, {1, 0, 1})), InvalidArgument);
}

TEST(PolyTest, IrreducibilityExamples) {
  auto f2 = Field::binary(1);
  EXPECT_FALSE(poly_is_irreducible(Poly(f2, {1, 0, 1})));  // (x + 1)^2
  EXPECT_TRUE(poly_is_irreducible(Poly(f2, {1, 1, 1})));
  EXPECT_FALSE(poly_is_irreducible(Poly(f2, {1})));
}

TEST(PolyTest, IrreducibilityAgreesWithTrialDivisionUpToDegreeSix) {
  auto f2 = Field::binary(1);
  for (std::uint64_t mask = 2; mask < (1u << 7); ++mask) {
    std::vector<Value> c;
    for (int i = 0; i <= testing::gf2_degree(mask); ++i) c.push_back((mask >> i) & 1);
    EXPECT_EQ(poly_is_irreducible(Poly(f2, c)), testing::gf2_irreducible_trial_division(mask)) << mask;
  }
}

TEST(PolyTest, IrreducibleOverExtensionFieldHasNoRoots) {
  auto f = Field::binary(4);
  Rng rng(3);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 20; ++trial) {
    std::vector<Value> c(4);
    for (auto& v : c) v = static_cast<Value>(rng.uniform(16));
    c.push_back(1);
    Poly p(f, c);
    if (!poly_is_irreducible(p)) continue;
    ++found;
    for (Value a = 0; a < 16; ++a) EXPECT_NE(p.eval(a), 0u);
  }
  EXPECT_GT(found, 0);
}

TEST(MatrixTest, InverseOfWorkedExample) {
  auto f = Field::make(7, 1);
  auto g = Matrix::from_rows(f, {{1, 1}, {2, 1}});
  auto inv = mat_inv(g);
  EXPECT_EQ(inv, Matrix::from_rows(f, {{6, 1}, {2, 6}}));
  EXPECT_EQ(g * inv, Matrix::identity(f, 2));
}

TEST(MatrixTest, SingularInverseThrows) {
  auto f = Field::make(7, 1);
  EXPECT_THROW(mat_inv(Matrix::from_rows(f, {{1, 2}, {2, 4}})), SingularMatrix);
  EXPECT_THROW(mat_inv(Matrix(f, 2, 3)), InvalidArgument);
}

TEST(MatrixTest, DimensionMismatch) {
  auto f = Field::make(7, 1);
  EXPECT_THROW(Matrix(f, 2, 3) * Matrix(f, 2, 3), InvalidArgument);
}

TEST(MatrixTest, RankOfIdentityAndRandom) {
  auto f = Field::make(5, 1);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(mat_rank(Matrix::identity(f, n)), n);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng.uniform(6), c = 1 + rng.uniform(6);
    Matrix m(f, r, c);
    std::vector<std::vector<std::int64_t>> ref(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) ref[i][j] = m(i, j) = static_cast<Value>(rng.uniform(2) ? rng.uniform(5) : 0);
    EXPECT_EQ(mat_rank(m), testing::zp_rank(ref, 5));
  }
}

TEST(MatrixTest, RandomInverseOverGf256) {
  auto f = Field::binary(8);
  Rng rng(77);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.uniform(16);
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Value>(rng.uniform(256));
    if (mat_rank(a) < n) continue;
    ++inverted;
    EXPECT_EQ(mat_inv(a) * a, Matrix::identity(f, n));
  }
  EXPECT_GT(inverted, 30);
}

TEST(MatrixTest, SolveIdentitySystem) {
  auto f = Field::binary(8);
  std::vector<Value> b{5, 0, 200, 17};
  auto sol = solve_linear(Matrix::identity(f, 4), b);
  ASSERT_TRUE(sol.x.has_value());
  EXPECT_TRUE(sol.unique);
  EXPECT_EQ(*sol.x, b);
}

TEST(MatrixTest, SolveRandomAndCountOps) {
  auto f = Field::make(13, 1);
  Rng rng(4);
  for (std::size_t n = 1; n <= 10; ++n) {
    Matrix a(f, n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Value>(1 + rng.uniform(12));
    } while (mat_rank(a) < n);
    Matrix x(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = static_cast<Value>(rng.uniform(13));
    auto b = (a * x).column(0);
    auto sol = solve_linear(a, b);
    ASSERT_TRUE(sol.x.has_value());
    EXPECT_EQ(*sol.x, x.column(0));
    EXPECT_EQ(sol.ops, elimination_ops(n));
  }
}

TEST(MatrixTest, SolveInconsistentAndUnderdetermined) {
  auto f = Field::make(7, 1);
  auto a = Matrix::from_rows(f, {{1, 2}, {2, 4}});
  std::vector<Value> bad{1, 3};
  EXPECT_FALSE(solve_linear(a, bad).x.has_value());
  std::vector<Value> good{1, 2};
  auto sol = solve_linear(a, good);
  ASSERT_TRUE(sol.x.has_value());
  EXPECT_FALSE(sol.unique);
  auto check = a * [&] {
    Matrix m(f, 2, 1);
    m.set_column(0, *sol.x);
    return m;
  }();
  EXPECT_EQ(check.column(0), good);
  std::vector<Value> wrong_len{1};
  EXPECT_THROW(solve_linear(a, wrong_len), InvalidArgument);
}

}  // namespace
}  // namespace huncc::gf
