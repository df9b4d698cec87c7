#include <algorithm>

#include "kml/errors.hpp"
#include "kml/random.hpp"
#include "kml/submodule.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

namespace {

void expectSmithInvariants(const Matrix& a) {
  const SmithDecomposition s = smithNormalForm(a);
  ASSERT_EQ(s.u * a * s.v, s.d) << a.toString();
  EXPECT_TRUE(isUnimodular(s.u));
  EXPECT_TRUE(isUnimodular(s.v));
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) EXPECT_EQ(s.d(i, j), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GT(diag[i], 0);
    if (i + 1 < diag.size()) EXPECT_TRUE(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
  }
}

}  // namespace

TEST(Smith, IdentityIsFixed) {
  const SmithDecomposition s = smithNormalForm(Matrix::identity(Z, 2));
  EXPECT_EQ(s.d, Matrix::identity(Z, 2));
  EXPECT_EQ(s.u, Matrix::identity(Z, 2));
  EXPECT_EQ(s.v, Matrix::identity(Z, 2));
}

TEST(Smith, TwoByTwoExamples) {
  EXPECT_EQ(smithNormalForm(mat({{2, 4}, {6, 8}})).diagonal(), (std::vector<mpz_class>{2, 4}));
  EXPECT_EQ(smithNormalForm(mat({{6, 0}, {0, 4}})).diagonal(), (std::vector<mpz_class>{2, 12}));
  expectSmithInvariants(mat({{2, 4}, {6, 8}}));
}

TEST(Smith, RejectsFieldInput) { EXPECT_THROW(smithNormalForm(mat({{1}}, Q)), RingMismatch); }

TEST(Smith, LargeEntriesFallBackToBigIntegers) {
  // 3^40 does not fit in 64 bits; the Int64 path must hand over cleanly.
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 40);
  Matrix a(Z, 2, 2);
  a.set(0, 0, big);
  a.set(0, 1, big + 1);
  a.set(1, 0, 2 * big);
  a.set(1, 1, 5);
  expectSmithInvariants(a);
  EXPECT_EQ(smithDiagonal(a), smithNormalForm(a).diagonal());
}

TEST(Smith, RandomDecompositionsSatisfyUAVEqualsD) {
  InstanceGenerator gen(2024);
  for (int i = 0; i < 300; ++i) {
    const auto r = static_cast<std::size_t>(gen.uniform(1, 5));
    const auto c = static_cast<std::size_t>(gen.uniform(1, 5));
    const Matrix a = gen.matrix(Z, r, c, 9);
    expectSmithInvariants(a);
    EXPECT_EQ(smithDiagonal(a), smithNormalForm(a).diagonal());
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernelBasis(Matrix(Z, 2, 2)).rank(), 2u);
  const Submodule k = kernelBasis(mat({{2, 3}}));
  EXPECT_EQ(k, imageOf(mat({{3}, {-2}})));
  EXPECT_EQ(kernelBasis(mat({{2, 0}, {0, 3}})).rank(), 0u);
}

TEST(Kernel, RankNullityOverFields) {
  InstanceGenerator gen(5);
  for (const Ring& ring : {Q, Ring::primeField(5)}) {
    for (int i = 0; i < 50; ++i) {
      const Matrix a = gen.matrix(ring, static_cast<std::size_t>(gen.uniform(1, 4)),
                                  static_cast<std::size_t>(gen.uniform(1, 4)), 2);
      EXPECT_EQ(rank(a) + kernelBasis(a).rank(), a.cols());
      EXPECT_TRUE((a * kernelBasis(a).generators()).isZero());
    }
  }
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel(mat({{2, 0}, {0, 3}})), pres(0, {6}));
  EXPECT_TRUE(cokernel(Matrix::identity(Z, 3)).isZero());
  EXPECT_EQ(cokernel(mat({{2}})), pres(0, {2}));
  EXPECT_EQ(cokernel(mat({{2}})).toString(), "Z/2");
}

TEST(Cokernel, InvariantUnderPermutations) {
  InstanceGenerator gen(8);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = gen.matrix(Z, 3, 3, 6);
    Matrix swapped(Z, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) swapped.set(2 - r, (c + 1) % 3, a(r, c));
    EXPECT_EQ(cokernel(a), cokernel(swapped));
  }
}

TEST(Homology, Examples) {
  EXPECT_EQ(homologyAt(Matrix(Z, 0, 1), mat({{2}})), pres(0, {2}));
  EXPECT_TRUE(homologyAt(mat({{1}}), Matrix(Z, 1, 0)).isZero());
  // Koszul complex of (2, 2): Z -> Z^2 -> Z.
  EXPECT_EQ(homologyAt(mat({{2, 2}}), mat({{-2}, {2}})), pres(0, {2}));
}

TEST(Homology, TorsionIsNotSaturated) {
  // Image 2Z^2 inside the kernel Z^2.
  EXPECT_EQ(homologyAt(Matrix(Z, 0, 2), mat({{2, 0}, {0, 2}})), pres(0, {2, 2}));
}

TEST(Homology, Errors) {
  EXPECT_THROW(homologyAt(mat({{1, 0}}), mat({{1}})), DimensionMismatch);
  EXPECT_THROW(homologyAt(mat({{1}}), mat({{1}})), NotAComplex);
}

TEST(Determinant, Values) {
  EXPECT_EQ(determinant(mat({{2, 4}, {6, 8}})), -8);
  EXPECT_EQ(determinant(Matrix::identity(Z, 4)), 1);
  EXPECT_EQ(determinant(mat({{1, 2}, {2, 4}})), 0);
}

TEST(Solve, FindsIntegerSolutionsOnly) {
  const auto x = solve(mat({{2, 0}, {0, 3}}), mat({{4}, {9}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, mat({{2}, {3}}));
  EXPECT_FALSE(solve(mat({{2}}), mat({{1}})).has_value());
  EXPECT_TRUE(solve(mat({{2}}, Q), mat({{1}}, Q)).has_value());
}
