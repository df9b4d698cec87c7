#include "kml/errors.hpp"
#include "kml/graded.hpp"
#include "kml/random.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

namespace {

/// One variable, Z^{ranks[d]} in degree d, t the identity between equal
/// nonzero ranks and zero otherwise.
GradedModule strip(const std::vector<std::size_t>& ranks, std::size_t truncation) {
  GradedModule x(Z, 1, truncation);
  for (std::size_t d = 0; d < ranks.size(); ++d) x.setComponent(d, Module::free(Z, ranks[d]));
  for (std::size_t d = 0; d < truncation; ++d) {
    const std::size_t a = x.component(d).generatorCount();
    const std::size_t b = x.component(d + 1).generatorCount();
    x.setMap(0, d, a == b ? Matrix::identity(Z, a) : Matrix(Z, b, a));
  }
  x.validate();
  return x;
}

std::vector<std::size_t> ranks(const GradedModule& x) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= x.truncation(); ++d) out.push_back(x.rankAt(d));
  return out;
}

}  // namespace

TEST(Construct, RejectsNonCommutingMaps) {
  GradedModule x(Z, 2, 2);
  for (std::size_t d = 0; d <= 2; ++d) x.setComponent(d, Module::free(Z, 2));
  for (std::size_t d = 0; d < 2; ++d) {
    x.setMap(0, d, mat({{0, 1}, {0, 0}}));
    x.setMap(1, d, mat({{0, 0}, {1, 0}}));
  }
  EXPECT_THROW(x.validate(), InvalidGradedModule);
}

TEST(Free, Dimensions) {
  EXPECT_EQ(ranks(freeGraded(Module::free(Z, 2), 2, 1, 3)), (std::vector<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(ranks(freeGraded(Module::free(Z, 3), 0, 2, 4)), (std::vector<std::size_t>{0, 0, 3, 0, 0}));
  const GradedModule line = freeGraded(Module::free(Z, 1), 1, 0, 5);
  for (std::size_t d = 0; d < 5; ++d) EXPECT_EQ(line.map(0, d), Matrix::identity(Z, 1));
}

TEST(Free, MonomialsAreLexOrdered) {
  EXPECT_EQ(monomials(2, 2), (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(Twist, Examples) {
  const GradedModule x = freeGraded(Module::free(Z, 1), 1, 0, 6);
  EXPECT_EQ(twist(x, 0), x);
  EXPECT_EQ(ranks(twist(x, -1)), (std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1}));
  const GradedModule back = twist(twist(x, -1), 1);
  for (std::size_t d = 0; d <= back.truncation(); ++d) EXPECT_EQ(back.rankAt(d), x.rankAt(d));
}

TEST(Filtration, DegreeOfGeneration) {
  EXPECT_EQ(degreeOfGeneration(freeGraded(Module::free(Z, 2), 2, 3, 8)), 3u);
  const GradedModule extra = directSum(freeGraded(Module::free(Z, 1), 1, 0, 8), strip({0, 0, 0, 0, 0, 1}, 8));
  EXPECT_EQ(degreeOfGeneration(extra), 5u);
  EXPECT_EQ(degreeOfGeneration(GradedModule(Z, 1, 4)), 0u);
  EXPECT_FALSE(degreeOfGeneration(strip({0, 0, 0, 0, 1}, 4)).has_value());
}

TEST(Filtration, CanonicalIsIncreasing) {
  const GradedModule x = directSum(freeGraded(Module::free(Z, 1), 1, 1, 6), strip({0, 0, 1, 1}, 6));
  for (long m = 0; m < 6; ++m)
    for (std::size_t d = 0; d <= 6; ++d)
      EXPECT_TRUE(canonicalFiltration(x, m + 1).degrees[d].contains(canonicalFiltration(x, m).degrees[d]));
}

TEST(Nil, Examples) {
  const NilStatus a = isNil(strip({1, 1, 1}, 8));
  EXPECT_TRUE(a.nil);
  EXPECT_EQ(a.bound, 3u);
  EXPECT_FALSE(isNil(freeGraded(Module::free(Z, 1), 1, 0, 8)).nil);
  const NilStatus z = isNil(GradedModule(Z, 2, 3));
  EXPECT_TRUE(z.nil);
  EXPECT_EQ(z.bound, 0u);
}

TEST(QuotientByVars, Examples) {
  const GradedModule x = freeGraded(Module::free(Z, 1), 1, 0, 6);
  const GradedModule q = quotientByVars(x, {0});
  EXPECT_EQ(ranks(q), (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(ranks(quotientByVars(x, {})), ranks(x));
  EXPECT_EQ(ranks(quotientByVars(q, {0})), ranks(q));
}

TEST(Koszul, FreeModulesAreZeroSpherical) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 0; k <= 2; ++k) {
      const GradedModule x = freeGraded(Module::free(Z, 2), n, k, 8);
      const KoszulHomology h = koszulHomology(x);
      for (std::size_t i = 1; i <= n; ++i) EXPECT_TRUE(h.vanishes(i));
      for (std::size_t d = 0; d <= h.window; ++d) EXPECT_EQ(h.t[0][d], d == k ? pres(2) : pres(0));
      EXPECT_TRUE(isTRegular(x));
    }
}

TEST(Koszul, TwoStepStrip) {
  const KoszulHomology h = koszulHomology(strip({1, 1}, 6));
  for (std::size_t d = 0; d <= h.window; ++d) {
    EXPECT_EQ(h.rank(0, d), d == 0 ? 1u : 0u);
    EXPECT_EQ(h.rank(1, d), d == 2 ? 1u : 0u);
  }
}

TEST(Koszul, ZeroModuleAndWindow) {
  const KoszulHomology h = koszulHomology(GradedModule(Z, 2, 4));
  for (std::size_t i = 0; i <= 2; ++i) EXPECT_TRUE(h.vanishes(i));
  EXPECT_THROW(koszulHomology(GradedModule(Z, 3, 2)), WindowTooSmall);
}

TEST(Koszul, TorsionIsVisible) {
  // Z --2--> Z: T_0 = Z/2 in degree 1.
  GradedModule x(Z, 1, 4);
  for (std::size_t d = 0; d <= 4; ++d) x.setComponent(d, Module::free(Z, 1));
  for (std::size_t d = 0; d < 4; ++d) x.setMap(0, d, mat({{d == 0 ? 2 : 1}}));
  x.validate();
  const KoszulHomology h = koszulHomology(x);
  EXPECT_EQ(h.t[0][0], pres(1));
  EXPECT_EQ(h.t[0][1], pres(0, {2}));
}

TEST(Koszul, FreeKoszulCubeIsAdmissible) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const GradedModule x = freeGraded(Module::free(Z, 1), n, 1, 6);
    for (std::size_t d = 0; d <= 6; ++d) EXPECT_TRUE(isAdmissible(koszulSlice(x, d))) << n << " " << d;
  }
}

TEST(Functors, AExample) {
  const GradedModule a = functorA({Module::free(Z, 1), Module::zero(Z), Module::free(Z, 1)}, 1, 8);
  EXPECT_EQ(ranks(a), (std::vector<std::size_t>{1, 1, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(Functors, BOfFree) {
  const auto b = functorB(freeGraded(Module::free(Z, 3), 2, 2, 8), 4);
  ASSERT_EQ(b.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(b[k], k == 2 ? pres(3) : pres(0));
  EXPECT_THROW(functorB(strip({1, 1}, 6), 2), NotTRegular);
}

TEST(Functors, BAfterAIsIdentity) {
  InstanceGenerator gen(21);
  for (int i = 0; i < 20; ++i) {
    const auto parts = gen.parts(Z, static_cast<std::size_t>(gen.uniform(1, 3)), 2);
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 2));
    const auto back = functorB(functorA(parts, n, 8), parts.size() - 1);
    for (std::size_t k = 0; k < parts.size(); ++k) EXPECT_EQ(back[k], parts[k].presentation());
  }
}

TEST(SpecialFiltering, Examples) {
  const GradedModule y = freeGraded(Module::free(Z, 1), 1, 0, 6);
  // A point in degree 0 killed by t, next to a free line.
  const GradedModule py = directSum(strip({1}, 6), y);
  GradedSubmodule point = zeroSubmodule(py);
  point.degrees[0] = imageOf(mat({{1}, {0}}));
  const SpecialFilteringWitness pw = nilSpecialFilteringWitness(py, point);
  EXPECT_EQ(pw.nilBound, 1u);
  EXPECT_EQ(ranks(pw.z), (std::vector<std::size_t>{2, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(compositeIsInjective(py, point, pw));

  const GradedModule nil = strip({1, 1, 1}, 6);
  GradedSubmodule bottom = zeroSubmodule(nil);
  bottom.degrees[2] = Submodule::full(Z, 1);
  const SpecialFilteringWitness w = nilSpecialFilteringWitness(nil, bottom);
  EXPECT_TRUE(compositeIsInjective(nil, bottom, w));

  const SpecialFilteringWitness all = nilSpecialFilteringWitness(nil, fullSubmodule(nil));
  EXPECT_EQ(ranks(all.z), ranks(nil));
  EXPECT_TRUE(compositeIsInjective(nil, fullSubmodule(nil), all));

  const SpecialFilteringWitness none = nilSpecialFilteringWitness(y, zeroSubmodule(y));
  EXPECT_TRUE(isNil(none.z).nil);
  EXPECT_THROW(nilSpecialFilteringWitness(y, fullSubmodule(y)), NotNil);
}

TEST(ForgetGrading, Examples) {
  const AffineObject one = forgetGrading(strip({1}, 4));
  EXPECT_EQ(one.generatorCount(), 1u);
  EXPECT_TRUE(one.endos()[0].isZero());

  const AffineObject three = forgetGrading(strip({1, 1, 1}, 6));
  ASSERT_EQ(three.generatorCount(), 3u);
  const NilIndex ni = nilIndex(three, {});
  EXPECT_TRUE(ni.nilpotent);
  EXPECT_EQ(ni.index, 3u);

  const GradedModule x = strip({1, 1, 1}, 6);
  EXPECT_EQ(forgetGrading(twist(x, -1)), forgetGrading(x));
  EXPECT_THROW(forgetGrading(freeGraded(Module::free(Z, 1), 1, 0, 4)), NotNil);
}
