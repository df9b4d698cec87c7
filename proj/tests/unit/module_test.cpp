#include "kml/errors.hpp"
#include "kml/module.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

TEST(Module, PresentationOfQuotient) {
  const Module m = Module::quotient(mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(m.presentation(), pres(0, {6}));
  EXPECT_FALSE(m.isFree());
  EXPECT_FALSE(m.isZero());
  EXPECT_TRUE(Module::quotient(mat({{1}})).isZero());
}

TEST(Module, FromPresentationRoundTrips) {
  const ModulePresentation p = pres(2, {2, 4});
  EXPECT_EQ(moduleFromPresentation(Z, p).presentation(), p);
}

TEST(Module, AnnihilationAndDirectSum) {
  const Module m = Module::quotient(mat({{4}}));
  EXPECT_TRUE(m.isAnnihilatedBy(4));
  EXPECT_FALSE(m.isAnnihilatedBy(2));
  EXPECT_EQ(directSum(m, Module::free(Z, 1)).presentation(), pres(1, {4}));
}

TEST(Morphism, WellDefinedInjectiveSurjective) {
  const Module z4 = Module::quotient(mat({{4}}));
  const Module z2 = Module::quotient(mat({{2}}));
  EXPECT_TRUE(isWellDefined(mat({{1}}), z4, z2));
  EXPECT_FALSE(isWellDefined(mat({{1}}), z2, z4));
  EXPECT_TRUE(isWellDefined(mat({{2}}), z2, z4));
  EXPECT_TRUE(isInjective(mat({{2}}), z2, z4));
  EXPECT_FALSE(isSurjective(mat({{2}}), z4));
  EXPECT_TRUE(isSurjective(mat({{1}}), z2));
  EXPECT_TRUE(isZeroMorphism(mat({{2}}), z2));
  EXPECT_TRUE(morphismsEqual(mat({{1}}), mat({{3}}), z2));
}

TEST(Morphism, CokernelAndKernel) {
  const Module free2 = Module::free(Z, 2);
  EXPECT_EQ(cokernelModule(mat({{2}, {2}}), free2).presentation(), pres(1, {2}));
  EXPECT_EQ(kernelLattice(mat({{1, 1}}), Module::free(Z, 1)), imageOf(mat({{1}, {-1}})));
}

TEST(Homology, PresentedMiddleTerm) {
  // Z --2--> Z/8 --4--> Z/8: kernel of 4 is 2Z/8, image 2Z/8, so zero.
  const Module z8 = Module::quotient(mat({{8}}));
  EXPECT_TRUE(homologyOfPresented(z8, mat({{2}}), mat({{4}}), z8).isZero());
  // Z --4--> Z/8 --> 0 gives Z/4.
  EXPECT_EQ(homologyOfPresented(z8, mat({{4}}), Matrix(Z, 0, 1), Module::zero(Z)), pres(0, {4}));
}
