#include "kml/affine.hpp"
#include "kml/errors.hpp"
#include "kml/random.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

namespace {

AffineObject scalarLine(long phi, const Ring& ring = Z) { return AffineObject::free(ring, 1, {mat({{phi}}, ring)}); }

Submodule multiples(long m) { return imageOf(mat({{m}})); }

}  // namespace

TEST(Affine, RejectsNonCommutingEndos) {
  EXPECT_THROW(AffineObject::free(Z, 2, {mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})}), InvalidAffineObject);
  EXPECT_THROW(AffineObject(Module::quotient(mat({{2}})), {mat({{1, 0}, {0, 1}})}), InvalidAffineObject);
}

TEST(FfSub, Examples) {
  const AffineObject x = scalarLine(2);
  EXPECT_EQ(ffSub(x, {}), multiples(2));
  const AffineObject q = reduceModFf(x, {});
  EXPECT_EQ(q.module().presentation(), pres(0, {2}));
  EXPECT_TRUE(isZeroMorphism(q.endos()[0], q.module()));

  const AffineObject zero = AffineObject::free(Z, 2, {Matrix(Z, 2, 2)});
  EXPECT_TRUE(ffSub(zero, {}).isZero());
  EXPECT_EQ(reduceModFf(zero, {}).module().presentation(), pres(2));

  const AffineObject inv = AffineObject::free(Q, 2, {mat({{2, 1}, {0, 3}}, Q)});
  EXPECT_TRUE(ffSub(inv, {}).isFull());
  EXPECT_TRUE(reduceModFf(inv, {}).module().isZero());
}

TEST(NilIndex, Examples) {
  const NilIndex a = nilIndex(AffineObject::free(Z, 2, {mat({{0, 1}, {0, 0}})}), {});
  EXPECT_TRUE(a.nilpotent);
  EXPECT_EQ(a.index, 2u);
  EXPECT_FALSE(nilIndex(AffineObject::free(Z, 2, {Matrix::identity(Z, 2)}), {}).nilpotent);
  EXPECT_FALSE(nilIndex(scalarLine(2), {}).nilpotent);
  const NilIndex torsion = nilIndex(AffineObject(Module::quotient(mat({{8}})), {mat({{2}})}), {});
  EXPECT_TRUE(torsion.nilpotent);
  EXPECT_EQ(torsion.index, 3u);
}

TEST(NilIndex, UsesMixedMonomials) {
  // phi1 = phi2 = N with N^3 = 0: degree-2 monomials survive, so the index is 3.
  const Matrix n = mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  const NilIndex r = nilIndex(AffineObject::free(Z, 3, {n, n}), {});
  EXPECT_EQ(r.index, 3u);
}

TEST(Stability, Examples) {
  const AffineObject x = scalarLine(2);
  const StabilityReport adic = stabilityIndex(adicFiltration(x, {}, 8));
  EXPECT_EQ(adic.stableFrom, 0u);
  EXPECT_TRUE(adic.crossCheck);

  const FFiltration constant{x, {}, std::vector<Submodule>(9, Submodule::full(Z, 1))};
  const StabilityReport c = stabilityIndex(constant);
  EXPECT_FALSE(c.stableFrom.has_value());
  EXPECT_FALSE(c.generatedFrom.has_value());
  EXPECT_TRUE(c.crossCheck);

  FFiltration late{x, {}, {}};
  for (std::size_t n = 0; n <= 8; ++n) late.steps.push_back(multiples(n <= 3 ? 1 : 1L << (n - 3)));
  const StabilityReport l = stabilityIndex(late);
  EXPECT_EQ(l.stableFrom, 3u);
  EXPECT_EQ(l.generatedFrom, 3u);
}

TEST(Stability, RejectsInvalidFiltrations) {
  const AffineObject x = scalarLine(2);
  EXPECT_THROW(validateFiltration(FFiltration{x, {}, {multiples(2), multiples(1)}}), InvalidFiltration);
  EXPECT_THROW(validateFiltration(FFiltration{x, {}, {Submodule::full(Z, 1), multiples(4)}}), InvalidFiltration);
}

TEST(Stability, ConditionsAgreeOnRandomFiltrations) {
  InstanceGenerator gen(99);
  for (int i = 0; i < 40; ++i) {
    const AffineObject x = gen.affine(3, 2);
    EXPECT_TRUE(stabilityIndex(gen.filtration(x, 8)).crossCheck) << i;
  }
}

TEST(ArtinRees, Examples) {
  EXPECT_EQ(artinReesIndex(scalarLine(4), multiples(2), {}).n0, 1u);
  EXPECT_EQ(artinReesIndex(scalarLine(4), Submodule::full(Z, 1), {}).n0, 0u);
  EXPECT_EQ(artinReesIndex(scalarLine(4), Submodule::zero(Z, 1), {}).n0, 0u);
  EXPECT_THROW(artinReesIndex(scalarLine(4), Submodule::full(Z, 2), {}), AmbientMismatch);
}

TEST(ArtinRees, WiderWindowKeepsTheIndex) {
  InstanceGenerator gen(5);
  for (int i = 0; i < 25; ++i) {
    const AffineObject x = gen.affine(3, 2);
    const Submodule y = gen.stableSubmodule(x, 1);
    const ArtinReesReport a = artinReesIndex(x, y, {}, 8);
    const ArtinReesReport b = artinReesIndex(x, y, {}, 12);
    ASSERT_TRUE(a.n0.has_value());
    EXPECT_EQ(a.n0, b.n0);
  }
}

TEST(Devissage, Examples) {
  const auto zero = devissageFiltration(AffineObject::free(Z, 2, {Matrix(Z, 2, 2)}), {});
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_TRUE(zero.back().isZero());

  const AffineObject shift = AffineObject::free(Z, 2, {mat({{0, 1}, {0, 0}})});
  const auto steps = devissageFiltration(shift, {});
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[1], imageOf(mat({{1}, {0}})));

  EXPECT_TRUE(devissageFiltration(AffineObject::free(Z, 0, {Matrix(Z, 0, 0)}), {}).empty());
  EXPECT_THROW(devissageFiltration(scalarLine(2), {}), NotNilpotent);
}

TEST(Devissage, RandomNilpotentInstances) {
  InstanceGenerator gen(13);
  for (int i = 0; i < 40; ++i) {
    const AffineObject x = gen.nilpotentAffine(i % 2 ? Z : Q, 4, 2);
    const DevissageReport r = verifyDevissage(x, {});
    EXPECT_TRUE(r.pass()) << i;
    // Subquotient ranks add up to the rank of x.
    std::size_t total = 0;
    for (std::size_t k = 0; k + 1 < r.steps.size(); ++k) total += r.steps[k].rank() - r.steps[k + 1].rank();
    EXPECT_EQ(total, x.generatorCount() - x.module().relations().rank());
  }
}
