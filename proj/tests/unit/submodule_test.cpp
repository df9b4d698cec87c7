#include "kml/errors.hpp"
#include "kml/random.hpp"
#include "kml/submodule.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

TEST(Intersection, Examples) {
  const Submodule four = imageOf(mat({{4}}));
  const Submodule two = imageOf(mat({{2}}));
  EXPECT_EQ(intersectSubmodules(four, two), four);

  const Submodule even = imageOf(mat({{2, 0}, {0, 2}}));
  const Submodule diagonal = imageOf(mat({{1}, {1}}));
  EXPECT_EQ(intersectSubmodules(even, diagonal), imageOf(mat({{2}, {2}})));
  EXPECT_EQ(intersectSubmodules(even, even), even);
}

TEST(Intersection, AmbientMismatch) {
  EXPECT_THROW(intersectSubmodules(Submodule::full(Z, 2), Submodule::full(Z, 3)), AmbientMismatch);
}

TEST(Intersection, LatticeLaws) {
  InstanceGenerator gen(31);
  for (int i = 0; i < 60; ++i) {
    const Submodule a = imageOf(gen.matrix(Z, 3, 2, 4));
    const Submodule b = imageOf(gen.matrix(Z, 3, 2, 4));
    const Submodule c = sumSubmodules(a, imageOf(gen.matrix(Z, 3, 1, 4)));
    const Submodule ab = intersectSubmodules(a, b);
    EXPECT_EQ(ab, intersectSubmodules(b, a));
    EXPECT_EQ(intersectSubmodules(a, a), a);
    EXPECT_TRUE(a.contains(ab));
    EXPECT_TRUE(b.contains(ab));
    EXPECT_TRUE(intersectSubmodules(c, b).contains(ab));  // a ⊆ c
  }
}

TEST(Submodule, CanonicalFormIgnoresGeneratorChoice) {
  const Submodule a = imageOf(mat({{2, 0}, {0, 3}}));
  const Submodule b = imageOf(mat({{2, 2, 4}, {3, 0, 3}}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basisRows(), b.basisRows());
}

TEST(Submodule, ReduceAndCoordinates) {
  const Submodule s = imageOf(mat({{2}, {4}}));
  EXPECT_TRUE(s.contains(std::vector<mpq_class>{6, 12}));
  EXPECT_FALSE(s.contains(std::vector<mpq_class>{1, 2}));
  const auto coords = s.coordinates({6, 12});
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(s.generators() * Matrix::columnVector(Z, *coords), Matrix::columnVector(Z, {6, 12}));
  EXPECT_THROW(s.coordinatesOfColumns(mat({{1}, {0}})), NotInSpan);
}

TEST(Submodule, PreimageAndImage) {
  const Matrix twice = mat({{2}});
  EXPECT_EQ(preimageOf(twice, imageOf(mat({{4}}))), imageOf(mat({{2}})));
  EXPECT_EQ(imageOf(twice, Submodule::full(Z, 1)), imageOf(mat({{2}})));
}

TEST(Submodule, FieldsSaturate) {
  const Submodule s = imageOf(mat({{2}, {4}}, Q));
  EXPECT_TRUE(s.contains(std::vector<mpq_class>{1, 2}));
  EXPECT_EQ(s.rank(), 1u);
}
