#include <stdexcept>

#include "kml/lambda.hpp"
#include "kml/random.hpp"
#include "test_helpers.hpp"

using namespace kml;

namespace {

LaurentPolynomial l(std::size_t vars, std::size_t i) { return LaurentPolynomial::variable(vars, i); }
LaurentPolynomial one(std::size_t vars) { return LaurentPolynomial::constant(vars, 1); }

}  // namespace

TEST(Adams, Examples) {
  EXPECT_EQ(adams(3, one(2)), one(2));
  EXPECT_EQ(adams(2, one(1) - l(1, 0)), one(1) - l(1, 0) * l(1, 0));
  const LaurentPolynomial f = LaurentPolynomial::monomial({1, -1});
  EXPECT_EQ(adams(2, adams(3, f)), LaurentPolynomial::monomial({6, -6}));
  EXPECT_EQ(adams(6, f), LaurentPolynomial::monomial({6, -6}));
  EXPECT_THROW(adams(0, f), std::invalid_argument);
}

TEST(Adams, Printing) {
  EXPECT_EQ(koszulClass(1).toString(), "1 - l1");
  EXPECT_EQ(adams(2, koszulClass(1)).toString(), "1 - l1^2");
}

TEST(Koszul, ClassAndCofactor) {
  EXPECT_EQ(cofactor(1, 2), one(1) + l(1, 0));
  for (std::size_t p = 1; p <= 3; ++p) EXPECT_EQ(cofactor(p, 1), one(p));
  const LaurentPolynomial expected =
      (one(2) - l(2, 0)) * (one(2) - l(2, 1)) * (one(2) + l(2, 0)) * (one(2) + l(2, 1));
  EXPECT_EQ(adams(2, koszulClass(2)), expected);
}

TEST(Koszul, IdentityGrid) {
  for (std::size_t p = 1; p <= 4; ++p)
    for (unsigned k = 1; k <= 5; ++k) {
      const AdamsReport r = verifyAdamsKoszul(p, k);
      EXPECT_TRUE(r.pass()) << p << " " << k;
      mpz_class power = 1;
      for (std::size_t i = 0; i < p; ++i) power *= k;
      EXPECT_EQ(r.cofactorAtOne, power);
    }
  EXPECT_EQ(verifyAdamsKoszul(1, 2).cofactorAtOne, 2);
  EXPECT_EQ(verifyAdamsKoszul(2, 3).cofactorAtOne, 9);
}

TEST(Adams, RingHomomorphismAndComposition) {
  InstanceGenerator gen(6);
  for (int i = 0; i < 100; ++i) {
    const std::size_t vars = static_cast<std::size_t>(gen.uniform(1, 3));
    const LaurentPolynomial f = gen.laurent(vars, 3);
    const LaurentPolynomial g = gen.laurent(vars, 3);
    const auto k = static_cast<unsigned>(gen.uniform(1, 4));
    const auto m = static_cast<unsigned>(gen.uniform(1, 4));
    EXPECT_EQ(adams(k, f * g), adams(k, f) * adams(k, g));
    EXPECT_EQ(adams(k, f + g), adams(k, f) + adams(k, g));
    EXPECT_EQ(adams(k, adams(m, f)), adams(k * m, f));
    EXPECT_EQ(adams(k, -f), -adams(k, f));
    EXPECT_EQ(adams(k, f).evaluateAtOne(), f.evaluateAtOne());
  }
}
