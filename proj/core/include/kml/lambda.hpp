#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kml {

/// Integer Laurent polynomial in line elements l_1..l_p (p <= 8). Zero
/// coefficients are never stored.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<int>;
  static constexpr std::size_t kMaxVariables = 8;

  explicit LaurentPolynomial(std::size_t vars = 0);
  static LaurentPolynomial constant(std::size_t vars, const mpz_class& c);
  /// l_i (0-based index).
  static LaurentPolynomial variable(std::size_t vars, std::size_t i);
  static LaurentPolynomial monomial(const Exponent& e, const mpz_class& c = 1);

  std::size_t vars() const noexcept { return vars_; }
  const std::map<Exponent, mpz_class>& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(const Exponent& e) const;

  void addTerm(const Exponent& e, const mpz_class& c);
  /// Value with every l_i = 1.
  mpz_class evaluateAtOne() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// e.g. "1 - l1 - l2 + l1*l2"; "0" when zero.
  std::string toString() const;

 private:
  std::size_t vars_;
  std::map<Exponent, mpz_class> terms_;
};

/// psi_k: l_i -> l_i^k. Throws std::invalid_argument for k = 0.
LaurentPolynomial adams(unsigned k, const LaurentPolynomial& f);

/// prod_{i<=p} (1 - l_i).
LaurentPolynomial koszulClass(std::size_t p);
/// prod_{i<=p} (1 + l_i + ... + l_i^{k-1}).
LaurentPolynomial cofactor(std::size_t p, unsigned k);

struct AdamsReport {
  std::size_t p = 0;
  unsigned k = 0;
  LaurentPolynomial lhs;  // psi_k(kos)
  LaurentPolynomial rhs;  // kos * cofactor
  mpz_class cofactorAtOne;
  bool factorization = false;
  bool evaluation = false;  // cofactorAtOne == k^p
  bool pass() const { return factorization && evaluation; }
};

AdamsReport verifyAdamsKoszul(std::size_t p, unsigned k);

}  // namespace kml
