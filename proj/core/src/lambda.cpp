#include "kml/lambda.hpp"

#include <sstream>
#include <stdexcept>

namespace kml {

LaurentPolynomial::LaurentPolynomial(std::size_t vars) : vars_(vars) {
  if (vars > kMaxVariables) throw std::invalid_argument("at most 8 line elements are supported");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t vars, const mpz_class& c) {
  LaurentPolynomial f(vars);
  f.addTerm(Exponent(vars, 0), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw std::invalid_argument("variable index out of range");
  Exponent e(vars, 0);
  e[i] = 1;
  return monomial(e);
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const mpz_class& c) {
  LaurentPolynomial f(e.size());
  f.addTerm(e, c);
  return f;
}

mpz_class LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::addTerm(const Exponent& e, const mpz_class& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent length differs from variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

mpz_class LaurentPolynomial::evaluateAtOne() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("variable counts differ");
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("variable counts differ");
  LaurentPolynomial r(vars_);
  Exponent e(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  return r;
}

std::string LaurentPolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    mpz_class a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "l" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

LaurentPolynomial adams(unsigned k, const LaurentPolynomial& f) {
  if (k == 0) throw std::invalid_argument("Adams operations are indexed by k >= 1");
  LaurentPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    LaurentPolynomial::Exponent scaled = e;
    for (auto& x : scaled) x *= static_cast<int>(k);
    r.addTerm(scaled, c);
  }
  return r;
}

LaurentPolynomial koszulClass(std::size_t p) {
  LaurentPolynomial r = LaurentPolynomial::constant(p, 1);
  for (std::size_t i = 0; i < p; ++i)
    r = r * (LaurentPolynomial::constant(p, 1) - LaurentPolynomial::variable(p, i));
  return r;
}

LaurentPolynomial cofactor(std::size_t p, unsigned k) {
  LaurentPolynomial r = LaurentPolynomial::constant(p, 1);
  for (std::size_t i = 0; i < p; ++i) {
    LaurentPolynomial geo(p);
    for (unsigned j = 0; j < k; ++j) {
      LaurentPolynomial::Exponent e(p, 0);
      e[i] = static_cast<int>(j);
      geo.addTerm(e, 1);
    }
    r = r * geo;
  }
  return r;
}

AdamsReport verifyAdamsKoszul(std::size_t p, unsigned k) {
  AdamsReport r;
  r.p = p;
  r.k = k;
  const LaurentPolynomial kos = koszulClass(p);
  const LaurentPolynomial cof = cofactor(p, k);
  r.lhs = adams(k, kos);
  r.rhs = kos * cof;
  r.factorization = r.lhs == r.rhs;
  r.cofactorAtOne = cof.evaluateAtOne();
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), k, p);
  r.evaluation = r.cofactorAtOne == expected;
  return r;
}

}  // namespace kml
