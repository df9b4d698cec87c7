#include "kml/ring.hpp"

#include <stdexcept>

namespace kml {

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::primeField(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !isPrime(p))
    throw std::invalid_argument("F_p needs a prime p < 2^31, got " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
  else if (text.size() > 1 && text[0] == 'F') digits = text.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("unknown ring '" + text + "' (expected Z, Q or Fp:<p>)");
  return primeField(std::stoll(digits));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integer:
      return "Z";
    case RingKind::Rational:
      return "Q";
    case RingKind::PrimeField:
      break;
  }
  return "F" + std::to_string(p_);
}

mpq_class Ring::normalize(const mpq_class& value) const {
  switch (kind_) {
    case RingKind::Rational:
      return value;
    case RingKind::Integer:
      if (value.get_den() != 1)
        throw std::invalid_argument("non-integer value " + value.get_str() + " over Z");
      return value;
    case RingKind::PrimeField:
      break;
  }
  const mpz_class p(static_cast<long>(p_));
  mpz_class num, den;
  mpz_mod(num.get_mpz_t(), value.get_num_mpz_t(), p.get_mpz_t());
  mpz_mod(den.get_mpz_t(), value.get_den_mpz_t(), p.get_mpz_t());
  if (den == 0)
    throw std::invalid_argument("denominator of " + value.get_str() + " vanishes in " + name());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return mpq_class(num);
}

}  // namespace kml
