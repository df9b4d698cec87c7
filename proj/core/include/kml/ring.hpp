#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kml {

enum class RingKind { Integer, Rational, PrimeField };

/// Coefficient ring tag: Z, Q or F_p. Values of every ring are carried as
/// normalized `mpq_class`: integers have denominator 1 and elements of F_p
/// are integers in [0, p).
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integer, 0); }
  static Ring rationals() { return Ring(RingKind::Rational, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Ring primeField(std::int64_t p);
  /// Parses "Z", "Q", "Fp:<p>" or "F<p>".
  static Ring parse(const std::string& text);

  RingKind kind() const noexcept { return kind_; }
  std::int64_t characteristic() const noexcept { return p_; }
  bool isField() const noexcept { return kind_ != RingKind::Integer; }

  /// "Z", "Q" or "F<p>".
  std::string name() const;

  /// Maps an arbitrary rational into the ring's canonical representation.
  /// Throws std::invalid_argument for non-integers over Z and for
  /// denominators divisible by p over F_p.
  mpq_class normalize(const mpq_class& value) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::int64_t p_;
};

bool isPrime(std::int64_t n);

}  // namespace kml
