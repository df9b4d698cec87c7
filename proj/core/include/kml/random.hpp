#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kml/affine.hpp"
#include "kml/cube.hpp"
#include "kml/graded.hpp"
#include "kml/k0.hpp"
#include "kml/lambda.hpp"

namespace kml {

/// Seeded instance generators for the randomized suites. Everything is a
/// function of the generator state, so a fixed seed reproduces a suite.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);
  bool coin(double p = 0.5);

  Matrix matrix(const Ring& ring, std::size_t rows, std::size_t cols, long bound);
  std::vector<mpq_class> vector(const Ring& ring, std::size_t size, long bound);

  /// Tensor product of `n` random two-term maps; always commutes.
  SCube cube(std::size_t n, const Ring& ring = Ring::integers());
  TypicalCubeSpec typicalSpec(std::size_t n);

  std::vector<Module> parts(const Ring& ring, std::size_t count, std::size_t maxRank);
  /// Quotient of a free graded module, zero from degree `bound` on.
  GradedModule nilModule(const Ring& ring, std::size_t vars, std::size_t bound, std::size_t truncation);
  /// N'/N -> F/N -> F/N' inside a random free graded module F.
  SesWitness ses(const Ring& ring, std::size_t vars, std::size_t truncation);

  /// Commuting integer endomorphisms built as polynomials in one matrix.
  AffineObject affine(std::size_t maxRank, std::size_t maxEndos);
  /// Nilpotent commuting endomorphisms, sometimes on a torsion module.
  AffineObject nilpotentAffine(const Ring& ring, std::size_t maxRank, std::size_t maxEndos);
  /// Smallest submodule stable under every endomorphism containing random vectors.
  Submodule stableSubmodule(const AffineObject& x, std::size_t gens);
  /// x_{n+1} = ff x_n + E_n with E_n a random piece of x_n, eventually zero.
  FFiltration filtration(const AffineObject& x, std::size_t depth);

  LaurentPolynomial laurent(std::size_t vars, std::size_t terms);

 private:
  std::mt19937_64 rng_;
};

/// Replaces zero components by modules with no generators.
GradedModule compactZeroComponents(const GradedModule& x);

}  // namespace kml
