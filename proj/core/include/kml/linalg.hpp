#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kml/matrix.hpp"

namespace kml {

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithDecomposition {
  Matrix u;
  Matrix d;
  Matrix v;
  std::size_t rank = 0;

  /// Nonzero diagonal entries of D, in order.
  std::vector<mpz_class> diagonal() const;
};

/// Integer Smith normal form with both transforms. Throws RingMismatch for
/// matrices over Q or F_p; use `rank`/`kernelBasis` there.
SmithDecomposition smithNormalForm(const Matrix& a);
/// Nonzero Smith diagonal without transforms (integer matrices only).
std::vector<mpz_class> smithDiagonal(const Matrix& a);

/// A finitely generated module up to isomorphism: free part plus invariant
/// factors (each > 1, forming a divisibility chain). Over a field the
/// invariant factor list is always empty and `freeRank` is the dimension.
struct ModulePresentation {
  std::size_t freeRank = 0;
  std::vector<mpz_class> invariantFactors;

  bool isZero() const { return freeRank == 0 && invariantFactors.empty(); }
  /// e.g. "Z^2 + Z/2 + Z/6", "0", or "F7^3".
  std::string toString(const std::string& ringName = "Z") const;
  friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;
};

/// Builds a presentation from a relation lattice (given by the diagonal of
/// its Smith form) inside `generators` generators.
ModulePresentation presentationFromDiagonal(std::size_t generators, const std::vector<mpz_class>& diagonal);

std::size_t rank(const Matrix& a);

/// target / Im(A).
ModulePresentation cokernel(const Matrix& a);

/// Ker(dOut) / Im(dIn). Throws NotAComplex when dOut * dIn != 0.
ModulePresentation homologyAt(const Matrix& dOut, const Matrix& dIn);

/// Exact determinant of a square matrix.
mpq_class determinant(const Matrix& a);

/// Some X with A * X = B, or nullopt when no solution exists over the ring.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace kml
