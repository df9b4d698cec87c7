#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "kml/matrix.hpp"

namespace kml {

/// Submodule of the free module R^n. The basis is kept canonical: rows of the
/// Hermite normal form over Z, of the reduced row echelon form over a field.
/// Two submodules are equal iff their canonical bases are equal.
class Submodule {
 public:
  static Submodule zero(const Ring& ring, std::size_t ambient);
  static Submodule full(const Ring& ring, std::size_t ambient);
  /// Span of the columns of `generators` (ambient = generators.rows()).
  static Submodule fromGenerators(const Matrix& generators);
  static Submodule fromColumns(const Ring& ring, std::size_t ambient,
                               const std::vector<std::vector<mpq_class>>& columns);

  const Ring& ring() const noexcept { return basis_.ring(); }
  std::size_t ambientRank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool isZero() const noexcept { return basis_.rows() == 0; }
  bool isFull() const;

  /// Canonical basis, one vector per row.
  const Matrix& basisRows() const noexcept { return basis_; }
  /// Canonical basis as columns (ambient x rank).
  Matrix generators() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const std::vector<mpq_class>& v) const;
  bool containsColumnsOf(const Matrix& m) const;
  bool contains(const Submodule& other) const;

  /// Canonical representative of v modulo this submodule.
  std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;
  Matrix reduceColumns(const Matrix& m) const;

  /// Coefficients c with v = sum c_i * basis_i, or nullopt if v is outside.
  std::optional<std::vector<mpq_class>> coordinates(std::vector<mpq_class> v) const;
  /// Coordinates of every column; throws NotInSpan if one is outside.
  Matrix coordinatesOfColumns(const Matrix& m) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Submodule(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  static Submodule canonical(const Matrix& rows, std::size_t ambient);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : A v = 0}; saturated over Z.
Submodule kernelBasis(const Matrix& a);

/// A ∩ B. Throws AmbientMismatch for different ambient modules.
Submodule intersectSubmodules(const Submodule& a, const Submodule& b);
Submodule sumSubmodules(const Submodule& a, const Submodule& b);

/// m(S) for a submodule S of the source of m.
Submodule imageOf(const Matrix& m, const Submodule& s);
/// Column span of m.
Submodule imageOf(const Matrix& m);
/// {v : m v ∈ T}.
Submodule preimageOf(const Matrix& m, const Submodule& target);

}  // namespace kml
