#include "kml/submodule.hpp"

#include "kml/detail/domain.hpp"
#include "kml/errors.hpp"

namespace kml {

namespace {

void requireSameRing(const Ring& a, const Ring& b, const char* where) {
  if (!(a == b)) throw RingMismatch(std::string(where) + ": " + a.name() + " vs " + b.name());
}

// floor(a / b) over Z, a / b over a field.
mpq_class pivotQuotient(const Ring& ring, const mpq_class& a, const mpq_class& b) {
  if (ring.isField()) return ring.normalize(a / b);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return mpq_class(q);
}

}  // namespace

Submodule Submodule::canonical(const Matrix& rows, std::size_t ambient) {
  return detail::dispatch(rows.ring(), [&](const auto& dom) {
    auto g = detail::toGrid(dom, rows);
    auto pivots = detail::rowEchelon(dom, g, nullptr, true);
    Matrix basis(rows.ring(), pivots.size(), ambient);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < ambient; ++c)
        if (!dom.isZero(g(r, c))) basis.set(r, c, dom.toRational(g(r, c)));
    return Submodule(ambient, std::move(basis), std::move(pivots));
  });
}

Submodule Submodule::zero(const Ring& ring, std::size_t ambient) {
  return Submodule(ambient, Matrix(ring, 0, ambient), {});
}

Submodule Submodule::full(const Ring& ring, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Submodule(ambient, Matrix::identity(ring, ambient), std::move(pivots));
}

Submodule Submodule::fromGenerators(const Matrix& generators) {
  return canonical(generators.transpose(), generators.rows());
}

Submodule Submodule::fromColumns(const Ring& ring, std::size_t ambient,
                                 const std::vector<std::vector<mpq_class>>& columns) {
  Matrix rows(ring, columns.size(), ambient);
  for (std::size_t r = 0; r < columns.size(); ++r) {
    if (columns[r].size() != ambient) throw DimensionMismatch("generator has wrong length");
    for (std::size_t c = 0; c < ambient; ++c) rows.set(r, c, columns[r][c]);
  }
  return canonical(rows, ambient);
}

bool Submodule::isFull() const {
  if (rank() != ambient_) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (basis_(i, pivots_[i]) != 1) return false;
  return true;
}

std::vector<mpq_class> Submodule::reduce(std::vector<mpq_class> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: vector has wrong length");
  const Ring& r = ring();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    mpq_class q = pivotQuotient(r, v[p], basis_(i, p));
    if (sgn(q) == 0) continue;
    for (std::size_t c = p; c < ambient_; ++c)
      if (sgn(basis_(i, c)) != 0) v[c] = r.normalize(v[c] - q * basis_(i, c));
  }
  return v;
}

Matrix Submodule::reduceColumns(const Matrix& m) const {
  if (m.rows() != ambient_) throw DimensionMismatch("reduceColumns: row count differs from ambient");
  if (isZero()) return m;
  Matrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto v = reduce(m.columnValues(c));
    for (std::size_t r = 0; r < v.size(); ++r)
      if (sgn(v[r]) != 0) out.set(r, c, v[r]);
  }
  return out;
}

std::optional<std::vector<mpq_class>> Submodule::coordinates(std::vector<mpq_class> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector has wrong length");
  const Ring& r = ring();
  std::vector<mpq_class> coeffs(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t p = pivots_[i];
    // Entries left of this pivot must already be cleared.
    for (std::size_t c = (i == 0 ? 0 : pivots_[i - 1] + 1); c < p; ++c)
      if (sgn(v[c]) != 0) return std::nullopt;
    if (sgn(v[p]) == 0) continue;
    mpq_class q;
    if (r.isField()) {
      q = r.normalize(v[p] / basis_(i, p));
    } else {
      const mpz_class& a = v[p].get_num();
      const mpz_class& b = basis_(i, p).get_num();
      if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return std::nullopt;
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      q = t;
    }
    coeffs[i] = q;
    for (std::size_t c = p; c < ambient_; ++c)
      if (sgn(basis_(i, c)) != 0) v[c] = r.normalize(v[c] - q * basis_(i, c));
  }
  for (const auto& x : v)
    if (sgn(x) != 0) return std::nullopt;
  return coeffs;
}

Matrix Submodule::coordinatesOfColumns(const Matrix& m) const {
  requireSameRing(ring(), m.ring(), "coordinatesOfColumns");
  Matrix out(m.ring(), rank(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto coeffs = coordinates(m.columnValues(c));
    if (!coeffs) throw NotInSpan("column " + std::to_string(c) + " is not in the submodule");
    for (std::size_t r = 0; r < coeffs->size(); ++r)
      if (sgn((*coeffs)[r]) != 0) out.set(r, c, (*coeffs)[r]);
  }
  return out;
}

bool Submodule::contains(const std::vector<mpq_class>& v) const { return coordinates(v).has_value(); }

bool Submodule::containsColumnsOf(const Matrix& m) const {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!contains(m.columnValues(c))) return false;
  return true;
}

bool Submodule::contains(const Submodule& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("contains: ambient ranks differ");
  return containsColumnsOf(other.generators());
}

Submodule kernelBasis(const Matrix& a) {
  return detail::dispatch(a.ring(), [&](const auto& dom) {
    auto k = detail::kernelRows(dom, detail::toGrid(dom, a));
    return Submodule::fromGenerators(detail::fromGrid(dom, a.ring(), k).transpose());
  });
}

Submodule intersectSubmodules(const Submodule& a, const Submodule& b) {
  if (a.ambientRank() != b.ambientRank())
    throw AmbientMismatch("intersect: ambient ranks " + std::to_string(a.ambientRank()) + " and " +
                          std::to_string(b.ambientRank()));
  requireSameRing(a.ring(), b.ring(), "intersect");
  if (a.isZero() || b.isZero()) return Submodule::zero(a.ring(), a.ambientRank());
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  // x^T A = y^T B  <=>  (x, y) in ker [A; -B]^T.
  Matrix stacked = Matrix::vstack(a.basisRows(), -b.basisRows());
  Submodule k = kernelBasis(stacked.transpose());
  Matrix x = k.basisRows().columns(0, a.rank());
  return Submodule::fromGenerators((x * a.basisRows()).transpose());
}

Submodule sumSubmodules(const Submodule& a, const Submodule& b) {
  if (a.ambientRank() != b.ambientRank()) throw AmbientMismatch("sum: ambient ranks differ");
  requireSameRing(a.ring(), b.ring(), "sum");
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  return Submodule::fromGenerators(Matrix::vstack(a.basisRows(), b.basisRows()).transpose());
}

Submodule imageOf(const Matrix& m) { return Submodule::fromGenerators(m); }

Submodule imageOf(const Matrix& m, const Submodule& s) {
  if (m.cols() != s.ambientRank()) throw DimensionMismatch("imageOf: source rank differs");
  if (s.isZero()) return Submodule::zero(m.ring(), m.rows());
  return Submodule::fromGenerators(m * s.generators());
}

Submodule preimageOf(const Matrix& m, const Submodule& target) {
  if (m.rows() != target.ambientRank()) throw AmbientMismatch("preimageOf: target rank differs");
  requireSameRing(m.ring(), target.ring(), "preimage");
  if (target.isZero()) return kernelBasis(m);
  if (target.isFull()) return Submodule::full(m.ring(), m.cols());
  // m v = T^T y  <=>  (v, y) in ker [m | -T^T].
  Matrix joined = Matrix::hstack(m, -target.generators());
  Submodule k = kernelBasis(joined);
  return Submodule::fromGenerators(k.basisRows().columns(0, m.cols()).transpose());
}

}  // namespace kml
