#include "kml/linalg.hpp"

#include <sstream>

#include "kml/detail/domain.hpp"
#include "kml/errors.hpp"

namespace kml {

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i).get_num());
  return out;
}

SmithDecomposition smithNormalForm(const Matrix& a) {
  if (a.ring().kind() != RingKind::Integer)
    throw RingMismatch("smithNormalForm needs an integer matrix, got " + a.ring().name());
  return detail::dispatchInteger([&](const auto& dom) {
    auto s = detail::smith(dom, detail::toGrid(dom, a), true);
    return SmithDecomposition{detail::fromGrid(dom, a.ring(), s.u), detail::fromGrid(dom, a.ring(), s.d),
                              detail::fromGrid(dom, a.ring(), s.v), s.rank};
  });
}

std::vector<mpz_class> smithDiagonal(const Matrix& a) {
  if (a.ring().kind() != RingKind::Integer)
    throw RingMismatch("smithDiagonal needs an integer matrix, got " + a.ring().name());
  return detail::dispatchInteger([&](const auto& dom) {
    auto s = detail::smith(dom, detail::toGrid(dom, a), false);
    std::vector<mpz_class> diag;
    for (std::size_t i = 0; i < s.rank; ++i) diag.push_back(dom.toRational(s.d(i, i)).get_num());
    return diag;
  });
}

ModulePresentation presentationFromDiagonal(std::size_t generators,
                                            const std::vector<mpz_class>& diagonal) {
  ModulePresentation p;
  p.freeRank = generators - diagonal.size();
  for (const auto& d : diagonal)
    if (mpz_cmpabs_ui(d.get_mpz_t(), 1) > 0) p.invariantFactors.push_back(abs(d));
  return p;
}

std::string ModulePresentation::toString(const std::string& ringName) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (freeRank > 0) {
    os << ringName;
    if (freeRank > 1) os << '^' << freeRank;
    first = false;
  }
  for (const auto& f : invariantFactors) {
    if (!first) os << " + ";
    os << "Z/" << f.get_str();
    first = false;
  }
  return os.str();
}

std::size_t rank(const Matrix& a) {
  return detail::dispatch(a.ring(), [&](const auto& dom) {
    return detail::rank(dom, detail::toGrid(dom, a));
  });
}

ModulePresentation cokernel(const Matrix& a) {
  if (a.ring().isField()) return {a.rows() - rank(a), {}};
  return presentationFromDiagonal(a.rows(), smithDiagonal(a));
}

ModulePresentation homologyAt(const Matrix& dOut, const Matrix& dIn) {
  if (dOut.cols() != dIn.rows())
    throw DimensionMismatch("homologyAt: dOut has " + std::to_string(dOut.cols()) +
                            " columns but dIn has " + std::to_string(dIn.rows()) + " rows");
  if (!(dOut * dIn).isZero()) throw NotAComplex("homologyAt: dOut * dIn != 0");
  // Ker(dOut) is saturated in the middle module, so Ker/Im has the torsion
  // of coker(dIn) and free rank reduced by rank(dOut).
  ModulePresentation p = cokernel(dIn);
  p.freeRank -= rank(dOut);
  return p;
}

mpq_class determinant(const Matrix& a) {
  if (!a.isSquare()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpq_class> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = a(r, c);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv * n + c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[piv * n + k], m[c * n + k]);
      det = -det;
    }
    const mpq_class p = m[c * n + c];
    det *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r * n + c]) == 0) continue;
      mpq_class q = m[r * n + c] / p;
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= q * m[c * n + k];
    }
  }
  // Entries over F_p are integer representatives, so reducing at the end is exact.
  return a.ring().normalize(det);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("solve: ring mismatch");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  return detail::dispatch(a.ring(), [&](const auto& dom) -> std::optional<Matrix> {
    using D = std::decay_t<decltype(dom)>;
    auto s = detail::smith(dom, detail::toGrid(dom, a), true);
    // U A V = D, so A X = B iff D Y = U B with X = V Y.
    Matrix ub = detail::fromGrid(dom, a.ring(), s.u) * b;
    auto g = detail::toGrid(dom, ub);
    detail::Grid<D> y(dom, a.cols(), b.cols());
    for (std::size_t r = 0; r < g.rows; ++r)
      for (std::size_t c = 0; c < g.cols; ++c) {
        const auto& v = g(r, c);
        if (dom.isZero(v)) continue;
        if (r >= s.rank || !dom.divides(s.d(r, r), v)) return std::nullopt;
        y(r, c) = dom.exactDiv(v, s.d(r, r));
      }
    return detail::fromGrid(dom, a.ring(), s.v) * detail::fromGrid(dom, a.ring(), y);
  });
}

}  // namespace kml
