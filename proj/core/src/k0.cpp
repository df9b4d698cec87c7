#include "kml/k0.hpp"

#include <algorithm>
#include <sstream>

#include "kml/errors.hpp"

namespace kml {

K0Vector K0Vector::monomial(std::size_t degree, std::size_t window, std::int64_t c) {
  K0Vector v = zero(window);
  if (degree <= window) v.coeffs[degree] = c;
  return v;
}

K0Vector K0Vector::restricted(std::size_t w) const {
  K0Vector v = zero(w);
  for (std::size_t d = 0; d <= w; ++d) v.coeffs[d] = (*this)[d];
  return v;
}

K0Vector K0Vector::shifted() const {
  K0Vector v = zero(window + 1);
  for (std::size_t d = 0; d <= window; ++d) v.coeffs[d + 1] = coeffs[d];
  return v;
}

K0Vector K0Vector::timesOneMinusS() const {
  K0Vector v = *this;
  for (std::size_t d = 1; d <= window; ++d) v.coeffs[d] -= coeffs[d - 1];
  return v;
}

K0Vector operator+(const K0Vector& a, const K0Vector& b) {
  K0Vector v = K0Vector::zero(std::min(a.window, b.window));
  for (std::size_t d = 0; d <= v.window; ++d) v.coeffs[d] = a[d] + b[d];
  return v;
}

K0Vector operator-(const K0Vector& a, const K0Vector& b) {
  K0Vector v = K0Vector::zero(std::min(a.window, b.window));
  for (std::size_t d = 0; d <= v.window; ++d) v.coeffs[d] = a[d] - b[d];
  return v;
}

bool K0Vector::agree(const K0Vector& a, const K0Vector& b) {
  const std::size_t w = std::min(a.window, b.window);
  for (std::size_t d = 0; d <= w; ++d)
    if (a[d] != b[d]) return false;
  return true;
}

std::string K0Vector::toString() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::int64_t c = coeffs[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "s";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

K0Vector k0Class(const GradedModule& x) {
  KoszulHomology kh = koszulHomology(x);
  K0Vector v = K0Vector::zero(kh.window);
  for (std::size_t i = 0; i < kh.t.size(); ++i)
    for (std::size_t d = 0; d <= kh.window; ++d) {
      const auto r = static_cast<std::int64_t>(kh.rank(i, d));
      v.coeffs[d] += (i % 2 == 0) ? r : -r;
    }
  return v;
}

GradedModule adjoinVariable(const GradedModule& x) {
  const std::size_t n = x.vars();
  const std::size_t top = x.truncation();
  GradedModule y(x.ring(), n + 1, top);
  // offset[d][j]: first generator of the block x_{d-j} t^j inside y_d.
  std::vector<std::vector<std::size_t>> offset(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    Module m = Module::zero(x.ring());
    for (std::size_t j = 0; j <= d; ++j) {
      offset[d].push_back(m.generatorCount());
      m = directSum(m, x.component(d - j));
    }
    y.setComponent(d, std::move(m));
  }
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rows = y.component(d + 1).generatorCount();
    const std::size_t cols = y.component(d).generatorCount();
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(x.ring(), rows, cols);
      for (std::size_t j = 0; j <= d; ++j) m.setBlock(offset[d + 1][j], offset[d][j], x.map(i, d - j));
      y.setMap(i, d, m);
    }
    Matrix t(x.ring(), rows, cols);
    for (std::size_t j = 0; j <= d; ++j)
      t.setBlock(offset[d + 1][j + 1], offset[d][j],
                 Matrix::identity(x.ring(), x.component(d - j).generatorCount()));
    y.setMap(n, d, t);
  }
  y.validate();
  return y;
}

GradedModule extendByZero(const GradedModule& x) {
  const std::size_t n = x.vars();
  GradedModule y(x.ring(), n + 1, x.truncation());
  for (std::size_t d = 0; d <= x.truncation(); ++d) y.setComponent(d, x.component(d));
  for (std::size_t d = 0; d < x.truncation(); ++d) {
    for (std::size_t i = 0; i < n; ++i) y.setMap(i, d, x.map(i, d));
    y.setMap(n, d, Matrix(x.ring(), x.component(d + 1).generatorCount(), x.component(d).generatorCount()));
  }
  y.validate();
  return y;
}

OneMinusSReport verifyOneMinusS(const GradedModule& x) {
  if (!isNil(x).nil) throw NotNil("verifyOneMinusS needs a Nil object");
  const std::size_t n = x.vars();
  GradedModule y = adjoinVariable(x);
  GradedModule z = extendByZero(x);
  OneMinusSReport r;
  r.exact = true;
  for (std::size_t d = 0; d <= x.truncation() && r.exact; ++d) {
    const Module& yd = y.component(d);
    const Module& zd = z.component(d);
    // t : y_{d-1} -> y_d and the projection onto the t^0 block.
    Matrix t = d > 0 ? y.map(n, d - 1) : Matrix(x.ring(), yd.generatorCount(), 0);
    Module prev = d > 0 ? y.component(d - 1) : Module::zero(x.ring());
    Matrix proj(x.ring(), zd.generatorCount(), yd.generatorCount());
    proj.setBlock(0, 0, Matrix::identity(x.ring(), zd.generatorCount()));
    const bool ok = isInjective(t, prev, yd) && isSurjective(proj, zd) && isZeroMorphism(proj * t, zd) &&
                    sumSubmodules(imageOf(t), yd.relations()).contains(kernelLattice(proj, zd));
    if (!ok) {
      r.exact = false;
      r.failingDegree = d;
    }
  }
  r.lhs = k0Class(z);
  r.rhs = k0Class(x).timesOneMinusS();
  r.window = std::min(r.lhs.window, r.rhs.window);
  r.lhs = r.lhs.restricted(r.window);
  r.rhs = r.rhs.restricted(r.window);
  return r;
}

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpq_class signedBinomial(std::size_t n, std::size_t k) {
  mpz_class b = binomial(n, k);
  return mpq_class(k % 2 == 0 ? b : mpz_class(-b));
}

// A ⊗ I_r.
Matrix kron(const Matrix& a, std::size_t r) {
  Matrix out(a.ring(), a.rows() * r, a.cols() * r);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0)
        for (std::size_t k = 0; k < r; ++k) out.set(i * r + k, j * r + k, a(i, j));
  return out;
}

}  // namespace

Matrix oneMinusSPower(std::size_t e, std::size_t truncation, const Ring& ring) {
  if (truncation + 1 < e) throw WindowTooSmall("truncation too small for (1-s)^" + std::to_string(e));
  const std::size_t cols = truncation + 1 - e;
  Matrix m(ring, truncation + 1, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t k = 0; k <= e; ++k) m.set(c + k, c, signedBinomial(e, k));
  return m;
}

bool SplitReport::pass() const {
  return injective && cokernel.freeRank == (n + 1) * rank && cokernel.invariantFactors.empty() && retraction &&
         section && splitting;
}

SplitReport splitSequenceVerify(std::size_t rank, std::size_t n, std::size_t truncation, const Ring& ring) {
  if (truncation < 3 * (n + 1))
    throw WindowTooSmall("split check needs truncation >= " + std::to_string(3 * (n + 1)));
  SplitReport r;
  r.n = n;
  r.rank = rank;
  r.truncation = truncation;
  r.safeWindow = truncation - n - 1;
  const std::size_t e = n + 1;
  const Matrix m = kron(oneMinusSPower(e, truncation, ring), rank);
  Matrix pi0(ring, e, truncation + 1);
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = k; i <= truncation; ++i) pi0.set(k, i, signedBinomial(i, k));
  Matrix j0(ring, truncation + 1, e);
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = 0; i <= k; ++i) j0.set(i, k, signedBinomial(k, i));
  r.pi = kron(pi0, rank);
  r.j = kron(j0, rank);

  r.injective = kml::rank(m) == m.cols();
  r.cokernel = cokernel(m);
  const Matrix idCarrier = Matrix::identity(ring, m.rows());
  auto q = solve(m, idCarrier - r.j * r.pi);
  r.section = r.pi * r.j == Matrix::identity(ring, e * rank) && (r.pi * m).isZero();
  if (q) {
    r.q = *q;
    r.retraction = r.q * m == Matrix::identity(ring, m.cols());
    r.splitting = m * r.q + r.j * r.pi == idCarrier;
  }
  return r;
}

bool ProjectiveSpaceReport::pass() const {
  if (!injective || cokernel.freeRank != n + 1 || !cokernel.invariantFactors.empty()) return false;
  if (abs(basisDeterminant) != 1) return false;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!K0Vector::agree(classes[i], K0Vector::monomial(i, truncation))) return false;
  return connectingMapVanishes;
}

ProjectiveSpaceReport projectiveSpaceDecomposition(std::size_t n, std::size_t truncation) {
  if (truncation < 4 * (n + 1))
    throw WindowTooSmall("projective space check needs truncation >= " + std::to_string(4 * (n + 1)));
  const Ring z = Ring::integers();
  ProjectiveSpaceReport r;
  r.n = n;
  r.truncation = truncation;
  const Matrix t = oneMinusSPower(n + 1, truncation);
  r.injective = rank(t) == t.cols();
  r.cokernel = cokernel(t);
  Matrix basis = t;
  for (std::size_t i = 0; i <= n; ++i) {
    // One variable suffices for the class of a twisted free module, and its
    // Koszul window reaches the full truncation.
    K0Vector c = k0Class(freeGraded(Module::free(z, 1), 1, i, truncation + 1)).restricted(truncation);
    Matrix col(z, truncation + 1, 1);
    for (std::size_t d = 0; d <= truncation; ++d) col.set(d, 0, mpq_class(static_cast<long>(c[d])));
    basis = Matrix::hstack(basis, col);
    r.classes.push_back(std::move(c));
  }
  r.basisDeterminant = determinant(basis);
  // (1-s)^{n+1} is injective on classes, so the boundary map into its kernel is zero.
  r.connectingMapVanishes = r.injective;
  return r;
}

void requireExact(const SesWitness& w) {
  const std::size_t top = w.mid.truncation();
  if (w.sub.truncation() != top || w.quot.truncation() != top)
    throw NotExact("the three modules have different truncations");
  if (w.inj.size() != top + 1 || w.surj.size() != top + 1)
    throw NotExact("need one injection and one surjection matrix per degree");
  if (w.sub.vars() != w.mid.vars() || w.quot.vars() != w.mid.vars())
    throw NotExact("the three modules have different variable counts");
  for (std::size_t d = 0; d <= top; ++d) {
    const std::string at = " at degree " + std::to_string(d);
    const Module& a = w.sub.component(d);
    const Module& b = w.mid.component(d);
    const Module& c = w.quot.component(d);
    if (!isWellDefined(w.inj[d], a, b) || !isWellDefined(w.surj[d], b, c))
      throw NotExact("maps are not module maps" + at);
    if (!isInjective(w.inj[d], a, b)) throw NotExact("injection has a kernel" + at);
    if (!isSurjective(w.surj[d], c)) throw NotExact("surjection is not onto" + at);
    if (!isZeroMorphism(w.surj[d] * w.inj[d], c)) throw NotExact("composite is nonzero" + at);
    if (!sumSubmodules(imageOf(w.inj[d]), b.relations()).contains(kernelLattice(w.surj[d], c)))
      throw NotExact("kernel of the surjection exceeds the image" + at);
    if (d == top) continue;
    for (std::size_t i = 0; i < w.mid.vars(); ++i) {
      if (!morphismsEqual(w.mid.map(i, d) * w.inj[d], w.inj[d + 1] * w.sub.map(i, d), w.mid.component(d + 1)) ||
          !morphismsEqual(w.quot.map(i, d) * w.surj[d], w.surj[d + 1] * w.mid.map(i, d),
                          w.quot.component(d + 1)))
        throw NotExact("maps do not commute with t" + std::to_string(i + 1) + at);
    }
  }
}

GradedSubmodule generatedSubmodule(const GradedModule& x,
                                   const std::vector<std::pair<std::size_t, std::vector<mpq_class>>>& gens) {
  GradedSubmodule s;
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    Submodule cur = x.component(d).relations();
    std::vector<std::vector<mpq_class>> here;
    for (const auto& [deg, v] : gens)
      if (deg == d) here.push_back(v);
    if (!here.empty())
      cur = sumSubmodules(cur, Submodule::fromColumns(x.ring(), x.component(d).generatorCount(), here));
    if (d > 0)
      for (std::size_t i = 0; i < x.vars(); ++i) cur = sumSubmodules(cur, imageOf(x.map(i, d - 1), s.degrees[d - 1]));
    s.degrees.push_back(std::move(cur));
  }
  return s;
}

SesWitness sesFromSubmodules(const GradedModule& x, const GradedSubmodule& n, const GradedSubmodule& nPrime) {
  SesWitness w;
  w.mid = quotient(x, n);
  w.quot = quotient(x, nPrime);
  GradedSubmodule inMid;
  for (std::size_t d = 0; d <= x.truncation(); ++d)
    inMid.degrees.push_back(sumSubmodules(nPrime.degrees.at(d), w.mid.component(d).relations()));
  w.sub = subobject(w.mid, inMid);
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    w.inj.push_back(inMid.degrees[d].generators());
    w.surj.push_back(Matrix::identity(x.ring(), x.component(d).generatorCount()));
  }
  return w;
}

bool AdditivityReport::pass() const { return K0Vector::agree(mid, sub + quot); }

AdditivityReport checkAdditivity(const SesWitness& w) {
  requireExact(w);
  AdditivityReport r;
  r.sub = k0Class(w.sub);
  r.mid = k0Class(w.mid);
  r.quot = k0Class(w.quot);
  r.window = std::min({r.sub.window, r.mid.window, r.quot.window});
  return r;
}

GrF1Report verifyGrF1(const std::vector<Module>& parts, std::size_t vars, std::size_t truncation) {
  if (parts.empty()) throw InvalidGradedModule("verifyGrF1 needs at least one part");
  const Ring& ring = parts.front().ring();
  GrF1Report r;
  for (const auto& p : parts) r.parts.push_back(p.presentation());
  GradedModule x = functorA(parts, vars, truncation);
  r.roundTrip = functorB(x, parts.size() - 1);
  r.baIsIdentity = r.roundTrip == r.parts;

  // Compare each summand p of a(b(x)) with F_p x / F_{p-1} x degree by degree.
  r.abMatchesFiltration = true;
  GradedSubmodule prev = canonicalFiltration(x, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    GradedSubmodule cur = canonicalFiltration(x, static_cast<long>(p));
    GradedModule piece = freeGraded(moduleFromPresentation(ring, r.roundTrip[p]), vars, p, truncation);
    for (std::size_t d = 0; d <= truncation; ++d) {
      r.dimsAB.push_back(piece.rankAt(d));
      r.dimsFiltration.push_back(rankAt(x, cur, d) - rankAt(x, prev, d));
      if (r.dimsAB.back() != r.dimsFiltration.back()) r.abMatchesFiltration = false;
    }
    prev = std::move(cur);
  }
  return r;
}

}  // namespace kml
