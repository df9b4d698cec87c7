#include "kml/cube.hpp"

#include <map>

#include "kml/errors.hpp"

namespace kml {

SCube::SCube(Ring ring, std::vector<std::string> directions)
    : ring_(ring), directions_(std::move(directions)) {
  if (directions_.size() > kMaxDirections)
    throw InvalidCube("at most " + std::to_string(kMaxDirections) + " directions are supported");
  for (std::size_t i = 0; i < directions_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (directions_[i] == directions_[j]) throw InvalidCube("duplicate direction " + directions_[i]);
  const std::size_t count = std::size_t{1} << directions_.size();
  vertices_.assign(count, Module::zero(ring_));
  boundaries_.assign(count * std::max<std::size_t>(directions_.size(), 1), Matrix(ring_, 0, 0));
}

std::size_t SCube::directionIndex(const std::string& label) const {
  for (std::size_t i = 0; i < directions_.size(); ++i)
    if (directions_[i] == label) return i;
  throw UnknownDirection("no direction labelled '" + label + "'");
}

std::string SCube::subsetLabel(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    if (!hasDirection(s, i)) continue;
    if (!first) out += ',';
    out += directions_[i];
    first = false;
  }
  return out + "}";
}

void SCube::setVertex(Subset s, Module m) {
  if (s > fullSet()) throw InvalidCube("subset out of range");
  if (!(m.ring() == ring_)) throw RingMismatch("vertex ring differs from cube ring");
  vertices_[s] = std::move(m);
}

std::size_t SCube::slot(Subset s, std::size_t t) const {
  if (s > fullSet() || t >= dimension() || !hasDirection(s, t))
    throw InvalidCube("no boundary d^" + std::to_string(t) + " at subset " + std::to_string(s));
  return s * dimension() + t;
}

const Matrix& SCube::boundary(Subset s, std::size_t t) const { return boundaries_[slot(s, t)]; }

void SCube::setBoundary(Subset s, std::size_t t, const Matrix& m) {
  if (!(m.ring() == ring_)) throw RingMismatch("boundary ring differs from cube ring");
  boundaries_[slot(s, t)] = m;
}

bool SCube::isFree() const {
  for (const auto& v : vertices_)
    if (!v.isFree()) return false;
  return true;
}

CubeValidation validateCube(const SCube& c) {
  CubeValidation out;
  const std::size_t n = c.dimension();
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!hasDirection(s, t)) continue;
      const Matrix& d = c.boundary(s, t);
      const Module& src = c.vertex(s);
      const Module& dst = c.vertex(s & ~(Subset{1} << t));
      if (d.rows() != dst.generatorCount() || d.cols() != src.generatorCount()) {
        out.shapeErrors.push_back("boundary " + c.directions()[t] + " at " + c.subsetLabel(s) + " is " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                                  std::to_string(dst.generatorCount()) + "x" +
                                  std::to_string(src.generatorCount()));
        continue;
      }
      if (!isWellDefined(d, src, dst))
        out.shapeErrors.push_back("boundary " + c.directions()[t] + " at " + c.subsetLabel(s) +
                                  " does not respect relations");
    }
  }
  if (!out.shapeErrors.empty()) return out;
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!hasDirection(s, a)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!hasDirection(s, b)) continue;
        const Subset sa = s & ~(Subset{1} << a);
        const Subset sb = s & ~(Subset{1} << b);
        const Subset sab = sa & ~(Subset{1} << b);
        Matrix lhs = c.boundary(sa, b) * c.boundary(s, a);
        Matrix rhs = c.boundary(sb, a) * c.boundary(s, b);
        if (!morphismsEqual(lhs, rhs, c.vertex(sab))) out.squares.push_back({s, a, b});
      }
    }
  }
  return out;
}

void requireValidCube(const SCube& c) {
  auto v = validateCube(c);
  if (!v.shapeErrors.empty()) throw InvalidCube(v.shapeErrors.front());
  if (!v.squares.empty()) {
    const auto& sq = v.squares.front();
    throw InvalidCube("square at " + c.subsetLabel(sq.subset) + " in directions " + c.directions()[sq.s] +
                      "," + c.directions()[sq.t] + " does not commute");
  }
}

bool ChainComplex::isComplex() const {
  for (std::size_t k = 2; k < differentials.size(); ++k)
    if (!isZeroMorphism(differentials[k - 1] * differentials[k], modules[k - 2])) return false;
  return true;
}

ModulePresentation ChainComplex::homology(std::size_t k) const {
  const Module& mid = modules.at(k);
  const Ring& ring = mid.ring();
  Matrix dIn = k + 1 < modules.size() ? differentials[k + 1]
                                      : Matrix(ring, mid.generatorCount(), 0);
  Matrix dOut = k >= 1 ? differentials[k] : Matrix(ring, 0, mid.generatorCount());
  Module out = k >= 1 ? modules[k - 1] : Module::zero(ring);
  return homologyOfPresented(mid, dIn, dOut, out);
}

ChainComplex totalComplex(const SCube& c, const std::vector<std::size_t>& order, bool validate) {
  if (validate) requireValidCube(c);
  const std::size_t n = c.dimension();
  std::vector<std::size_t> pos = order;
  if (pos.empty())
    for (std::size_t i = 0; i < n; ++i) pos.push_back(i);
  if (pos.size() != n) throw InvalidCube("ordering must list every direction once");
  {
    std::vector<bool> seen(n, false);
    for (auto p : pos) {
      if (p >= n || seen[p]) throw InvalidCube("ordering is not a bijection");
      seen[p] = true;
    }
  }

  // Summands of each degree, ascending bitmask, with generator offsets.
  std::vector<std::vector<Subset>> summands(n + 1);
  for (Subset s = 0; s <= c.fullSet(); ++s) summands[subsetSize(s)].push_back(s);
  std::vector<std::map<Subset, std::size_t>> offset(n + 1);

  ChainComplex out;
  for (std::size_t k = 0; k <= n; ++k) {
    Module m = Module::zero(c.ring());
    std::size_t off = 0;
    bool free = true;
    for (Subset s : summands[k]) {
      offset[k][s] = off;
      off += c.vertex(s).generatorCount();
      free = free && c.vertex(s).isFree();
    }
    if (free) {
      m = Module::free(c.ring(), off);
    } else {
      for (Subset s : summands[k]) m = directSum(m, c.vertex(s));
    }
    out.modules.push_back(std::move(m));
  }
  out.differentials.push_back(Matrix(c.ring(), 0, out.modules[0].generatorCount()));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix d(c.ring(), out.modules[k - 1].generatorCount(), out.modules[k].generatorCount());
    for (Subset s : summands[k]) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!hasDirection(s, j)) continue;
        std::size_t later = 0;
        for (std::size_t t = 0; t < n; ++t)
          if (hasDirection(s, t) && pos[t] > pos[j]) ++later;
        const Subset target = s & ~(Subset{1} << j);
        Matrix block = c.boundary(s, j);
        if (later % 2 == 1) block = -block;
        d.setBlock(offset[k - 1][target], offset[k][s], block);
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

namespace {

// Re-index a subset of the remaining directions into the original cube.
Subset expand(Subset small, std::size_t k) {
  const Subset low = small & ((Subset{1} << k) - 1);
  const Subset high = small >> k;
  return low | (high << (k + 1));
}

}  // namespace

SCube directionalH0(const SCube& c, std::size_t k) {
  if (k >= c.dimension()) throw UnknownDirection("direction index " + std::to_string(k) + " out of range");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < c.dimension(); ++i)
    if (i != k) labels.push_back(c.directions()[i]);
  SCube out(c.ring(), labels);
  const Subset kBit = Subset{1} << k;
  for (Subset s = 0; s <= out.fullSet(); ++s) {
    const Subset big = expand(s, k);
    out.setVertex(s, cokernelModule(c.boundary(big | kBit, k), c.vertex(big)));
  }
  for (Subset s = 0; s <= out.fullSet(); ++s) {
    const Subset big = expand(s, k);
    for (std::size_t t = 0; t < out.dimension(); ++t) {
      if (!hasDirection(s, t)) continue;
      const std::size_t bt = t < k ? t : t + 1;
      const Subset target = s & ~(Subset{1} << t);
      out.setBoundary(s, t, out.vertex(target).reduceInto(c.boundary(big, bt)));
    }
  }
  return out;
}

SCube directionalH0(const SCube& c, const std::string& label) {
  return directionalH0(c, c.directionIndex(label));
}

SCube iteratedH0(const SCube& c, const std::vector<std::string>& labels) {
  SCube cur = c;
  for (const auto& l : labels) cur = directionalH0(cur, l);
  return cur;
}

bool isMonic(const SCube& c) {
  for (Subset s = 0; s <= c.fullSet(); ++s)
    for (std::size_t t = 0; t < c.dimension(); ++t) {
      if (!hasDirection(s, t)) continue;
      if (!isInjective(c.boundary(s, t), c.vertex(s), c.vertex(s & ~(Subset{1} << t)))) return false;
    }
  return true;
}

namespace {

// H_0^T(c) for every T, keyed by the original bitmask. Each cube is derived
// from the one for T minus its largest direction.
std::vector<SCube> allH0(const SCube& c) {
  std::vector<SCube> cubes(std::size_t{1} << c.dimension());
  cubes[0] = c;
  for (Subset s = 1; s <= c.fullSet(); ++s) {
    std::size_t top = 31 - static_cast<std::size_t>(__builtin_clz(s));
    const Subset rest = s & ~(Subset{1} << top);
    // Position of `top` among the directions still present in cubes[rest].
    std::size_t idx = 0;
    for (std::size_t i = 0; i < top; ++i)
      if (!hasDirection(rest, i)) ++idx;
    cubes[s] = directionalH0(cubes[rest], idx);
  }
  return cubes;
}

}  // namespace

bool isAdmissible(const SCube& c) {
  requireValidCube(c);
  if (c.dimension() == 0) return true;
  if (!isMonic(c)) return false;
  // Unrolled recursion: H_0^T(c) must be monic for every proper T.
  std::vector<SCube> cubes = allH0(c);
  for (Subset s = 1; s < c.fullSet(); ++s)
    if (!isMonic(cubes[s])) return false;
  return true;
}

SCube typicalCube(const TypicalCubeSpec& spec, const Ring& ring) {
  if (spec.n.size() != spec.f.size()) throw InvalidCube("typical cube needs one n_s per f_s");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < spec.f.size(); ++i) labels.push_back(std::to_string(i + 1));
  SCube c(ring, labels);
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < spec.f.size(); ++i) {
    if (spec.n[i] > spec.r) throw InvalidCube("n_s must not exceed r");
    std::vector<mpq_class> diag(spec.r, 1);
    for (std::size_t j = 0; j < spec.n[i]; ++j) diag[j] = mpq_class(spec.f[i]);
    maps.push_back(Matrix::diagonal(ring, diag));
  }
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    c.setFreeVertex(s, spec.r);
    for (std::size_t t = 0; t < c.dimension(); ++t)
      if (hasDirection(s, t)) c.setBoundary(s, t, maps[t]);
  }
  return c;
}

std::optional<unsigned> annihilatingExponent(const Module& m, const mpz_class& f, unsigned bound) {
  if (m.isZero()) return 1U;
  const Ring& ring = m.ring();
  if (sgn(ring.normalize(mpq_class(f))) == 0) return 1U;
  ModulePresentation p = m.presentation();
  if (p.freeRank > 0 || ring.isField()) return std::nullopt;
  const mpz_class& d = p.invariantFactors.back();
  mpz_class power = 1;
  for (unsigned e = 1; e <= bound; ++e) {
    power = (power * f) % d;
    if (sgn(power) == 0) return e;
  }
  mpz_class rest = d, g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), f.get_mpz_t());
    if (g == 1) break;
    rest /= g;
  }
  if (rest == 1)
    throw BoundExceeded("torsion of order " + d.get_str() + " needs more than " + std::to_string(bound) +
                        " powers of " + f.get_str());
  return std::nullopt;
}

bool isKoszulCube(const SCube& c, const std::vector<mpz_class>& f, unsigned bound) {
  requireValidCube(c);
  if (f.size() != c.dimension()) throw InvalidCube("need one scalar per direction");
  if (!c.isFree()) throw InvalidCube("Koszul cubes have free vertices");
  for (Subset s = 0; s <= c.fullSet(); ++s)
    for (std::size_t t = 0; t < c.dimension(); ++t) {
      if (!hasDirection(s, t)) continue;
      const Matrix& d = c.boundary(s, t);
      const Module& dst = c.vertex(s & ~(Subset{1} << t));
      if (!isInjective(d, c.vertex(s), dst)) return false;
      if (!annihilatingExponent(cokernelModule(d, dst), f[t], bound)) return false;
    }
  return true;
}

bool semidirectMembership(const SCube& c, const VertexPredicate& pred) {
  if (!isAdmissible(c)) return false;
  std::vector<SCube> cubes = allH0(c);
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    const SCube& h = cubes[s];
    for (Subset v = 0; v <= h.fullSet(); ++v)
      if (!pred(s, h.vertex(v))) return false;
  }
  return true;
}

VertexPredicate koszulVertexClass(std::vector<mpz_class> f) {
  return [f = std::move(f)](Subset s, const Module& m) {
    if (s == 0) return m.isFree();
    mpz_class g = 1;
    for (std::size_t t = 0; t < f.size(); ++t)
      if (hasDirection(s, t)) g *= f[t];
    auto e = annihilatingExponent(m, g);
    if (!e) return false;
    if (m.ring().isField() || m.isZero()) return true;
    if (sgn(g) == 0) return m.isFree();
    // Projective over Z/g^e: each cyclic summand Z/d has d | g^e, gcd(d, g^e/d) = 1.
    mpz_class ge;
    mpz_pow_ui(ge.get_mpz_t(), g.get_mpz_t(), *e);
    ge = abs(ge);
    for (const auto& d : m.presentation().invariantFactors) {
      mpz_class cof = ge / d, gg;
      mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), cof.get_mpz_t());
      if (gg != 1) return false;
    }
    return true;
  };
}

}  // namespace kml
