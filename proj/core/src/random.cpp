#include "kml/random.hpp"

#include <algorithm>

#include "kml/errors.hpp"

namespace kml {

long InstanceGenerator::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool InstanceGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Matrix InstanceGenerator::matrix(const Ring& ring, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, uniform(-bound, bound));
  return m;
}

std::vector<mpq_class> InstanceGenerator::vector(const Ring& ring, std::size_t size, long bound) {
  std::vector<mpq_class> v(size);
  for (auto& x : v) x = ring.normalize(uniform(-bound, bound));
  return v;
}

namespace {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      out.setBlock(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
    }
  return out;
}

}  // namespace

SCube InstanceGenerator::cube(std::size_t n, const Ring& ring) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  // Factor s has ranks (low, high) and a map high -> low.
  std::vector<std::size_t> low(n), high(n);
  std::vector<Matrix> f;
  for (std::size_t s = 0; s < n; ++s) {
    low[s] = static_cast<std::size_t>(uniform(1, n <= 2 ? 3 : 2));
    high[s] = static_cast<std::size_t>(uniform(1, n <= 2 ? 3 : 2));
    f.push_back(matrix(ring, low[s], high[s], 3));
  }
  SCube c(ring, labels);
  auto factor = [&](std::size_t s, Subset t) { return hasDirection(t, s) ? high[s] : low[s]; };
  for (Subset t = 0; t <= c.fullSet(); ++t) {
    std::size_t r = 1;
    for (std::size_t s = 0; s < n; ++s) r *= factor(s, t);
    c.setFreeVertex(t, r);
  }
  for (Subset t = 0; t <= c.fullSet(); ++t)
    for (std::size_t j = 0; j < n; ++j) {
      if (!hasDirection(t, j)) continue;
      Matrix m = Matrix::identity(ring, 1);
      for (std::size_t s = 0; s < n; ++s)
        m = kronecker(m, s == j ? f[s] : Matrix::identity(ring, factor(s, t)));
      c.setBoundary(t, j, m);
    }
  return c;
}

TypicalCubeSpec InstanceGenerator::typicalSpec(std::size_t n) {
  TypicalCubeSpec spec;
  spec.r = static_cast<std::size_t>(uniform(1, 3));
  for (std::size_t i = 0; i < n; ++i) {
    long f = uniform(-6, 6);
    spec.f.emplace_back(f == 0 ? 2 : f);
    spec.n.push_back(static_cast<std::size_t>(uniform(0, static_cast<long>(spec.r))));
  }
  return spec;
}

std::vector<Module> InstanceGenerator::parts(const Ring& ring, std::size_t count, std::size_t maxRank) {
  std::vector<Module> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Module::free(ring, static_cast<std::size_t>(uniform(0, static_cast<long>(maxRank)))));
  return out;
}

GradedModule compactZeroComponents(const GradedModule& x) {
  GradedModule y(x.ring(), x.vars(), x.truncation());
  std::vector<bool> zero(x.truncation() + 1);
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    zero[d] = x.component(d).isZero();
    if (!zero[d]) y.setComponent(d, x.component(d));
  }
  for (std::size_t i = 0; i < x.vars(); ++i)
    for (std::size_t d = 0; d < x.truncation(); ++d) {
      if (!zero[d] && !zero[d + 1])
        y.setMap(i, d, x.map(i, d));
      else
        y.setMap(i, d, Matrix(x.ring(), y.component(d + 1).generatorCount(), y.component(d).generatorCount()));
    }
  y.validate();
  return y;
}

GradedModule InstanceGenerator::nilModule(const Ring& ring, std::size_t vars, std::size_t bound,
                                          std::size_t truncation) {
  std::vector<Module> ps = parts(ring, std::min<std::size_t>(bound, 3), 2);
  if (ps.empty()) return GradedModule(ring, vars, truncation);
  GradedModule f = functorA(ps, vars, truncation);
  std::vector<std::pair<std::size_t, std::vector<mpq_class>>> gens;
  const auto extra = uniform(0, 2);
  for (long g = 0; g < extra && bound > 0; ++g) {
    const auto d = static_cast<std::size_t>(uniform(0, static_cast<long>(bound) - 1));
    if (f.component(d).generatorCount() == 0) continue;
    gens.emplace_back(d, vector(ring, f.component(d).generatorCount(), 2));
  }
  GradedSubmodule n = generatedSubmodule(f, gens);
  for (std::size_t d = bound; d <= truncation; ++d)
    n.degrees[d] = Submodule::full(ring, f.component(d).generatorCount());
  return compactZeroComponents(quotient(f, n));
}

SesWitness InstanceGenerator::ses(const Ring& ring, std::size_t vars, std::size_t truncation) {
  std::vector<Module> ps = parts(ring, 3, 2);
  if (std::all_of(ps.begin(), ps.end(), [](const Module& m) { return m.generatorCount() == 0; }))
    ps[0] = Module::free(ring, 1);
  GradedModule f = functorA(ps, vars, truncation);
  auto randomGens = [&](long count) {
    std::vector<std::pair<std::size_t, std::vector<mpq_class>>> gens;
    for (long g = 0; g < count; ++g) {
      const auto d = static_cast<std::size_t>(uniform(0, static_cast<long>(truncation)));
      if (f.component(d).generatorCount() == 0) continue;
      gens.emplace_back(d, vector(ring, f.component(d).generatorCount(), 2));
    }
    return gens;
  };
  auto small = randomGens(uniform(0, 2));
  auto big = small;
  for (auto& g : randomGens(uniform(0, 2))) big.push_back(std::move(g));
  return sesFromSubmodules(f, generatedSubmodule(f, small), generatedSubmodule(f, big));
}

AffineObject InstanceGenerator::affine(std::size_t maxRank, std::size_t maxEndos) {
  const Ring z = Ring::integers();
  const auto rank = static_cast<std::size_t>(uniform(1, static_cast<long>(maxRank)));
  const auto count = static_cast<std::size_t>(uniform(1, static_cast<long>(maxEndos)));
  Matrix base = matrix(z, rank, rank, 2);
  std::vector<Matrix> endos;
  for (std::size_t i = 0; i < count; ++i) {
    // a + b*M + c*M^2
    Matrix e = Matrix::scalar(z, rank, uniform(-2, 2)) + base.scaled(uniform(-1, 2));
    if (coin(0.3)) e = e + (base * base).scaled(uniform(-1, 1));
    endos.push_back(i == 0 ? base : e);
  }
  return AffineObject::free(z, rank, std::move(endos));
}

AffineObject InstanceGenerator::nilpotentAffine(const Ring& ring, std::size_t maxRank, std::size_t maxEndos) {
  const auto count = static_cast<std::size_t>(uniform(1, static_cast<long>(maxEndos)));
  if (ring.kind() == RingKind::Integer && coin(0.25)) {
    // Z/p^a with multiplication by p.
    const long p = coin() ? 2 : 3;
    const long a = uniform(1, 3);
    long order = 1;
    for (long i = 0; i < a; ++i) order *= p;
    Module m = Module::quotient(Matrix::fromRows(ring, {{order}}));
    std::vector<Matrix> endos;
    for (std::size_t i = 0; i < count; ++i) endos.push_back(Matrix::fromRows(ring, {{p * uniform(0, 1)}}));
    return AffineObject(std::move(m), std::move(endos));
  }
  const auto rank = static_cast<std::size_t>(uniform(1, static_cast<long>(maxRank)));
  Matrix nil(ring, rank, rank);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = r + 1; c < rank; ++c) nil.set(r, c, uniform(-2, 2));
  std::vector<Matrix> endos{nil};
  for (std::size_t i = 1; i < count; ++i) endos.push_back(nil.scaled(uniform(-1, 1)) + (nil * nil).scaled(uniform(-1, 1)));
  return AffineObject::free(ring, rank, std::move(endos));
}

Submodule InstanceGenerator::stableSubmodule(const AffineObject& x, std::size_t gens) {
  std::vector<std::vector<mpq_class>> cols;
  for (std::size_t i = 0; i < gens; ++i) cols.push_back(vector(x.ring(), x.generatorCount(), 3));
  Submodule y = Submodule::fromColumns(x.ring(), x.generatorCount(), cols);
  for (;;) {
    Submodule next = sumSubmodules(y, ffImage(x, {}, y));
    if (next == y) return y;
    y = std::move(next);
  }
}

FFiltration InstanceGenerator::filtration(const AffineObject& x, std::size_t depth) {
  FFiltration fil{x, {}, {}};
  const Submodule& rel = x.module().relations();
  Submodule cur = Submodule::full(x.ring(), x.generatorCount());
  const auto settle = static_cast<std::size_t>(uniform(0, static_cast<long>(depth)));
  for (std::size_t n = 0; n <= depth; ++n) {
    fil.steps.push_back(cur);
    Submodule next = sumSubmodules(ffImage(x, {}, cur), rel);
    if (n < settle) {
      if (coin(0.3)) {
        next = cur;
      } else if (!cur.isZero()) {
        Matrix combo = cur.generators() * matrix(x.ring(), cur.rank(), 1, 2);
        next = sumSubmodules(next, imageOf(combo));
      }
    }
    cur = std::move(next);
  }
  return fil;
}

LaurentPolynomial InstanceGenerator::laurent(std::size_t vars, std::size_t terms) {
  LaurentPolynomial f(vars);
  for (std::size_t t = 0; t < terms; ++t) {
    LaurentPolynomial::Exponent e(vars);
    for (auto& x : e) x = static_cast<int>(uniform(-3, 3));
    f.addTerm(e, uniform(-5, 5));
  }
  return f;
}

}  // namespace kml
