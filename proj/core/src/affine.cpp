#include "kml/affine.hpp"

#include "kml/errors.hpp"

namespace kml {

AffineObject::AffineObject(Module module, std::vector<Matrix> endos) : module_(std::move(module)) {
  const std::size_t g = module_.generatorCount();
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const Matrix& e = endos[i];
    if (!(e.ring() == module_.ring()))
      throw InvalidAffineObject("endomorphism " + std::to_string(i) + " is over the wrong ring");
    if (e.rows() != g || e.cols() != g)
      throw InvalidAffineObject("endomorphism " + std::to_string(i) + " is not " + std::to_string(g) + "x" +
                                std::to_string(g));
    if (!isWellDefined(e, module_, module_))
      throw InvalidAffineObject("endomorphism " + std::to_string(i) + " does not preserve relations");
    endos_.push_back(module_.reduceInto(e));
  }
  for (std::size_t i = 0; i < endos_.size(); ++i)
    for (std::size_t j = i + 1; j < endos_.size(); ++j)
      if (!morphismsEqual(endos_[i] * endos_[j], endos_[j] * endos_[i], module_))
        throw InvalidAffineObject("endomorphisms " + std::to_string(i) + " and " + std::to_string(j) +
                                  " do not commute");
}

AffineObject AffineObject::free(const Ring& ring, std::size_t dim, std::vector<Matrix> endos) {
  return AffineObject(Module::free(ring, dim), std::move(endos));
}

bool operator==(const AffineObject& a, const AffineObject& b) {
  return a.module_ == b.module_ && a.endos_ == b.endos_;
}

namespace {

EndoSet resolve(const AffineObject& x, const EndoSet& f) {
  if (f.empty()) {
    EndoSet all(x.endoCount());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  for (auto i : f)
    if (i >= x.endoCount()) throw InvalidAffineObject("no endomorphism with index " + std::to_string(i));
  return f;
}

}  // namespace

Submodule ffImage(const AffineObject& x, const EndoSet& f, const Submodule& s) {
  Submodule out = Submodule::zero(x.ring(), x.generatorCount());
  for (auto i : resolve(x, f)) out = sumSubmodules(out, imageOf(x.endos()[i], s));
  return out;
}

Submodule ffSub(const AffineObject& x, const EndoSet& f) {
  Submodule all = Submodule::full(x.ring(), x.generatorCount());
  return sumSubmodules(ffImage(x, f, all), x.module().relations());
}

AffineObject reduceModFf(const AffineObject& x, const EndoSet& f) {
  Module q(ffSub(x, f));
  std::vector<Matrix> endos;
  for (const auto& e : x.endos()) endos.push_back(q.reduceInto(e));
  return AffineObject(std::move(q), std::move(endos));
}

NilIndex nilIndex(const AffineObject& x, const EndoSet& f) {
  const Submodule& rel = x.module().relations();
  ModulePresentation p = x.module().presentation();
  // A strictly decreasing chain of lattices between Z^g and the relations
  // drops the rational rank or at least halves the torsion at each step.
  std::size_t bound = p.freeRank;
  for (const auto& d : p.invariantFactors) bound += mpz_sizeinbase(d.get_mpz_t(), 2);
  Submodule y = Submodule::full(x.ring(), x.generatorCount());
  for (std::size_t n = 0; n <= bound + 1; ++n) {
    if (rel.contains(y)) return {true, n};
    Submodule next = sumSubmodules(ffImage(x, f, y), rel);
    if (next == y) return {false, 0};
    y = std::move(next);
  }
  return {false, 0};
}

void validateFiltration(const FFiltration& fil) {
  const AffineObject& x = fil.parent;
  const Submodule& rel = x.module().relations();
  for (std::size_t n = 0; n < fil.steps.size(); ++n) {
    const Submodule& s = fil.steps[n];
    if (s.ambientRank() != x.generatorCount())
      throw InvalidFiltration("step " + std::to_string(n) + " lives in the wrong ambient module");
    if (!s.contains(rel)) throw InvalidFiltration("step " + std::to_string(n) + " does not contain the relations");
    if (n + 1 < fil.steps.size()) {
      const Submodule& t = fil.steps[n + 1];
      if (!s.contains(t)) throw InvalidFiltration("step " + std::to_string(n + 1) + " is not inside step " +
                                                  std::to_string(n));
      if (!t.contains(ffImage(x, fil.f, s)))
        throw InvalidFiltration("ff x_" + std::to_string(n) + " is not inside x_" + std::to_string(n + 1));
    }
  }
}

FFiltration adicFiltration(const AffineObject& x, const EndoSet& f, std::size_t depth) {
  FFiltration fil{x, f, {}};
  const Submodule& rel = x.module().relations();
  Submodule cur = Submodule::full(x.ring(), x.generatorCount());
  for (std::size_t n = 0; n <= depth; ++n) {
    fil.steps.push_back(cur);
    cur = sumSubmodules(ffImage(x, f, cur), rel);
  }
  return fil;
}

StabilityReport stabilityIndex(const FFiltration& fil) {
  validateFiltration(fil);
  const AffineObject& x = fil.parent;
  const Submodule& rel = x.module().relations();
  const auto& xs = fil.steps;
  StabilityReport r;
  if (xs.empty()) return r;
  const std::size_t d = xs.size() - 1;
  r.window = d;

  // (i): ff x_n = x_{n+1}, scanned from the top.
  std::size_t n0 = d;
  while (n0 > 0 && sumSubmodules(ffImage(x, fil.f, xs[n0 - 1]), rel) == xs[n0]) --n0;
  if (n0 < d) r.stableFrom = n0;

  // (ii): generation of the truncated blow-up in degrees <= m. pieces[k] holds
  // ff^{n-k} x_k for the current n, starting from n = m.
  for (std::size_t m = 0; m < d && !r.generatedFrom; ++m) {
    std::vector<Submodule> pieces;
    for (std::size_t k = 0; k <= m; ++k) {
      Submodule p = xs[k];
      for (std::size_t e = k; e < m; ++e) p = ffImage(x, fil.f, p);
      pieces.push_back(std::move(p));
    }
    bool ok = true;
    for (std::size_t n = m + 1; n <= d && ok; ++n) {
      Submodule span = rel;
      for (auto& p : pieces) {
        p = ffImage(x, fil.f, p);
        span = sumSubmodules(span, p);
      }
      ok = span == xs[n];
    }
    if (ok) r.generatedFrom = m;
  }
  r.crossCheck = r.stableFrom == r.generatedFrom;
  return r;
}

ArtinReesReport artinReesIndex(const AffineObject& x, const Submodule& y, const EndoSet& f,
                               std::size_t window) {
  if (y.ambientRank() != x.generatorCount())
    throw AmbientMismatch("submodule ambient rank " + std::to_string(y.ambientRank()) + " differs from " +
                          std::to_string(x.generatorCount()));
  const Submodule& rel = x.module().relations();
  const Submodule yr = sumSubmodules(y, rel);
  // I_n = ff^n x ∩ y.
  std::vector<Submodule> inter;
  Submodule power = Submodule::full(x.ring(), x.generatorCount());
  for (std::size_t n = 0; n <= window; ++n) {
    inter.push_back(intersectSubmodules(power, yr));
    power = sumSubmodules(ffImage(x, f, power), rel);
  }
  ArtinReesReport r;
  r.window = window;
  for (std::size_t n0 = 0; n0 < window; ++n0) {
    Submodule cur = inter[n0];
    bool ok = true;
    for (std::size_t n = n0 + 1; n <= window && ok; ++n) {
      cur = sumSubmodules(ffImage(x, f, cur), rel);
      ok = cur == inter[n];
    }
    if (ok) {
      r.n0 = n0;
      break;
    }
  }
  return r;
}

std::vector<Submodule> devissageFiltration(const AffineObject& x, const EndoSet& f) {
  NilIndex ni = nilIndex(x, f);
  if (!ni.nilpotent) throw NotNilpotent("the chosen endomorphisms are not nilpotent");
  if (x.module().isZero()) return {};
  return adicFiltration(x, f, ni.index).steps;
}

DevissageReport verifyDevissage(const AffineObject& x, const EndoSet& f) {
  DevissageReport r;
  r.nilIndex = nilIndex(x, f).index;
  r.steps = devissageFiltration(x, f);
  const Submodule& rel = x.module().relations();
  r.endpoints = r.steps.empty() ? x.module().isZero()
                                : r.steps.front().isFull() && r.steps.back() == rel;
  r.decreasing = true;
  r.annihilated = true;
  for (std::size_t k = 0; k + 1 < r.steps.size(); ++k) {
    const bool dec = r.steps[k].contains(r.steps[k + 1]) && r.steps[k + 1].contains(rel);
    const bool ann = r.steps[k + 1].contains(ffImage(x, f, r.steps[k]));
    if ((!dec || !ann) && !r.failingStep) r.failingStep = k;
    r.decreasing = r.decreasing && dec;
    r.annihilated = r.annihilated && ann;
  }
  return r;
}

}  // namespace kml
