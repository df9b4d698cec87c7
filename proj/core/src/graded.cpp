#include "kml/graded.hpp"

#include <map>

#include "kml/errors.hpp"

namespace kml {

GradedModule::GradedModule(Ring ring, std::size_t vars, std::size_t truncation)
    : ring_(ring),
      vars_(vars),
      components_(truncation + 1, Module::zero(ring)),
      maps_(vars, std::vector<Matrix>(truncation, Matrix(ring, 0, 0))) {}

void GradedModule::setComponent(std::size_t d, Module m) {
  if (d >= components_.size()) throw InvalidGradedModule("degree " + std::to_string(d) + " beyond truncation");
  if (!(m.ring() == ring_)) throw RingMismatch("component ring differs from module ring");
  components_[d] = std::move(m);
}

void GradedModule::setMap(std::size_t i, std::size_t d, const Matrix& m) {
  if (i >= vars_) throw InvalidGradedModule("no variable t" + std::to_string(i + 1));
  if (d + 1 >= components_.size())
    throw InvalidGradedModule("map t" + std::to_string(i + 1) + " at degree " + std::to_string(d) +
                              " leaves the truncation");
  if (!(m.ring() == ring_)) throw RingMismatch("map ring differs from module ring");
  maps_[i][d] = m;
}

void GradedModule::validate() {
  const std::size_t top = truncation();
  for (std::size_t i = 0; i < vars_; ++i)
    for (std::size_t d = 0; d < top; ++d) {
      const Matrix& m = maps_[i][d];
      const std::string where = "t" + std::to_string(i + 1) + " at degree " + std::to_string(d);
      if (m.rows() != components_[d + 1].generatorCount() || m.cols() != components_[d].generatorCount())
        throw InvalidGradedModule(where + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(components_[d + 1].generatorCount()) + "x" +
                                  std::to_string(components_[d].generatorCount()));
      if (!isWellDefined(m, components_[d], components_[d + 1]))
        throw InvalidGradedModule(where + " does not respect relations");
      maps_[i][d] = components_[d + 1].reduceInto(m);
    }
  for (std::size_t i = 0; i < vars_; ++i)
    for (std::size_t j = i + 1; j < vars_; ++j)
      for (std::size_t d = 0; d + 2 <= top; ++d)
        if (!morphismsEqual(maps_[j][d + 1] * maps_[i][d], maps_[i][d + 1] * maps_[j][d], components_[d + 2]))
          throw InvalidGradedModule("t" + std::to_string(i + 1) + " and t" + std::to_string(j + 1) +
                                    " do not commute at degree " + std::to_string(d));
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  return a.ring_ == b.ring_ && a.vars_ == b.vars_ && a.components_ == b.components_ && a.maps_ == b.maps_;
}

std::vector<std::vector<std::size_t>> monomials(std::size_t vars, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  for (std::size_t first = 0; first <= degree; ++first)
    for (auto& rest : monomials(vars - 1, degree - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

namespace {

Module power(const Module& m, std::size_t copies) {
  if (m.isFree()) return Module::free(m.ring(), m.generatorCount() * copies);
  Module out = Module::zero(m.ring());
  for (std::size_t i = 0; i < copies; ++i) out = directSum(out, m);
  return out;
}

void checkVar(const GradedModule& x, std::size_t i) {
  if (i >= x.vars()) throw InvalidGradedModule("no variable t" + std::to_string(i + 1));
}

}  // namespace

GradedModule freeGraded(const Module& x0, std::size_t vars, std::size_t k, std::size_t truncation) {
  GradedModule x(x0.ring(), vars, truncation);
  const std::size_t g = x0.generatorCount();
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(truncation + 1);
  for (std::size_t d = k; d <= truncation; ++d) {
    auto mons = monomials(vars, d - k);
    for (std::size_t a = 0; a < mons.size(); ++a) index[d][mons[a]] = a;
    x.setComponent(d, power(x0, mons.size()));
  }
  const Matrix id = Matrix::identity(x0.ring(), g);
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t d = 0; d < truncation; ++d) {
      Matrix m(x0.ring(), x.component(d + 1).generatorCount(), x.component(d).generatorCount());
      for (const auto& [mon, a] : index[d]) {
        auto up = mon;
        ++up[i];
        m.setBlock(index[d + 1].at(up) * g, a * g, id);
      }
      x.setMap(i, d, m);
    }
  x.validate();
  return x;
}

GradedModule directSum(const GradedModule& a, const GradedModule& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("directSum: rings differ");
  if (a.vars() != b.vars()) throw InvalidGradedModule("directSum: variable counts differ");
  const std::size_t top = std::min(a.truncation(), b.truncation());
  GradedModule x(a.ring(), a.vars(), top);
  for (std::size_t d = 0; d <= top; ++d) x.setComponent(d, directSum(a.component(d), b.component(d)));
  for (std::size_t i = 0; i < a.vars(); ++i)
    for (std::size_t d = 0; d < top; ++d) x.setMap(i, d, Matrix::directSum(a.map(i, d), b.map(i, d)));
  x.validate();
  return x;
}

GradedModule twist(const GradedModule& x, long k) {
  const std::size_t top = x.truncation();
  if (k >= 0) {
    const auto shift = static_cast<std::size_t>(k);
    if (shift > top)
      throw WindowTooSmall("twist by " + std::to_string(k) + " exceeds truncation " + std::to_string(top));
    GradedModule y(x.ring(), x.vars(), top - shift);
    for (std::size_t d = 0; d + shift <= top; ++d) y.setComponent(d, x.component(d + shift));
    for (std::size_t i = 0; i < x.vars(); ++i)
      for (std::size_t d = 0; d + shift < top; ++d) y.setMap(i, d, x.map(i, d + shift));
    y.validate();
    return y;
  }
  const auto shift = static_cast<std::size_t>(-k);
  GradedModule y(x.ring(), x.vars(), top);
  for (std::size_t d = shift; d <= top; ++d) y.setComponent(d, x.component(d - shift));
  for (std::size_t i = 0; i < x.vars(); ++i)
    for (std::size_t d = 0; d < top; ++d) {
      if (d >= shift)
        y.setMap(i, d, x.map(i, d - shift));
      else
        y.setMap(i, d, Matrix(x.ring(), y.component(d + 1).generatorCount(), 0));
    }
  y.validate();
  return y;
}

GradedSubmodule fullSubmodule(const GradedModule& x) {
  GradedSubmodule s;
  for (std::size_t d = 0; d <= x.truncation(); ++d)
    s.degrees.push_back(Submodule::full(x.ring(), x.component(d).generatorCount()));
  return s;
}

GradedSubmodule zeroSubmodule(const GradedModule& x) {
  GradedSubmodule s;
  for (std::size_t d = 0; d <= x.truncation(); ++d) s.degrees.push_back(x.component(d).relations());
  return s;
}

GradedModule subobject(const GradedModule& x, const GradedSubmodule& s) {
  GradedModule y(x.ring(), x.vars(), x.truncation());
  for (std::size_t d = 0; d <= x.truncation(); ++d)
    y.setComponent(d, subquotientModule(s.degrees.at(d), x.component(d)));
  for (std::size_t i = 0; i < x.vars(); ++i)
    for (std::size_t d = 0; d < x.truncation(); ++d)
      y.setMap(i, d, s.degrees[d + 1].coordinatesOfColumns(x.map(i, d) * s.degrees[d].generators()));
  y.validate();
  return y;
}

GradedModule quotient(const GradedModule& x, const GradedSubmodule& s) {
  GradedModule y(x.ring(), x.vars(), x.truncation());
  for (std::size_t d = 0; d <= x.truncation(); ++d)
    y.setComponent(d, Module(sumSubmodules(s.degrees.at(d), x.component(d).relations())));
  for (std::size_t i = 0; i < x.vars(); ++i)
    for (std::size_t d = 0; d < x.truncation(); ++d) y.setMap(i, d, x.map(i, d));
  y.validate();
  return y;
}

std::size_t rankAt(const GradedModule& x, const GradedSubmodule& s, std::size_t d) {
  const Submodule& rel = x.component(d).relations();
  return sumSubmodules(s.degrees.at(d), rel).rank() - rel.rank();
}

GradedSubmodule canonicalFiltration(const GradedModule& x, long m) {
  GradedSubmodule s;
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    const Module& c = x.component(d);
    if (m >= 0 && d <= static_cast<std::size_t>(m)) {
      s.degrees.push_back(Submodule::full(x.ring(), c.generatorCount()));
      continue;
    }
    Submodule cur = c.relations();
    if (d > 0)
      for (std::size_t i = 0; i < x.vars(); ++i) cur = sumSubmodules(cur, imageOf(x.map(i, d - 1), s.degrees[d - 1]));
    s.degrees.push_back(std::move(cur));
  }
  return s;
}

std::optional<std::size_t> degreeOfGeneration(const GradedModule& x) {
  // F_m x = x iff every degree above m is generated from the one below.
  std::optional<std::size_t> last;
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    const Module& c = x.component(d);
    if (c.isZero()) continue;
    Submodule hit = c.relations();
    if (d > 0)
      for (std::size_t i = 0; i < x.vars(); ++i) hit = sumSubmodules(hit, imageOf(x.map(i, d - 1)));
    if (!hit.isFull()) last = d;
  }
  if (!last) return 0;
  if (*last == x.truncation()) return std::nullopt;
  return last;
}

NilStatus isNil(const GradedModule& x) {
  std::size_t b = x.truncation() + 1;
  while (b > 0 && x.component(b - 1).isZero()) --b;
  if (b > x.truncation()) return {false, 0};
  return {true, b};
}

GradedSubmodule ffSub(const GradedModule& x, const std::vector<std::size_t>& vars) {
  for (auto i : vars) checkVar(x, i);
  GradedSubmodule s;
  for (std::size_t d = 0; d <= x.truncation(); ++d) {
    Submodule cur = x.component(d).relations();
    if (d > 0)
      for (auto i : vars) cur = sumSubmodules(cur, imageOf(x.map(i, d - 1)));
    s.degrees.push_back(std::move(cur));
  }
  return s;
}

GradedModule quotientByVars(const GradedModule& x, const std::vector<std::size_t>& vars) {
  return quotient(x, ffSub(x, vars));
}

SCube koszulSlice(const GradedModule& x, std::size_t d) {
  if (d > x.truncation()) throw WindowTooSmall("slice degree beyond truncation");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.vars(); ++i) labels.push_back("t" + std::to_string(i + 1));
  SCube c(x.ring(), labels);
  auto degreeOf = [&](Subset s) -> long { return static_cast<long>(d) - static_cast<long>(subsetSize(s)); };
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    const long e = degreeOf(s);
    if (e >= 0) c.setVertex(s, x.component(static_cast<std::size_t>(e)));
  }
  for (Subset s = 0; s <= c.fullSet(); ++s) {
    const long e = degreeOf(s);
    for (std::size_t j = 0; j < x.vars(); ++j) {
      if (!hasDirection(s, j)) continue;
      if (e >= 0)
        c.setBoundary(s, j, x.map(j, static_cast<std::size_t>(e)));
      else
        c.setBoundary(s, j, Matrix(x.ring(), c.vertex(s & ~(Subset{1} << j)).generatorCount(), 0));
    }
  }
  return c;
}

bool KoszulHomology::vanishes(std::size_t i) const {
  for (const auto& p : t.at(i))
    if (!p.isZero()) return false;
  return true;
}

KoszulHomology koszulHomology(const GradedModule& x) {
  const std::size_t n = x.vars();
  if (x.truncation() < n)
    throw WindowTooSmall("Koszul homology in " + std::to_string(n) + " variables needs truncation >= " +
                         std::to_string(n) + ", got " + std::to_string(x.truncation()));
  KoszulHomology kh;
  kh.window = x.truncation() - n;
  kh.t.assign(n + 1, {});
  for (std::size_t d = 0; d <= kh.window; ++d) {
    // Commutation was checked when x was validated.
    ChainComplex tot = totalComplex(koszulSlice(x, d), {}, false);
    for (std::size_t i = 0; i <= n; ++i) kh.t[i].push_back(tot.homology(i));
  }
  return kh;
}

bool isTRegular(const GradedModule& x) {
  KoszulHomology kh = koszulHomology(x);
  for (std::size_t i = 1; i < kh.t.size(); ++i)
    if (!kh.vanishes(i)) return false;
  return true;
}

GradedModule functorA(const std::vector<Module>& parts, std::size_t vars, std::size_t truncation) {
  if (parts.empty()) throw InvalidGradedModule("functorA needs at least one part");
  GradedModule out = GradedModule(parts.front().ring(), vars, truncation);
  for (std::size_t k = 0; k < parts.size() && k <= truncation; ++k)
    out = directSum(out, freeGraded(parts[k], vars, k, truncation));
  return out;
}

std::vector<ModulePresentation> functorB(const GradedModule& x, std::size_t m) {
  KoszulHomology kh = koszulHomology(x);
  for (std::size_t i = 1; i < kh.t.size(); ++i)
    if (!kh.vanishes(i)) throw NotTRegular("T_" + std::to_string(i) + " is nonzero on the window");
  if (m > kh.window)
    throw WindowTooSmall("slot " + std::to_string(m) + " is beyond the Koszul window " + std::to_string(kh.window));
  return {kh.t[0].begin(), kh.t[0].begin() + static_cast<std::ptrdiff_t>(m + 1)};
}

SpecialFilteringWitness nilSpecialFilteringWitness(const GradedModule& y, const GradedSubmodule& x) {
  const std::size_t top = y.truncation();
  if (x.degrees.size() != top + 1) throw InvalidGradedModule("subobject has the wrong number of degrees");
  std::size_t k = top + 1;
  while (k > 0 && y.component(k - 1).relations().contains(x.degrees[k - 1])) --k;
  if (k > top) throw NotNil("subobject is nonzero at the truncation degree");
  SpecialFilteringWitness w;
  w.nilBound = k;
  w.z = GradedModule(y.ring(), y.vars(), top);
  for (std::size_t d = 0; d <= top; ++d) {
    const std::size_t g = y.component(d).generatorCount();
    if (d < k) {
      w.z.setComponent(d, y.component(d));
      w.projection.push_back(Matrix::identity(y.ring(), g));
    } else {
      w.projection.push_back(Matrix(y.ring(), 0, g));
    }
  }
  for (std::size_t i = 0; i < y.vars(); ++i)
    for (std::size_t d = 0; d < top; ++d)
      w.z.setMap(i, d, d + 1 < k ? y.map(i, d) : Matrix(y.ring(), 0, w.z.component(d).generatorCount()));
  w.z.validate();
  return w;
}

bool compositeIsInjective(const GradedModule& y, const GradedSubmodule& x, const SpecialFilteringWitness& w) {
  for (std::size_t d = 0; d <= y.truncation(); ++d) {
    Submodule killed = preimageOf(w.projection.at(d), w.z.component(d).relations());
    if (!y.component(d).relations().contains(intersectSubmodules(x.degrees.at(d), killed))) return false;
  }
  return true;
}

AffineObject forgetGrading(const GradedModule& x) {
  NilStatus st = isNil(x);
  if (!st.nil) throw NotNil("the module is nonzero at its truncation degree");
  Module m = Module::zero(x.ring());
  std::vector<std::size_t> offset;
  for (std::size_t d = 0; d < st.bound; ++d) {
    offset.push_back(m.generatorCount());
    m = directSum(m, x.component(d));
  }
  std::vector<Matrix> endos;
  for (std::size_t i = 0; i < x.vars(); ++i) {
    Matrix e(x.ring(), m.generatorCount(), m.generatorCount());
    for (std::size_t d = 0; d + 1 < st.bound; ++d) e.setBlock(offset[d + 1], offset[d], x.map(i, d));
    endos.push_back(std::move(e));
  }
  return AffineObject(std::move(m), std::move(endos));
}

}  // namespace kml
