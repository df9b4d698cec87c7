#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kml/affine.hpp"
#include "kml/cube.hpp"
#include "kml/linalg.hpp"
#include "kml/module.hpp"

namespace kml {

/// Graded F1[t_1..t_n]-module truncated at degree D: components x_0..x_D and
/// maps t_i[d] : x_d -> x_{d+1} for d < D. Components are exact through D.
class GradedModule {
 public:
  GradedModule() = default;
  /// All components zero.
  GradedModule(Ring ring, std::size_t vars, std::size_t truncation);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t vars() const noexcept { return vars_; }
  std::size_t truncation() const noexcept { return components_.size() - 1; }

  const Module& component(std::size_t d) const { return components_.at(d); }
  /// Zero module past the truncation is never implied; throws out of range.
  const Matrix& map(std::size_t i, std::size_t d) const { return maps_.at(i).at(d); }
  std::size_t rankAt(std::size_t d) const { return component(d).rank(); }

  void setComponent(std::size_t d, Module m);
  void setMap(std::size_t i, std::size_t d, const Matrix& m);
  /// Checks shapes, relations and t_i t_j = t_j t_i; stores maps reduced.
  /// Throws InvalidGradedModule.
  void validate();

  friend bool operator==(const GradedModule& a, const GradedModule& b);

 private:
  Ring ring_ = Ring::integers();
  std::size_t vars_ = 0;
  std::vector<Module> components_{Module()};
  std::vector<std::vector<Matrix>> maps_;
};

/// Exponent vectors of total degree `degree` in `vars` variables, ascending
/// lexicographic order.
std::vector<std::vector<std::size_t>> monomials(std::size_t vars, std::size_t degree);

/// x0[t_1..t_n](-k) truncated at D. Generators of degree d are the copies
/// x0 * m for monomials m of degree d - k in the order of `monomials`.
GradedModule freeGraded(const Module& x0, std::size_t vars, std::size_t k, std::size_t truncation);
GradedModule directSum(const GradedModule& a, const GradedModule& b);

/// x(k)_m = x_{m+k}. For k > 0 the truncation drops to D - k (WindowTooSmall
/// if negative); for k < 0 the top components are dropped and D is kept.
GradedModule twist(const GradedModule& x, long k);

/// Per-degree generator lattices, each containing the component relations and
/// carried into the next degree by every t_i.
struct GradedSubmodule {
  std::vector<Submodule> degrees;
};

GradedSubmodule fullSubmodule(const GradedModule& x);
GradedSubmodule zeroSubmodule(const GradedModule& x);
/// The subobject as a graded module on the canonical lattice bases.
GradedModule subobject(const GradedModule& x, const GradedSubmodule& s);
GradedModule quotient(const GradedModule& x, const GradedSubmodule& s);
/// Rank of (S_d + R_d) / R_d.
std::size_t rankAt(const GradedModule& x, const GradedSubmodule& s, std::size_t d);

/// (F_m x)_d = x_d for d <= m, sum_i t_i (F_m x)_{d-1} above.
GradedSubmodule canonicalFiltration(const GradedModule& x, long m);
/// Smallest m with F_m x = x. The zero module has degree 0; nullopt when the
/// smallest such m is the truncation itself, which the window cannot witness.
std::optional<std::size_t> degreeOfGeneration(const GradedModule& x);

struct NilStatus {
  bool nil = false;
  std::size_t bound = 0;  // x_d = 0 for bound <= d <= D
};
NilStatus isNil(const GradedModule& x);

/// sum over i in V of t_i x_{d-1}, plus relations.
GradedSubmodule ffSub(const GradedModule& x, const std::vector<std::size_t>& vars);
GradedModule quotientByVars(const GradedModule& x, const std::vector<std::size_t>& vars);

/// Degree-d slice of the Koszul cube: T -> x(-#T)_d with boundaries t_j.
SCube koszulSlice(const GradedModule& x, std::size_t d);

/// T_i(x)_d for 0 <= i <= n and 0 <= d <= window, window = D - n.
struct KoszulHomology {
  std::size_t window = 0;
  std::vector<std::vector<ModulePresentation>> t;  // t[i][d]

  std::size_t rank(std::size_t i, std::size_t d) const { return t.at(i).at(d).freeRank; }
  bool vanishes(std::size_t i) const;
};

/// Throws WindowTooSmall when D < n.
KoszulHomology koszulHomology(const GradedModule& x);
bool isTRegular(const GradedModule& x);

/// sum_k parts[k][t_1..t_n](-k), truncated at D.
GradedModule functorA(const std::vector<Module>& parts, std::size_t vars, std::size_t truncation);
/// T_0(x)_k for k = 0..m. Throws NotTRegular, WindowTooSmall if m exceeds the window.
std::vector<ModulePresentation> functorB(const GradedModule& x, std::size_t m);

/// y -> z with z_l = y_l below the Nil bound of the subobject x, zero above.
struct SpecialFilteringWitness {
  GradedModule z;
  std::vector<Matrix> projection;  // y_d -> z_d
  std::size_t nilBound = 0;
};

/// Throws NotNil unless the subobject is Nil.
SpecialFilteringWitness nilSpecialFilteringWitness(const GradedModule& y, const GradedSubmodule& x);
/// x -> y -> z is injective in every degree.
bool compositeIsInjective(const GradedModule& y, const GradedSubmodule& x, const SpecialFilteringWitness& w);

/// Sum of x_d for d below the Nil bound with block-shift endomorphisms.
/// Throws NotNil.
AffineObject forgetGrading(const GradedModule& x);

}  // namespace kml
