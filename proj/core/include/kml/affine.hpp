#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kml/matrix.hpp"
#include "kml/module.hpp"
#include "kml/submodule.hpp"

namespace kml {

/// A module with commuting endomorphisms phi_1..phi_r (matrices on generators).
class AffineObject {
 public:
  AffineObject() = default;
  /// Validates shapes, well-definedness and pairwise commutation; throws
  /// InvalidAffineObject.
  AffineObject(Module module, std::vector<Matrix> endos);
  static AffineObject free(const Ring& ring, std::size_t dim, std::vector<Matrix> endos);

  const Module& module() const noexcept { return module_; }
  const Ring& ring() const noexcept { return module_.ring(); }
  std::size_t generatorCount() const noexcept { return module_.generatorCount(); }
  const std::vector<Matrix>& endos() const noexcept { return endos_; }
  std::size_t endoCount() const noexcept { return endos_.size(); }

  friend bool operator==(const AffineObject& a, const AffineObject& b);

 private:
  Module module_;
  std::vector<Matrix> endos_;
};

/// Indices into the endomorphism list; empty means all of them.
using EndoSet = std::vector<std::size_t>;

/// ff(S) = sum over i in F of phi_i(S), as a generator lattice (relations
/// are not added).
Submodule ffImage(const AffineObject& x, const EndoSet& f, const Submodule& s);
/// ff x + relations.
Submodule ffSub(const AffineObject& x, const EndoSet& f);
/// x / ff x with the induced endomorphisms.
AffineObject reduceModFf(const AffineObject& x, const EndoSet& f);

struct NilIndex {
  bool nilpotent = false;
  std::size_t index = 0;  // smallest N with every monomial of degree N in F zero
};

/// Exact decision; N never exceeds rank + log2 |torsion| of the module.
NilIndex nilIndex(const AffineObject& x, const EndoSet& f);

/// Decreasing generator lattices x_0 ⊇ x_1 ⊇ ... ⊇ x_D of an affine object,
/// each containing the relations.
struct FFiltration {
  AffineObject parent;
  EndoSet f;
  std::vector<Submodule> steps;
};

/// Throws InvalidFiltration unless the steps decrease and ff x_n ⊆ x_{n+1}.
void validateFiltration(const FFiltration& fil);
/// x_n = ff^n x + relations for n = 0..depth.
FFiltration adicFiltration(const AffineObject& x, const EndoSet& f, std::size_t depth);

struct StabilityReport {
  std::optional<std::size_t> stableFrom;         // condition (i)
  std::optional<std::size_t> generatedFrom;      // condition (ii)
  bool crossCheck = false;                       // the two verdicts agree
  std::size_t window = 0;
};

/// (i) smallest n0 with ff x_n = x_{n+1} for n0 <= n < D. (ii) smallest m with
/// x_n = sum over k <= m of (monomials of degree n-k in F)(x_k) for all
/// m < n <= D, i.e. the truncated blow-up is generated in degrees <= m.
StabilityReport stabilityIndex(const FFiltration& fil);

struct ArtinReesReport {
  std::optional<std::size_t> n0;
  std::size_t window = 0;
};

/// Smallest n0 with ff^n x ∩ y = ff^{n-n0}(ff^{n0} x ∩ y) for n0 <= n <= window.
/// Throws AmbientMismatch.
ArtinReesReport artinReesIndex(const AffineObject& x, const Submodule& y, const EndoSet& f,
                               std::size_t window = 12);

/// ff-adic filtration x = y_0 ⊇ ... ⊇ y_N (each y_k a lattice containing the
/// relations); y_N equals the relations. Throws NotNilpotent.
std::vector<Submodule> devissageFiltration(const AffineObject& x, const EndoSet& f);

struct DevissageReport {
  std::vector<Submodule> steps;
  std::size_t nilIndex = 0;
  bool endpoints = false;    // y_0 = x and y_N = relations
  bool decreasing = false;
  bool annihilated = false;  // ff y_k ⊆ y_{k+1}
  std::optional<std::size_t> failingStep;
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  bool pass() const { return endpoints && decreasing && annihilated && length() <= nilIndex; }
};

/// Builds the dévissage filtration and re-checks it step by step.
DevissageReport verifyDevissage(const AffineObject& x, const EndoSet& f);

}  // namespace kml
