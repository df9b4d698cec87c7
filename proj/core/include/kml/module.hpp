#pragma once

#include <cstddef>
#include <vector>

#include "kml/linalg.hpp"
#include "kml/matrix.hpp"
#include "kml/submodule.hpp"

namespace kml {

/// Finitely generated module R^g / relations. Morphisms between modules are
/// matrices on generators (target gens x source gens) that carry relations
/// into relations; free modules are the case with no relations.
class Module {
 public:
  Module() : relations_(Submodule::zero(Ring::integers(), 0)) {}
  explicit Module(Submodule relations) : relations_(std::move(relations)) {}

  static Module free(const Ring& ring, std::size_t rank);
  static Module zero(const Ring& ring) { return free(ring, 0); }
  /// R^g / span(columns of relationGenerators).
  static Module quotient(const Matrix& relationGenerators);

  const Ring& ring() const noexcept { return relations_.ring(); }
  std::size_t generatorCount() const noexcept { return relations_.ambientRank(); }
  const Submodule& relations() const noexcept { return relations_; }

  bool isFree() const noexcept { return relations_.isZero(); }
  bool isZero() const { return relations_.isFull(); }
  /// Rank of the free part (dimension over a field).
  std::size_t rank() const noexcept { return generatorCount() - relations_.rank(); }
  ModulePresentation presentation() const;

  /// Replaces every column of m (a map into this module) by its canonical
  /// representative modulo the relations.
  Matrix reduceInto(const Matrix& m) const { return relations_.reduceColumns(m); }
  bool isAnnihilatedBy(const mpq_class& c) const;

  friend bool operator==(const Module& a, const Module& b) { return a.relations_ == b.relations_; }

 private:
  Submodule relations_;
};

Module directSum(const Module& a, const Module& b);
/// R^f + sum R/d_i with one generator per summand.
Module moduleFromPresentation(const Ring& ring, const ModulePresentation& p);

/// f carries relations of `src` into relations of `dst`.
bool isWellDefined(const Matrix& f, const Module& src, const Module& dst);
/// f == g as maps into dst.
bool morphismsEqual(const Matrix& f, const Matrix& g, const Module& dst);
bool isZeroMorphism(const Matrix& f, const Module& dst);
bool isInjective(const Matrix& f, const Module& src, const Module& dst);
bool isSurjective(const Matrix& f, const Module& dst);

/// Generator lattice of ker f: {v : f v ∈ relations(dst)}, which contains
/// relations(src).
Submodule kernelLattice(const Matrix& f, const Module& dst);
/// dst / im f, on the generators of dst.
Module cokernelModule(const Matrix& f, const Module& dst);
/// The submodule L/relations of `parent` (L must contain the relations) as a
/// module in its own right, generated by the canonical basis of L.
Module subquotientModule(const Submodule& lattice, const Module& parent);

/// Homology at `mid` of in --dIn--> mid --dOut--> out. Throws NotAComplex if
/// dOut * dIn is not the zero morphism.
ModulePresentation homologyOfPresented(const Module& mid, const Matrix& dIn, const Matrix& dOut,
                                       const Module& out);

}  // namespace kml
