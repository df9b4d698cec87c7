#include "kml/module.hpp"

#include "kml/errors.hpp"

namespace kml {

Module Module::free(const Ring& ring, std::size_t rank) { return Module(Submodule::zero(ring, rank)); }

Module Module::quotient(const Matrix& relationGenerators) {
  return Module(Submodule::fromGenerators(relationGenerators));
}

ModulePresentation Module::presentation() const {
  const std::size_t g = generatorCount();
  if (ring().isField() || relations_.isZero()) return {rank(), {}};
  return presentationFromDiagonal(g, smithDiagonal(relations_.basisRows()));
}

bool Module::isAnnihilatedBy(const mpq_class& c) const {
  std::vector<mpq_class> e(generatorCount());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e.assign(e.size(), 0);
    e[i] = ring().normalize(c);
    if (!relations_.contains(e)) return false;
  }
  return true;
}

Module directSum(const Module& a, const Module& b) {
  Matrix rows = Matrix::directSum(a.relations().basisRows(), b.relations().basisRows());
  return Module::quotient(rows.transpose());
}

Module moduleFromPresentation(const Ring& ring, const ModulePresentation& p) {
  const std::size_t g = p.freeRank + p.invariantFactors.size();
  Matrix rel(ring, g, p.invariantFactors.size());
  for (std::size_t i = 0; i < p.invariantFactors.size(); ++i)
    rel.set(p.freeRank + i, i, mpq_class(p.invariantFactors[i]));
  return Module::quotient(rel);
}

bool isWellDefined(const Matrix& f, const Module& src, const Module& dst) {
  if (f.rows() != dst.generatorCount() || f.cols() != src.generatorCount()) return false;
  if (src.relations().isZero()) return true;
  return dst.relations().containsColumnsOf(f * src.relations().generators());
}

bool morphismsEqual(const Matrix& f, const Matrix& g, const Module& dst) {
  if (dst.isFree()) return f == g;
  return dst.relations().containsColumnsOf(f - g);
}

bool isZeroMorphism(const Matrix& f, const Module& dst) {
  if (dst.isFree()) return f.isZero();
  return dst.relations().containsColumnsOf(f);
}

Submodule kernelLattice(const Matrix& f, const Module& dst) { return preimageOf(f, dst.relations()); }

bool isInjective(const Matrix& f, const Module& src, const Module& dst) {
  return src.relations().contains(kernelLattice(f, dst));
}

bool isSurjective(const Matrix& f, const Module& dst) {
  return sumSubmodules(imageOf(f), dst.relations()).isFull();
}

Module cokernelModule(const Matrix& f, const Module& dst) {
  return Module(sumSubmodules(imageOf(f), dst.relations()));
}

Module subquotientModule(const Submodule& lattice, const Module& parent) {
  // c is a relation iff sum c_i l_i lies in the parent's relations.
  return Module(preimageOf(lattice.generators(), parent.relations()));
}

ModulePresentation homologyOfPresented(const Module& mid, const Matrix& dIn, const Matrix& dOut,
                                       const Module& out) {
  if (dIn.rows() != mid.generatorCount() || dOut.cols() != mid.generatorCount())
    throw DimensionMismatch("homologyOfPresented: maps do not meet the middle module");
  if (!isZeroMorphism(dOut * dIn, out)) throw NotAComplex("composite of consecutive maps is nonzero");
  if (mid.isFree() && out.isFree()) {
    // Ker dOut is saturated, so the torsion of Ker/Im is that of coker dIn.
    ModulePresentation p = cokernel(dIn);
    p.freeRank -= rank(dOut);
    return p;
  }
  Submodule z = kernelLattice(dOut, out);
  Submodule b = sumSubmodules(imageOf(dIn), mid.relations());
  return cokernel(z.coordinatesOfColumns(b.generators()));
}

}  // namespace kml
