#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kml/graded.hpp"
#include "kml/linalg.hpp"

namespace kml {

/// Finitely supported integer sequence c_0 + c_1 s + ... known through `window`.
struct K0Vector {
  std::vector<std::int64_t> coeffs;  // size window + 1
  std::size_t window = 0;

  static K0Vector zero(std::size_t window) { return {std::vector<std::int64_t>(window + 1, 0), window}; }
  static K0Vector monomial(std::size_t degree, std::size_t window, std::int64_t c = 1);

  std::int64_t operator[](std::size_t d) const { return d < coeffs.size() ? coeffs[d] : 0; }
  K0Vector restricted(std::size_t window) const;
  /// s * v; the window grows by one.
  K0Vector shifted() const;
  /// (1 - s) * v, kept on the same window.
  K0Vector timesOneMinusS() const;

  friend K0Vector operator+(const K0Vector& a, const K0Vector& b);
  friend K0Vector operator-(const K0Vector& a, const K0Vector& b);
  /// Equal on the common window.
  static bool agree(const K0Vector& a, const K0Vector& b);
  friend bool operator==(const K0Vector&, const K0Vector&) = default;

  /// e.g. "1 - s^2"; "0" for the zero vector.
  std::string toString() const;
};

/// sum_i (-1)^i rank T_i(x)_d s^d on the Koszul window. Throws WindowTooSmall.
K0Vector k0Class(const GradedModule& x);

/// x[t]: one more variable, y_d = sum_j x_{d-j} t^j with blocks ordered by j.
GradedModule adjoinVariable(const GradedModule& x);
/// x regarded over one more variable acting by zero.
GradedModule extendByZero(const GradedModule& x);

struct OneMinusSReport {
  bool exact = false;             // x[t](-1) -> x[t] -> x' exact in every degree
  std::optional<std::size_t> failingDegree;
  K0Vector lhs;                   // class of x' (x with t acting by zero)
  K0Vector rhs;                   // (1 - s) class(x)
  std::size_t window = 0;
  bool pass() const { return exact && K0Vector::agree(lhs, rhs); }
};

/// Throws NotNil.
OneMinusSReport verifyOneMinusS(const GradedModule& x);

/// Multiplication by (1 - s)^e from degrees 0..D-e+1 into 0..D, i.e. the
/// (D+1) x (D-e+1) Toeplitz matrix with entries (-1)^k C(e, k).
Matrix oneMinusSPower(std::size_t e, std::size_t truncation, const Ring& ring = Ring::integers());

struct SplitReport {
  std::size_t n = 0;
  std::size_t rank = 0;  // generators of x0
  std::size_t truncation = 0;
  std::size_t safeWindow = 0;  // source degrees 0..safeWindow
  bool injective = false;
  ModulePresentation cokernel;
  bool retraction = false;  // q (1-t)^{n+1} = id
  bool section = false;     // pi j = id, pi (1-t)^{n+1} = 0
  bool splitting = false;   // (1-t)^{n+1} q + j pi = id
  Matrix q, pi, j;
  bool pass() const;
};

/// Split exactness of x0[t] -(1-t)^{n+1}-> x0[t] -> sum_{i<=n} x0 t^i on the
/// truncated carrier of degree <= D. pi_k(t^i) = (-1)^k C(i, k) and
/// j(e_k) = (1 - t)^k; q is solved from (1-t)^{n+1} q = id - j pi.
/// Throws WindowTooSmall when D < 3(n+1).
SplitReport splitSequenceVerify(std::size_t rank, std::size_t n, std::size_t truncation,
                                const Ring& ring = Ring::integers());

struct ProjectiveSpaceReport {
  std::size_t n = 0;
  std::size_t truncation = 0;
  bool injective = false;
  ModulePresentation cokernel;
  std::vector<K0Vector> classes;  // s^0 .. s^n from twisted free modules
  mpq_class basisDeterminant;     // det [(1-s)^{n+1} | classes]
  bool connectingMapVanishes = false;
  bool pass() const;
};

/// Throws WindowTooSmall when D < 4(n+1).
ProjectiveSpaceReport projectiveSpaceDecomposition(std::size_t n, std::size_t truncation);

/// 0 -> sub -> mid -> quot -> 0 with per-degree matrices.
struct SesWitness {
  GradedModule sub, mid, quot;
  std::vector<Matrix> inj, surj;
};

/// Throws NotExact naming the first degree where exactness or t-linearity fails.
void requireExact(const SesWitness& w);

/// Graded submodule of x generated by (degree, generator-vector) pairs.
GradedSubmodule generatedSubmodule(const GradedModule& x,
                                   const std::vector<std::pair<std::size_t, std::vector<mpq_class>>>& gens);
/// For graded lattices N ⊆ N' of x (each containing the relations):
/// N'/N -> x/N -> x/N'.
SesWitness sesFromSubmodules(const GradedModule& x, const GradedSubmodule& n, const GradedSubmodule& nPrime);

struct AdditivityReport {
  K0Vector sub, mid, quot;
  std::size_t window = 0;
  bool pass() const;
};

/// Throws NotExact.
AdditivityReport checkAdditivity(const SesWitness& w);

struct GrF1Report {
  std::vector<ModulePresentation> parts;
  std::vector<ModulePresentation> roundTrip;  // b(a(parts))
  std::vector<std::size_t> dimsAB;            // ranks of a(b(a(parts)))
  std::vector<std::size_t> dimsFiltration;    // sum_p rank (F_p/F_{p-1})
  bool baIsIdentity = false;
  bool abMatchesFiltration = false;
  bool pass() const { return baIsIdentity && abMatchesFiltration; }
};

/// b∘a on `parts` and a∘b against the canonical filtration quotients.
GrF1Report verifyGrF1(const std::vector<Module>& parts, std::size_t vars, std::size_t truncation);

}  // namespace kml
