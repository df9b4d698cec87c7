#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kml/matrix.hpp"
#include "kml/module.hpp"

namespace kml {

/// Subsets of the direction set are bitmasks over direction indices.
using Subset = std::uint32_t;

inline bool hasDirection(Subset s, std::size_t t) { return (s >> t) & 1U; }
inline std::size_t subsetSize(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }

/// S-cube: a module per subset T of S and, for each t in T, a boundary map
/// x_T -> x_{T \ {t}} given as a matrix on generators.
class SCube {
 public:
  static constexpr std::size_t kMaxDirections = 8;

  SCube() = default;
  /// Every vertex starts as the zero module and every boundary as the empty map.
  SCube(Ring ring, std::vector<std::string> directions);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dimension() const noexcept { return directions_.size(); }
  const std::vector<std::string>& directions() const noexcept { return directions_; }
  /// Throws UnknownDirection.
  std::size_t directionIndex(const std::string& label) const;
  Subset fullSet() const noexcept { return static_cast<Subset>((1U << dimension()) - 1U); }
  std::string subsetLabel(Subset s) const;

  const Module& vertex(Subset s) const { return vertices_.at(s); }
  void setVertex(Subset s, Module m);
  void setFreeVertex(Subset s, std::size_t rank) { setVertex(s, Module::free(ring_, rank)); }

  /// d^t_T : x_T -> x_{T \ {t}}; requires t in T.
  const Matrix& boundary(Subset s, std::size_t t) const;
  void setBoundary(Subset s, std::size_t t, const Matrix& m);

  bool isFree() const;

 private:
  std::size_t slot(Subset s, std::size_t t) const;

  Ring ring_ = Ring::integers();
  std::vector<std::string> directions_;
  std::vector<Module> vertices_;
  std::vector<Matrix> boundaries_;
};

/// d^s_{T\t} d^t_T != d^t_{T\s} d^s_T as maps into x_{T \ {s,t}}.
struct SquareViolation {
  Subset subset = 0;
  std::size_t s = 0;
  std::size_t t = 0;
};

struct CubeValidation {
  std::vector<std::string> shapeErrors;  // wrong sizes, maps not respecting relations
  std::vector<SquareViolation> squares;
  bool valid() const { return shapeErrors.empty() && squares.empty(); }
};

CubeValidation validateCube(const SCube& c);
/// Throws InvalidCube naming the first problem.
void requireValidCube(const SCube& c);

/// Bounded chain complex C_0 .. C_n of presented modules; differential(k)
/// maps C_k to C_{k-1} for k >= 1.
struct ChainComplex {
  std::vector<Module> modules;
  std::vector<Matrix> differentials;  // index k holds d_k; index 0 is unused

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  const Matrix& differential(std::size_t k) const { return differentials.at(k); }
  bool isComplex() const;
  ModulePresentation homology(std::size_t k) const;
};

/// Tot_k = sum over #T = k of x_T, summands ordered by ascending bitmask.
/// The T -> T\{j} block carries (-1)^{#{t in T : order(t) > order(j)}}.
/// `order[i]` is the position of direction i; empty means the listed order.
/// Pass `validate = false` only for cubes already known to commute.
ChainComplex totalComplex(const SCube& c, const std::vector<std::size_t>& order = {}, bool validate = true);

/// Cokernel cube in direction k, indexed by the remaining directions in their
/// original order. Throws UnknownDirection.
SCube directionalH0(const SCube& c, std::size_t k);
SCube directionalH0(const SCube& c, const std::string& label);
/// Applies directionalH0 for each label in sequence.
SCube iteratedH0(const SCube& c, const std::vector<std::string>& labels);

bool isMonic(const SCube& c);
bool isAdmissible(const SCube& c);

struct TypicalCubeSpec {
  std::vector<mpz_class> f;
  std::size_t r = 0;
  std::vector<std::size_t> n;
};

/// Every vertex Z^r; the boundary in direction s is diag(f_s I_{n_s}, I_{r-n_s}).
SCube typicalCube(const TypicalCubeSpec& spec, const Ring& ring = Ring::integers());

/// Smallest m in [1, bound] with f^m killing the module. Returns nullopt when
/// no power of f ever does, and throws BoundExceeded when one exists beyond
/// the bound.
std::optional<unsigned> annihilatingExponent(const Module& m, const mpz_class& f, unsigned bound = 64);

/// Every boundary injective and every coker d^t_T killed by some power of
/// f_t (the exponent may depend on (T, t)). Vertices must be free.
bool isKoszulCube(const SCube& c, const std::vector<mpz_class>& f, unsigned bound = 64);

/// pred(T, module) for each vertex of the cube H_0^T(c).
using VertexPredicate = std::function<bool(Subset, const Module&)>;

/// Admissible, and pred(T, v) holds for every vertex v of every H_0^T(c).
bool semidirectMembership(const SCube& c, const VertexPredicate& pred);

/// T = {} : free; otherwise killed by a power of prod_{t in T} f_t and
/// projective over the quotient ring by that product.
VertexPredicate koszulVertexClass(std::vector<mpz_class> f);

}  // namespace kml
