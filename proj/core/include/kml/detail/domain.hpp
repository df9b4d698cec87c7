#pragma once

// Dense exact kernels shared by Z, Q and F_p. Every algorithm is written once
// against a Euclidean-domain policy; over a field the Euclidean steps collapse
// to ordinary Gaussian elimination.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kml/matrix.hpp"
#include "kml/ring.hpp"

namespace kml::detail {

struct IntegerDomain {
  using Value = mpz_class;
  static constexpr bool kIsField = false;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool isZero(const Value& v) const { return sgn(v) == 0; }
  bool isUnit(const Value& v) const { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }
  bool betterPivot(const Value& a, const Value& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  // q with a - q*b having the sign of b and |a - q*b| < |b|.
  Value quotient(const Value& a, const Value& b) const {
    Value q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  bool divides(const Value& d, const Value& a) const {
    if (isZero(d)) return isZero(a);
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  Value exactDiv(const Value& a, const Value& d) const {
    Value q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  // Unit u such that u * v is the canonical associate (positive).
  Value normalizer(const Value& v) const { return sgn(v) < 0 ? Value(-1) : Value(1); }
  void subMul(Value& acc, const Value& q, const Value& b) const {
    mpz_submul(acc.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
  }
  void addMul(Value& acc, const Value& a, const Value& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void scale(Value& v, const Value& u) const { v *= u; }
  Value fromRational(const mpq_class& q) const { return q.get_num(); }
  mpq_class toRational(const Value& v) const { return mpq_class(v); }
};

/// Thrown by Int64Domain when an intermediate value leaves the safe range.
struct Int64Overflow {};

/// Machine-word integers with overflow detection. Callers retry with
/// IntegerDomain on Int64Overflow; see `dispatch`.
struct Int64Domain {
  using Value = std::int64_t;
  static constexpr bool kIsField = false;
  static constexpr Value kMin = std::numeric_limits<Value>::min();

  static Value checked(Value v) {
    if (v == kMin) throw Int64Overflow{};
    return v;
  }
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool isZero(Value v) const { return v == 0; }
  bool isUnit(Value v) const { return v == 1 || v == -1; }
  bool betterPivot(Value a, Value b) const { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
  Value quotient(Value a, Value b) const {
    Value q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
  }
  bool divides(Value d, Value a) const { return d == 0 ? a == 0 : a % d == 0; }
  Value exactDiv(Value a, Value d) const { return a / d; }
  Value normalizer(Value v) const { return v < 0 ? -1 : 1; }
  void subMul(Value& acc, Value q, Value b) const {
    Value t;
    if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(acc, t, &acc)) throw Int64Overflow{};
    checked(acc);
  }
  void addMul(Value& acc, Value a, Value b) const {
    Value t;
    if (__builtin_mul_overflow(a, b, &t) || __builtin_add_overflow(acc, t, &acc)) throw Int64Overflow{};
    checked(acc);
  }
  void scale(Value& v, Value u) const {
    if (__builtin_mul_overflow(v, u, &v)) throw Int64Overflow{};
    checked(v);
  }
  Value fromRational(const mpq_class& q) const {
    if (!q.get_num().fits_slong_p()) throw Int64Overflow{};
    return checked(q.get_num().get_si());
  }
  mpq_class toRational(Value v) const { return mpq_class(static_cast<long>(v)); }
};

struct RationalDomain {
  using Value = mpq_class;
  static constexpr bool kIsField = true;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool isZero(const Value& v) const { return sgn(v) == 0; }
  bool isUnit(const Value& v) const { return !isZero(v); }
  bool betterPivot(const Value&, const Value&) const { return false; }
  Value quotient(const Value& a, const Value& b) const { return a / b; }
  bool divides(const Value& d, const Value& a) const { return !isZero(d) || isZero(a); }
  Value exactDiv(const Value& a, const Value& d) const { return a / d; }
  Value normalizer(const Value& v) const { return 1 / v; }
  void subMul(Value& acc, const Value& q, const Value& b) const { acc -= q * b; }
  void addMul(Value& acc, const Value& a, const Value& b) const { acc += a * b; }
  void scale(Value& v, const Value& u) const { v *= u; }
  Value fromRational(const mpq_class& q) const { return q; }
  mpq_class toRational(const Value& v) const { return v; }
};

struct PrimeDomain {
  using Value = std::int64_t;
  static constexpr bool kIsField = true;
  std::int64_t p;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool isZero(Value v) const { return v == 0; }
  bool isUnit(Value v) const { return v != 0; }
  bool betterPivot(Value, Value) const { return false; }
  Value mul(Value a, Value b) const { return (a * b) % p; }
  Value inverse(Value a) const {
    // Fermat: a^(p-2).
    Value result = 1, base = a % p;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Value quotient(Value a, Value b) const { return mul(a, inverse(b)); }
  bool divides(Value d, Value a) const { return d != 0 || a == 0; }
  Value exactDiv(Value a, Value d) const { return quotient(a, d); }
  Value normalizer(Value v) const { return inverse(v); }
  void subMul(Value& acc, Value q, Value b) const {
    acc = (acc - mul(q, b)) % p;
    if (acc < 0) acc += p;
  }
  void addMul(Value& acc, Value a, Value b) const { acc = (acc + mul(a, b)) % p; }
  void scale(Value& v, Value u) const { v = mul(v, u); }
  Value fromRational(const mpq_class& q) const { return q.get_num().get_si(); }
  mpq_class toRational(Value v) const { return mpq_class(static_cast<long>(v)); }
};

/// Integer computations run on machine words first and are redone with GMP
/// integers if anything overflows. `f` must be a pure function.
template <class F>
decltype(auto) dispatchInteger(F&& f) {
  try {
    return f(Int64Domain{});
  } catch (const Int64Overflow&) {
    return f(IntegerDomain{});
  }
}

/// Calls `f` with the domain policy matching `ring`.
template <class F>
decltype(auto) dispatch(const Ring& ring, F&& f) {
  switch (ring.kind()) {
    case RingKind::Integer:
      return dispatchInteger(f);
    case RingKind::Rational:
      return f(RationalDomain{});
    case RingKind::PrimeField:
      break;
  }
  return f(PrimeDomain{ring.characteristic()});
}

template <class D>
struct Grid {
  using Value = typename D::Value;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Value> a;

  Grid() = default;
  Grid(const D& dom, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, dom.zero()) {}

  Value& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Value& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Grid identity(const D& dom, std::size_t n) {
    Grid g(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = dom.one();
    return g;
  }
  void swapRows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swapCols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
};

template <class D>
Grid<D> toGrid(const D& dom, const Matrix& m) {
  Grid<D> g(dom, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = dom.fromRational(m(r, c));
  return g;
}

template <class D>
Matrix fromGrid(const D& dom, const Ring& ring, const Grid<D>& g) {
  Matrix m(ring, g.rows, g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c)
      if (!dom.isZero(g(r, c))) m.set(r, c, dom.toRational(g(r, c)));
  return m;
}

template <class D>
Grid<D> transposeGrid(const D& dom, const Grid<D>& g) {
  Grid<D> t(dom, g.cols, g.rows);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) t(c, r) = g(r, c);
  return t;
}

// row[i] -= q * row[src], starting from column `from`.
template <class D>
void rowSubMul(const D& dom, Grid<D>& g, std::size_t i, const typename D::Value& q, std::size_t src,
               std::size_t from = 0) {
  for (std::size_t c = from; c < g.cols; ++c) {
    const auto& s = g(src, c);
    if (!dom.isZero(s)) dom.subMul(g(i, c), q, s);
  }
}

template <class D>
void colSubMul(const D& dom, Grid<D>& g, std::size_t j, const typename D::Value& q, std::size_t src,
               std::size_t from = 0) {
  for (std::size_t r = from; r < g.rows; ++r) {
    const auto& s = g(r, src);
    if (!dom.isZero(s)) dom.subMul(g(r, j), q, s);
  }
}

template <class D>
void scaleRow(const D& dom, Grid<D>& g, std::size_t i, const typename D::Value& u) {
  for (std::size_t c = 0; c < g.cols; ++c)
    if (!dom.isZero(g(i, c))) dom.scale(g(i, c), u);
}

/// Row echelon form by Euclidean row operations. When `reduced` is set the
/// result is the canonical (Hermite / reduced row echelon) form: positive
/// (resp. unit) pivots with entries above each pivot reduced into [0, pivot).
/// If `transform` is non-null it must be an identity of size rows and ends as
/// U with U * A_in = A_out. Returns the pivot columns.
template <class D>
std::vector<std::size_t> rowEchelon(const D& dom, Grid<D>& g, std::type_identity_t<Grid<D>>* transform,
                                    bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < g.cols && r < g.rows; ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = g.rows;
      for (std::size_t i = r; i < g.rows; ++i) {
        if (dom.isZero(g(i, c))) continue;
        if (best == g.rows || dom.betterPivot(g(i, c), g(best, c))) best = i;
        if constexpr (D::kIsField) break;
      }
      if (best == g.rows) break;
      found = true;
      g.swapRows(r, best);
      if (transform) transform->swapRows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < g.rows; ++i) {
        if (dom.isZero(g(i, c))) continue;
        auto q = dom.quotient(g(i, c), g(r, c));
        rowSubMul(dom, g, i, q, r, c);
        if (transform) rowSubMul(dom, *transform, i, q, r);
        if (!dom.isZero(g(i, c))) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    auto u = dom.normalizer(g(r, c));
    if (!(u == dom.one())) {
      scaleRow(dom, g, r, u);
      if (transform) scaleRow(dom, *transform, r, u);
    }
    if (reduced) {
      for (std::size_t i = 0; i < r; ++i) {
        if (dom.isZero(g(i, c))) continue;
        auto q = dom.quotient(g(i, c), g(r, c));
        if (dom.isZero(q)) continue;
        rowSubMul(dom, g, i, q, r, c);
        if (transform) rowSubMul(dom, *transform, i, q, r);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class D>
std::size_t rank(const D& dom, Grid<D> g) {
  return rowEchelon(dom, g, nullptr, false).size();
}

/// Basis of {v : A v = 0} as rows. Over Z the basis is saturated.
template <class D>
Grid<D> kernelRows(const D& dom, const Grid<D>& a) {
  Grid<D> t = transposeGrid(dom, a);
  Grid<D> u = Grid<D>::identity(dom, t.rows);
  const std::size_t rk = rowEchelon(dom, t, &u, false).size();
  Grid<D> k(dom, t.rows - rk, t.rows);
  for (std::size_t i = rk; i < t.rows; ++i)
    for (std::size_t c = 0; c < t.rows; ++c) k(i - rk, c) = u(i, c);
  return k;
}

/// Smith normal form U * A * V = D with a divisibility chain on the diagonal.
template <class D>
struct SmithGrids {
  Grid<D> u, d, v;
  std::size_t rank = 0;
};

template <class D>
SmithGrids<D> smith(const D& dom, const Grid<D>& input, bool wantTransforms) {
  SmithGrids<D> s;
  s.d = input;
  Grid<D>& g = s.d;
  if (wantTransforms) {
    s.u = Grid<D>::identity(dom, g.rows);
    s.v = Grid<D>::identity(dom, g.cols);
  }
  Grid<D>* u = wantTransforms ? &s.u : nullptr;
  Grid<D>* v = wantTransforms ? &s.v : nullptr;
  const std::size_t n = std::min(g.rows, g.cols);
  std::size_t t = 0;
  bool exhausted = false;
  for (; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = g.rows, bj = g.cols;
      for (std::size_t i = t; i < g.rows; ++i)
        for (std::size_t j = t; j < g.cols; ++j) {
          if (dom.isZero(g(i, j))) continue;
          if (bi == g.rows || dom.betterPivot(g(i, j), g(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == g.rows) {
        exhausted = true;
        break;
      }
      g.swapRows(t, bi);
      if (u) u->swapRows(t, bi);
      g.swapCols(t, bj);
      if (v) v->swapCols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < g.rows; ++i) {
        if (dom.isZero(g(i, t))) continue;
        auto q = dom.quotient(g(i, t), g(t, t));
        rowSubMul(dom, g, i, q, t, t);
        if (u) rowSubMul(dom, *u, i, q, t);
        if (!dom.isZero(g(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < g.cols; ++j) {
        if (dom.isZero(g(t, j))) continue;
        auto q = dom.quotient(g(t, j), g(t, t));
        colSubMul(dom, g, j, q, t, t);
        if (v) colSubMul(dom, *v, j, q, t);
        if (!dom.isZero(g(t, j))) clean = false;
      }
      if (!clean) continue;
      if constexpr (!D::kIsField) {
        // Divisibility: fold an offending row into the pivot row and retry.
        std::size_t bad = g.rows;
        for (std::size_t i = t + 1; i < g.rows && bad == g.rows; ++i)
          for (std::size_t j = t + 1; j < g.cols; ++j)
            if (!dom.divides(g(t, t), g(i, j))) {
              bad = i;
              break;
            }
        if (bad != g.rows) {
          const typename D::Value minusOne = -dom.one();
          rowSubMul(dom, g, t, minusOne, bad, t);
          if (u) rowSubMul(dom, *u, t, minusOne, bad);
          continue;
        }
      }
      break;
    }
    if (exhausted) break;
    auto unit = dom.normalizer(g(t, t));
    if (!(unit == dom.one())) {
      scaleRow(dom, g, t, unit);
      if (u) scaleRow(dom, *u, t, unit);
    }
  }
  s.rank = t;
  return s;
}

}  // namespace kml::detail
