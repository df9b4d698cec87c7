#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kml/ring.hpp"

namespace kml {

/// Dense matrix over a `Ring`. Entries are kept normalized for the ring, so
/// structural equality is ring equality.
class Matrix {
 public:
  Matrix() : ring_(Ring::integers()) {}
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix scalar(Ring ring, std::size_t n, const mpq_class& value);
  static Matrix diagonal(Ring ring, const std::vector<mpq_class>& diag);
  /// Row-major nested literal, e.g. fromRows(Z, {{1, 2}, {3, 4}}).
  static Matrix fromRows(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix fromRows(Ring ring, const std::vector<std::vector<mpq_class>>& rows);
  static Matrix columnVector(Ring ring, const std::vector<mpq_class>& values);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const mpq_class& value);

  bool isZero() const;
  bool isSquare() const noexcept { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix rowRange(std::size_t first, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const Matrix& m);
  std::vector<mpq_class> columnValues(std::size_t c) const;
  /// Reinterprets the entries in another ring (e.g. an integer matrix mod p).
  Matrix changeRing(const Ring& ring) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const mpq_class& factor) const;
  Matrix power(unsigned exponent) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix directSum(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string toString() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace kml
