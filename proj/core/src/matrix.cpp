#include "kml/matrix.hpp"

#include <sstream>

#include "kml/errors.hpp"

namespace kml {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Ring ring, std::size_t n) { return scalar(ring, n, 1); }

Matrix Matrix::scalar(Ring ring, std::size_t n, const mpq_class& value) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, value);
  return m;
}

Matrix Matrix::diagonal(Ring ring, const std::vector<mpq_class>& diag) {
  Matrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::fromRows(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(ring, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

Matrix Matrix::fromRows(Ring ring, const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(ring, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw DimensionMismatch("ragged matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::columnVector(Ring ring, const std::vector<mpq_class>& values) {
  Matrix m(ring, values.size(), 1);
  for (std::size_t r = 0; r < values.size(); ++r) m.set(r, 0, values[r]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const mpq_class& value) {
  data_[r * cols_ + c] = ring_.normalize(value);
}

bool Matrix::isZero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  return block(0, first, rows_, count);
}

Matrix Matrix::rowRange(std::size_t first, std::size_t count) const {
  return block(first, 0, count, cols_);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(ring_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return b;
}

void Matrix::setBlock(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("setBlock out of range");
  if (!(m.ring_ == ring_)) throw RingMismatch("setBlock across rings");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = m.data_[r * m.cols_ + c];
}

std::vector<mpq_class> Matrix::columnValues(std::size_t c) const {
  std::vector<mpq_class> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::changeRing(const Ring& ring) const {
  Matrix m(ring, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring.normalize(data_[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(ring_ == rhs.ring_)) throw RingMismatch("product of matrices over " + ring_.name() + " and " + rhs.ring_.name());
  if (cols_ != rhs.rows_)
    throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                            std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out(ring_, rows_, rhs.cols_);
  if (ring_.kind() == RingKind::Rational) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = data_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const mpq_class& b = rhs.data_[k * rhs.cols_ + j];
          if (sgn(b) != 0) out.data_[i * rhs.cols_ + j] += a * b;
        }
      }
    return out;
  }
  // Z and F_p: accumulate numerators as integers.
  std::vector<mpz_class> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto& a : acc) a = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = data_[i * cols_ + k].get_num();
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const mpz_class& b = rhs.data_[k * rhs.cols_ + j].get_num();
        if (sgn(b) != 0) mpz_addmul(acc[j].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      if (sgn(acc[j]) != 0) out.set(i, j, mpq_class(acc[j]));
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (!(ring_ == rhs.ring_)) throw RingMismatch("sum across rings");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("sum of differently sized matrices");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.normalize(data_[i] + rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const mpq_class& factor) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(data_[i]) != 0) out.data_[i] = ring_.normalize(data_[i] * factor);
  return out;
}

Matrix Matrix::power(unsigned exponent) const {
  if (!isSquare()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = identity(ring_, rows_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack of matrices with different row counts");
  Matrix out(a.ring_, a.rows_, a.cols_ + b.cols_);
  out.setBlock(0, 0, a);
  out.setBlock(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack of matrices with different column counts");
  Matrix out(a.ring_, a.rows_ + b.rows_, a.cols_);
  out.setBlock(0, 0, a);
  out.setBlock(a.rows_, 0, b);
  return out;
}

Matrix Matrix::directSum(const Matrix& a, const Matrix& b) {
  Matrix out(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.setBlock(0, 0, a);
  out.setBlock(a.rows_, a.cols_, b);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::toString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << data_[r * cols_ + c].get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace kml
