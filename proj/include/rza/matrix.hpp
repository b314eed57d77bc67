#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rza/error.hpp"
#include "rza/rational.hpp"
#include "rza/univariate.hpp"

namespace rza {

/// Dense row-major matrix over any commutative ring type T.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <typename T, typename S>
Matrix<T> scaled(Matrix<T> a, const S& c) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= c;
  return a;
}

/// Coefficients of det(x·I - M), leading coefficient first (so the result has
/// n+1 entries and starts with `one`). Berkowitz's algorithm: ring operations
/// only, so it applies to polynomial-valued matrices as well.
template <typename T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  if (n == 0) return {one};
  const T zero = one - one;
  // Start from the trailing 1x1 principal block and grow towards the full matrix.
  std::vector<T> vec{one, -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    // Current leading entry a = m(k,k), row R = m(k, k+1..), column C = m(k+1.., k),
    // trailing block A = m(k+1.., k+1..) of size s.
    const std::size_t s = n - 1 - k;
    std::vector<T> col(s);
    for (std::size_t i = 0; i < s; ++i) col[i] = m(k + 1 + i, k);
    std::vector<T> diag;
    diag.reserve(s + 1);
    diag.push_back(one);
    diag.push_back(-m(k, k));
    for (std::size_t p = 0; p < s; ++p) {
      T acc = zero;
      for (std::size_t i = 0; i < s; ++i) acc += m(k, k + 1 + i) * col[i];
      diag.push_back(-acc);
      if (p + 1 == s) break;
      std::vector<T> next(s, zero);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) next[i] += m(k + 1 + i, k + 1 + j) * col[j];
      col = std::move(next);
    }
    // Lower-triangular Toeplitz (s+2) x (s+1) times the previous vector.
    std::vector<T> out(s + 2, zero);
    for (std::size_t i = 0; i < s + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, s); ++j) out[i] += diag[i - j] * vec[j];
    vec = std::move(out);
  }
  return vec;
}

template <typename T>
T berkowitz_determinant(const Matrix<T>& m, const T& one) {
  auto c = berkowitz_charpoly(m, one);
  T d = c.back();
  return m.rows() % 2 == 0 ? d : -d;
}

/// Laplace expansion along the first row. Exponential; intended for d <= 6.
template <typename T>
T cofactor_determinant(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T total = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    T term = m(0, j) * cofactor_determinant(minor, one);
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

using MatrixQ = Matrix<Rational>;

MatrixQ identity_matrix(std::size_t d);
MatrixQ column(const std::vector<Rational>& v);
MatrixQ parse_matrix(const std::vector<std::vector<std::string>>& rows);

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(const MatrixQ& m);

/// A particular solution X of A·X = B (free variables set to 0), or nullopt
/// when the system is inconsistent.
std::optional<MatrixQ> solve_linear(const MatrixQ& a, const MatrixQ& b);

/// Exact symmetric rational matrix.
class SymmetricMatrixQ {
 public:
  SymmetricMatrixQ() = default;
  /// Throws InputError unless `m` is square and symmetric.
  explicit SymmetricMatrixQ(MatrixQ m);

  static SymmetricMatrixQ identity(std::size_t d) { return SymmetricMatrixQ(identity_matrix(d)); }
  static SymmetricMatrixQ zero(std::size_t d) { return SymmetricMatrixQ(MatrixQ(d, d)); }
  static SymmetricMatrixQ diagonal(const std::vector<Rational>& entries);

  std::size_t dim() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const MatrixQ& matrix() const { return m_; }

  friend bool operator==(const SymmetricMatrixQ&, const SymmetricMatrixQ&) = default;

 private:
  MatrixQ m_;
};

/// det(t·I + M), lowest degree first. Berkowitz for d <= 12, Faddeev–LeVerrier beyond.
UnivariatePolynomial shifted_charpoly(const MatrixQ& m);
UnivariatePolynomial shifted_charpoly_berkowitz(const MatrixQ& m);
UnivariatePolynomial shifted_charpoly_faddeev(const MatrixQ& m);

std::string format(const MatrixQ& m);

}  // namespace rza
