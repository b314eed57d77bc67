#include "rza/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace rza {

MatrixQ identity_matrix(std::size_t d) {
  MatrixQ m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

MatrixQ column(const std::vector<Rational>& v) {
  MatrixQ m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

MatrixQ parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e));
    values.push_back(std::move(r));
  }
  return MatrixQ::from_rows(values);
}

Rational determinant(const MatrixQ& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw PreconditionError("determinant of a non-square matrix");
  MatrixQ m = input;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<MatrixQ> solve_linear(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows()) throw PreconditionError("solve_linear: row count mismatch");
  const std::size_t rows = a.rows(), cols = a.cols(), rhs = b.cols();
  // Reduced row echelon form of [A | B].
  MatrixQ aug(rows, cols + rhs);
  aug.set_block(0, 0, a);
  aug.set_block(0, cols, b);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols + rhs; ++j) std::swap(aug(p, j), aug(r, j));
    const Rational inv = 1 / aug(r, c);
    for (std::size_t j = 0; j < cols + rhs; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < cols + rhs; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < rhs; ++j)
      if (aug(i, cols + j) != 0) return std::nullopt;
  MatrixQ x(cols, rhs);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < rhs; ++j) x(pivot_cols[i], j) = aug(i, cols + j);
  return x;
}

SymmetricMatrixQ::SymmetricMatrixQ(MatrixQ m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InputError("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw InputError("matrix is not symmetric");
}

SymmetricMatrixQ SymmetricMatrixQ::diagonal(const std::vector<Rational>& entries) {
  MatrixQ m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return SymmetricMatrixQ(std::move(m));
}

UnivariatePolynomial shifted_charpoly_berkowitz(const MatrixQ& m) {
  // det(tI + M) = det(tI - (-M)).
  auto c = berkowitz_charpoly(scaled(m, Rational(-1)), Rational(1));
  std::reverse(c.begin(), c.end());
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial shifted_charpoly_faddeev(const MatrixQ& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  // Faddeev–LeVerrier on N = -M gives det(tI - N) = sum c_k t^(n-k).
  const MatrixQ neg = scaled(m, Rational(-1));
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  MatrixQ aux(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    aux = neg * aux;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += c[k - 1];
    const MatrixQ prod = neg * aux;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[k] = -trace / static_cast<unsigned long>(k);
  }
  std::reverse(c.begin(), c.end());
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial shifted_charpoly(const MatrixQ& m) {
  return m.rows() <= 12 ? shifted_charpoly_berkowitz(m) : shifted_charpoly_faddeev(m);
}

std::string format(const MatrixQ& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace rza
