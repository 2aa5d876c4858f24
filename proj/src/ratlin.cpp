#include "conelat/ratlin.hpp"

namespace conelat {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("ratmat shape mismatch");
  RatMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("ratmat shape mismatch");
  RatMat r(a.rows, a.cols);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("ratmat shape mismatch");
  RatMat r(a.rows, a.cols);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

RatVec matvec(const RatMat& a, const RatVec& x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw std::invalid_argument("matvec shape mismatch");
  RatVec r(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_of(RatMat m) { return static_cast<int>(rref(m).size()); }

RatMat nullspace(const RatMat& m) {
  RatMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMat ns(m.cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ns.at(fc, static_cast<int>(k)) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      ns.at(pivots[pi], static_cast<int>(k)) = -r.at(static_cast<int>(pi), fc);
  }
  return ns;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("solve shape mismatch");
  RatMat aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols) return std::nullopt;  // pivot in augmented column
  RatVec x(a.cols);
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug.at(static_cast<int>(pi), a.cols);
  return x;
}

Rational det(RatMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square");
  Rational d = 1;
  for (int col = 0; col < m.cols; ++col) {
    int p = -1;
    for (int i = col; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) * inv;
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square");
  const int n = m.rows;
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace conelat
