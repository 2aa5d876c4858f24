#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "conelat/common.hpp"
#include "conelat/rational.hpp"

namespace conelat {

namespace detail {

// Cayley-Dickson product on coefficient spans of length d (d = 1,2,4,8):
// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
template <class S>
void cd_conj(const S* a, S* out, int d) {
  out[0] = a[0];
  for (int i = 1; i < d; ++i) out[i] = -a[i];
}

template <class S>
void cd_mul(const S* x, const S* y, S* out, int d) {
  if (d == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = d / 2;
  const S* a = x;
  const S* b = x + h;
  const S* c = y;
  const S* e = y + h;
  std::array<S, 4> t1, t2, cj;
  cd_conj(e, cj.data(), h);
  cd_mul(a, c, t1.data(), h);
  cd_mul(cj.data(), b, t2.data(), h);
  for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  cd_mul(e, a, t1.data(), h);
  cd_conj(c, cj.data(), h);
  cd_mul(b, cj.data(), t2.data(), h);
  for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace detail

// Element of R, C, H or O with scalar type S (double, or Rational for the
// exact backend). Coefficients indexed in the Cayley-Dickson basis e0..e7,
// e0 = 1; for H the basis is [1, i, j, k] with k = ij.
template <class S>
class AlgT {
 public:
  AlgT() : field_(Field::R) { c_.fill(S(0)); }
  explicit AlgT(Field f) : field_(f) { c_.fill(S(0)); }
  AlgT(Field f, std::initializer_list<S> cs) : field_(f) {
    c_.fill(S(0));
    if (static_cast<int>(cs.size()) > dim())
      throw std::invalid_argument("too many coefficients");
    int i = 0;
    for (const S& v : cs) c_[i++] = v;
  }

  static AlgT zero(Field f) { return AlgT(f); }
  static AlgT one(Field f) {
    AlgT r(f);
    r.c_[0] = S(1);
    return r;
  }
  static AlgT unit(Field f, int k) {
    AlgT r(f);
    if (k < 0 || k >= r.dim()) throw std::invalid_argument("unit index");
    r.c_[k] = S(1);
    return r;
  }
  static AlgT scalar(Field f, const S& v) {
    AlgT r(f);
    r.c_[0] = v;
    return r;
  }

  Field field() const { return field_; }
  int dim() const { return field_dim(field_); }
  const S& operator[](int i) const { return c_[i]; }
  S& operator[](int i) { return c_[i]; }

  AlgT operator+(const AlgT& o) const {
    check(o);
    AlgT r(field_);
    for (int i = 0; i < dim(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  AlgT operator-(const AlgT& o) const {
    check(o);
    AlgT r(field_);
    for (int i = 0; i < dim(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  AlgT operator-() const {
    AlgT r(field_);
    for (int i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  AlgT operator*(const AlgT& o) const {
    check(o);
    AlgT r(field_);
    detail::cd_mul(c_.data(), o.c_.data(), r.c_.data(), dim());
    return r;
  }
  AlgT operator*(const S& s) const {
    AlgT r(field_);
    for (int i = 0; i < dim(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  friend AlgT operator*(const S& s, const AlgT& a) { return a * s; }

  AlgT conj() const {
    AlgT r(field_);
    detail::cd_conj(c_.data(), r.c_.data(), dim());
    return r;
  }
  S re() const { return c_[0]; }
  S norm2() const {
    S s(0);
    for (int i = 0; i < dim(); ++i) s += c_[i] * c_[i];
    return s;
  }
  // Multiplicative inverse conj(x)/n(x); throws on zero.
  AlgT inverse() const {
    S n = norm2();
    if (n == S(0)) throw std::domain_error("inverse of zero");
    AlgT r = conj();
    for (int i = 0; i < dim(); ++i) r.c_[i] = r.c_[i] / n;
    return r;
  }

  bool operator==(const AlgT& o) const {
    return field_ == o.field_ && c_ == o.c_;
  }

 private:
  void check(const AlgT& o) const {
    if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  }
  Field field_;
  std::array<S, 8> c_;
};

using Alg = AlgT<double>;
using AlgQ = AlgT<Rational>;

inline double abs_val(const Alg& a) { return std::sqrt(a.norm2()); }

inline bool approx_eq(const Alg& a, const Alg& b, double tol = kDefaultTol) {
  if (a.field() != b.field()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!approx_eq(a[i], b[i], tol)) return false;
  return true;
}

// Rectangular matrix over the algebra. Products keep operand order; for O
// they are not associative and code downstream never relies on it.
template <class S>
class MatT {
 public:
  MatT() : field_(Field::R), rows_(0), cols_(0) {}
  MatT(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows * cols), AlgT<S>(f)) {}

  static MatT identity(Field f, int n) {
    MatT m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = AlgT<S>::one(f);
    return m;
  }

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  AlgT<S>& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const AlgT<S>& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  MatT operator+(const MatT& o) const {
    check_shape(o);
    MatT r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  MatT operator-(const MatT& o) const {
    check_shape(o);
    MatT r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  MatT operator*(const S& s) const {
    MatT r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }
  friend MatT operator*(const S& s, const MatT& m) { return m * s; }

  MatT operator*(const MatT& o) const {
    if (field_ != o.field_ || cols_ != o.rows_)
      throw std::invalid_argument("shape/field mismatch in matrix product");
    MatT r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        AlgT<S> s(field_);
        for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  MatT adjoint() const {
    MatT r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
  }

  AlgT<S> trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square");
    AlgT<S> s(field_);
    for (int i = 0; i < rows_; ++i) s = s + at(i, i);
    return s;
  }

  MatT col(int j) const {
    MatT r(field_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
  }
  void set_col(int j, const MatT& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = c.at(i, 0);
  }

 private:
  void check_shape(const MatT& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape/field mismatch");
  }
  Field field_;
  int rows_, cols_;
  std::vector<AlgT<S>> e_;
};

using AlgMat = MatT<double>;
using AlgMatQ = MatT<Rational>;

inline double fro_norm(const AlgMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += m.at(i, j).norm2();
  return std::sqrt(s);
}

inline bool approx_eq(const AlgMat& a, const AlgMat& b,
                      double tol = kDefaultTol) {
  if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!approx_eq(a.at(i, j), b.at(i, j), tol)) return false;
  return true;
}

template <class S>
bool is_hermitian(const MatT<S>& m, double tol);

template <>
inline bool is_hermitian<double>(const MatT<double>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (!approx_eq(m.at(i, i), Alg::scalar(m.field(), m.at(i, i).re()), tol))
      return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (!approx_eq(m.at(i, j), m.at(j, i).conj(), tol)) return false;
  }
  return true;
}

template <>
inline bool is_hermitian<Rational>(const MatT<Rational>& m, double) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (!(m.at(i, i) == m.at(i, i).conj())) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (!(m.at(i, j) == m.at(j, i).conj())) return false;
  }
  return true;
}

// Hermitian square matrix; construction validates the invariant.
template <class S>
class HermT {
 public:
  HermT() = default;
  explicit HermT(Field f, int n) : m_(f, n, n) {}

  static HermT from_checked(const MatT<S>& m, double tol = kDefaultTol) {
    if (!is_hermitian(m, tol))
      throw std::invalid_argument("matrix is not Hermitian");
    HermT h;
    h.m_ = m;
    h.symmetrize();
    return h;
  }
  // (M + M*)/2; use on results of float arithmetic that are Hermitian only
  // up to roundoff.
  static HermT hermitize(const MatT<S>& m) {
    HermT h;
    h.m_ = m;
    h.symmetrize();
    return h;
  }
  static HermT identity(Field f, int n) {
    HermT h;
    h.m_ = MatT<S>::identity(f, n);
    return h;
  }

  Field field() const { return m_.field(); }
  int n() const { return m_.rows(); }
  const MatT<S>& mat() const { return m_; }
  const AlgT<S>& at(int i, int j) const { return m_.at(i, j); }
  void set(int i, int j, const AlgT<S>& v) {
    m_.at(i, j) = v;
    if (i != j) m_.at(j, i) = v.conj();
    else m_.at(i, i) = AlgT<S>::scalar(field(), v.re());
  }

  HermT operator+(const HermT& o) const { return wrap(m_ + o.m_); }
  HermT operator-(const HermT& o) const { return wrap(m_ - o.m_); }
  HermT operator*(const S& s) const { return wrap(m_ * s); }
  friend HermT operator*(const S& s, const HermT& h) { return h * s; }

  S trace() const { return m_.trace().re(); }

 private:
  static HermT wrap(MatT<S> m) {
    HermT h;
    h.m_ = std::move(m);
    return h;
  }
  void symmetrize() {
    const Field f = m_.field();
    const S half = S(1) / S(2);
    for (int i = 0; i < m_.rows(); ++i) {
      m_.at(i, i) = AlgT<S>::scalar(f, m_.at(i, i).re());
      for (int j = i + 1; j < m_.cols(); ++j) {
        AlgT<S> v = (m_.at(i, j) + m_.at(j, i).conj()) * half;
        m_.at(i, j) = v;
        m_.at(j, i) = v.conj();
      }
    }
  }
  MatT<S> m_;
};

using Herm = HermT<double>;
using HermQ = HermT<Rational>;

// Jordan product (AB + BA)/2.
template <class S>
HermT<S> jordan(const HermT<S>& a, const HermT<S>& b) {
  MatT<S> p = a.mat() * b.mat() + b.mat() * a.mat();
  return HermT<S>::hermitize(p * (S(1) / S(2)));
}

// Frobenius pairing <A,B> = Re tr(AB); real for Hermitian arguments.
inline double inner(const Herm& a, const Herm& b) {
  return (a.mat() * b.mat()).trace().re();
}

inline double fro_norm(const Herm& a) { return fro_norm(a.mat()); }

inline bool approx_eq(const Herm& a, const Herm& b, double tol = kDefaultTol) {
  return approx_eq(a.mat(), b.mat(), tol);
}

// --- complex realification -------------------------------------------------
//
// chi : M_n(F) -> M_{dn'}(C) is an injective *-algebra homomorphism for
// F in {R, C, H}; H uses the 2x2 block [[z, w], [-conj(w), conj(z)]] per
// quaternion entry z + wj with z = a + bi, w = c + di. Octonion matrices have
// no such representation and realify throws for them.

Eigen::MatrixXcd realify(const AlgMat& m);
inline Eigen::MatrixXcd realify(const Herm& h) { return realify(h.mat()); }

// Inverse of realify on its image; block structure validated within tol.
AlgMat from_realified(Field f, const Eigen::MatrixXcd& x,
                      double tol = 1e-8);

// Factor by which complex dimensions of realified objects overcount
// F-dimensions (2 for H, else 1).
inline int realify_factor(Field f) { return f == Field::H ? 2 : 1; }

// Eigenvalues of realify(h), ascending. For F = H each eigenvalue of h
// appears twice.
std::vector<double> eigenvalues_realified(const Herm& h);

// Spectrum with quaternionic doubling collapsed; validates pairing for H.
std::vector<double> spectrum(const Herm& h, double tol = 1e-7);

bool is_psd(const Herm& h, double tol = kDefaultTol);

}  // namespace conelat
