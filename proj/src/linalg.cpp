#include "conelat/linalg.hpp"

#include <Eigen/SVD>

namespace conelat {

namespace {

void require_module_field(Field f) {
  if (f == Field::O)
    throw std::domain_error("octonion columns do not form a module");
}

double col_norm(const AlgMat& m, int j) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i) s += m.at(i, j).norm2();
  return std::sqrt(s);
}

}  // namespace

Alg dot(const AlgMat& u, const AlgMat& v) {
  if (u.rows() != v.rows() || u.field() != v.field())
    throw std::invalid_argument("dot shape mismatch");
  Alg s(u.field());
  for (int i = 0; i < u.rows(); ++i)
    s = s + u.at(i, 0).conj() * v.at(i, 0);
  return s;
}

AlgMat orthonormalize(const AlgMat& cols, double cutoff) {
  require_module_field(cols.field());
  const Field f = cols.field();
  const int n = cols.rows(), m = cols.cols();
  double scale = 0.0;
  for (int j = 0; j < m; ++j) scale = std::max(scale, col_norm(cols, j));
  if (scale == 0.0) return AlgMat(f, n, 0);

  AlgMat work = cols;
  std::vector<int> remaining(m);
  for (int j = 0; j < m; ++j) remaining[j] = j;
  std::vector<AlgMat> qs;

  while (static_cast<int>(qs.size()) < n) {
    // pivot: remaining column of largest residual norm
    int best = -1;
    double best_norm = cutoff * scale;
    for (int idx : remaining) {
      double nr = col_norm(work, idx);
      if (nr > best_norm) {
        best_norm = nr;
        best = idx;
      }
    }
    if (best < 0) break;

    AlgMat q = work.col(best);
    // second orthogonalization pass for stability
    for (const AlgMat& p : qs) {
      Alg coef = dot(p, q);
      for (int i = 0; i < n; ++i)
        q.at(i, 0) = q.at(i, 0) - p.at(i, 0) * coef;
    }
    double nq = col_norm(q, 0);
    if (nq <= cutoff * scale) {
      remaining.erase(std::find(remaining.begin(), remaining.end(), best));
      continue;
    }
    for (int i = 0; i < n; ++i) q.at(i, 0) = q.at(i, 0) * (1.0 / nq);
    qs.push_back(q);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    for (int idx : remaining) {
      AlgMat c = work.col(idx);
      Alg coef = dot(q, c);
      for (int i = 0; i < n; ++i)
        work.at(i, idx) = c.at(i, 0) - q.at(i, 0) * coef;
    }
    if (static_cast<int>(qs.size()) == n) break;
  }

  AlgMat out(f, n, static_cast<int>(qs.size()));
  for (size_t j = 0; j < qs.size(); ++j) out.set_col(static_cast<int>(j), qs[j]);
  return out;
}

int rank_of(const AlgMat& m, double cutoff) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  require_module_field(m.field());
  Eigen::MatrixXcd x = realify(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double top = sv(0);
  if (top == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff * top) ++r;
  int k = realify_factor(m.field());
  if (r % k != 0)
    throw std::runtime_error("realified rank not divisible by field factor");
  return r / k;
}

Subspace span_of_columns(const AlgMat& cols) {
  AlgMat b = orthonormalize(cols);
  int r = rank_of(cols);
  if (b.cols() != r)
    throw std::runtime_error(
        "rank disagreement between pivoted MGS and realified SVD");
  return Subspace{cols.field(), cols.rows(), b};
}

Subspace range_of(const Herm& h) { return span_of_columns(h.mat()); }

Subspace kernel_of(const Herm& h) { return complement(range_of(h)); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.field != v.field || u.n != v.n)
    throw std::invalid_argument("subspace ambient mismatch");
  AlgMat cat(u.field, u.n, u.dim() + v.dim());
  for (int j = 0; j < u.dim(); ++j) cat.set_col(j, u.basis.col(j));
  for (int j = 0; j < v.dim(); ++j) cat.set_col(u.dim() + j, v.basis.col(j));
  return span_of_columns(cat);
}

Subspace complement(const Subspace& u) {
  const Field f = u.field;
  const int n = u.n;
  require_module_field(f);
  // orthogonalize the standard basis against u; unpivoted so that u's basis
  // is kept verbatim and exactly n - dim(u) new columns survive
  std::vector<AlgMat> qs;
  for (int j = 0; j < u.dim(); ++j) qs.push_back(u.basis.col(j));
  std::vector<AlgMat> comp;
  for (int e = 0; e < n && static_cast<int>(qs.size()) < n; ++e) {
    AlgMat v(f, n, 1);
    v.at(e, 0) = Alg::one(f);
    for (int pass = 0; pass < 2; ++pass)
      for (const AlgMat& p : qs) {
        Alg coef = dot(p, v);
        for (int i = 0; i < n; ++i)
          v.at(i, 0) = v.at(i, 0) - p.at(i, 0) * coef;
      }
    double nv = col_norm(v, 0);
    if (nv <= 1e-7) continue;
    for (int i = 0; i < n; ++i) v.at(i, 0) = v.at(i, 0) * (1.0 / nv);
    qs.push_back(v);
    comp.push_back(v);
  }
  if (static_cast<int>(comp.size()) != n - u.dim())
    throw std::runtime_error("complement dimension mismatch");
  AlgMat out(f, n, static_cast<int>(comp.size()));
  for (size_t j = 0; j < comp.size(); ++j)
    out.set_col(static_cast<int>(j), comp[j]);
  return Subspace{f, n, out};
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  return complement(subspace_sum(complement(u), complement(v)));
}

Herm projector(const Subspace& u) {
  return Herm::hermitize(u.basis * u.basis.adjoint());
}

double subspace_distance(const Subspace& u, const Subspace& v) {
  if (u.field != v.field || u.n != v.n)
    throw std::invalid_argument("subspace ambient mismatch");
  return fro_norm(projector(u) - projector(v));
}

bool subspace_leq(const Subspace& u, const Subspace& v, double tol) {
  // u <= v iff P_v P_u = P_u
  Herm pu = projector(u), pv = projector(v);
  AlgMat resid = pv.mat() * pu.mat() - pu.mat();
  return fro_norm(resid) <= tol * (1.0 + u.dim());
}

Herm compress(const Herm& h, const AlgMat& basis) {
  AlgMat c = basis.adjoint() * (h.mat() * basis);
  return Herm::hermitize(c);
}

Alg rand_alg(Rng& rng, Field f) {
  Alg a(f);
  for (int i = 0; i < a.dim(); ++i) a[i] = rng.normal();
  return a;
}

AlgMat rand_mat(Rng& rng, Field f, int rows, int cols) {
  AlgMat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_alg(rng, f);
  return m;
}

Herm rand_herm(Rng& rng, Field f, int n) {
  return Herm::hermitize(rand_mat(rng, f, n, n));
}

Herm rand_psd(Rng& rng, Field f, int n, int rank) {
  if (rank < 0 || rank > n) throw std::invalid_argument("bad rank");
  if (rank == 0) return Herm(f, n);
  AlgMat g = rand_mat(rng, f, n, rank);
  return Herm::hermitize(g * g.adjoint());
}

AlgMat rand_unit_column(Rng& rng, Field f, int n) {
  AlgMat v = rand_mat(rng, f, n, 1);
  double nv = 0.0;
  for (int i = 0; i < n; ++i) nv += v.at(i, 0).norm2();
  nv = std::sqrt(nv);
  if (nv < 1e-12) return rand_unit_column(rng, f, n);
  for (int i = 0; i < n; ++i) v.at(i, 0) = v.at(i, 0) * (1.0 / nv);
  return v;
}

}  // namespace conelat
