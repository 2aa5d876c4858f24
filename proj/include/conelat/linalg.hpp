#pragma once

#include "conelat/algebra.hpp"
#include "conelat/rng.hpp"

namespace conelat {

// Columns span right F-submodules of F^n; the inner product
// <u,v> = sum_i conj(u_i) v_i is conjugate-linear in the first slot and
// right-linear in the second. Valid for F in {R, C, H}; octonion columns are
// rejected by the entry points that need module structure.

Alg dot(const AlgMat& u, const AlgMat& v);  // n x 1 columns

// Modified Gram-Schmidt with column pivoting; returns an n x r matrix with
// orthonormal columns spanning the column span. Columns whose residual norm
// falls below cutoff * (largest initial column norm) are dropped.
AlgMat orthonormalize(const AlgMat& cols, double cutoff = kRankCutoff);

// Rank over F via singular values of the realification (cutoff relative to
// the largest singular value).
int rank_of(const AlgMat& m, double cutoff = kRankCutoff);
inline int rank_of(const Herm& h, double cutoff = kRankCutoff) {
  return rank_of(h.mat(), cutoff);
}

struct Subspace {
  Field field = Field::R;
  int n = 0;
  AlgMat basis;  // n x k, orthonormal columns

  int dim() const { return basis.cols(); }
  static Subspace zero(Field f, int n) {
    return Subspace{f, n, AlgMat(f, n, 0)};
  }
  static Subspace full(Field f, int n) {
    return Subspace{f, n, AlgMat::identity(f, n)};
  }
};

Subspace span_of_columns(const AlgMat& cols);
Subspace range_of(const Herm& h);
Subspace kernel_of(const Herm& h);  // = complement of range for Hermitian h

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace complement(const Subspace& u);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Orthogonal projector BB* as a Hermitian matrix.
Herm projector(const Subspace& u);

// || P_U - P_V ||_F; zero iff equal subspaces.
double subspace_distance(const Subspace& u, const Subspace& v);

inline bool subspace_eq(const Subspace& u, const Subspace& v,
                        double tol = 1e-8) {
  return u.field == v.field && u.n == v.n && subspace_distance(u, v) <= tol;
}

// True when u is contained in v (projector residual test).
bool subspace_leq(const Subspace& u, const Subspace& v, double tol = 1e-8);

// B* H B restricted/compressed Hermitian matrix (k x k for n x k basis B).
Herm compress(const Herm& h, const AlgMat& basis);

// --- random generators -------------------------------------------------

Alg rand_alg(Rng& rng, Field f);
AlgMat rand_mat(Rng& rng, Field f, int rows, int cols);
Herm rand_herm(Rng& rng, Field f, int n);
// G G* for a random n x rank Gaussian G; rank = n gives a full-rank PSD
// matrix almost surely.
Herm rand_psd(Rng& rng, Field f, int n, int rank);
AlgMat rand_unit_column(Rng& rng, Field f, int n);

}  // namespace conelat
