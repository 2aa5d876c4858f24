#include <doctest.h>

#include "conelat/linalg.hpp"
#include "conelat/rng.hpp"

using namespace conelat;

namespace {

bool is_orthonormal(const AlgMat& b, double tol = 1e-9) {
  AlgMat g = b.adjoint() * b;
  AlgMat id = AlgMat::identity(b.field(), b.cols());
  return fro_norm(g - id) <= tol * (1.0 + b.cols());
}

}  // namespace

TEST_CASE("MGS produces orthonormal spanning sets") {
  Rng rng(derive_seed(20260815, 2, 0));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 30; ++t) {
      int n = 4, k = 1 + t % 4;
      AlgMat g = rand_mat(rng, f, n, k);
      AlgMat padded(f, n, 2 * k);  // duplicate columns to force pivot drops
      for (int j = 0; j < k; ++j) {
        padded.set_col(j, g.col(j));
        padded.set_col(k + j, g.col(j) * 2.0);
      }
      AlgMat q = orthonormalize(padded);
      CHECK(q.cols() == k);
      CHECK(is_orthonormal(q));
      CHECK(rank_of(padded) == k);
    }
  }
}

TEST_CASE("rank via realified SVD counts F-dimension") {
  Rng rng(derive_seed(20260815, 2, 1));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int r = 0; r <= 3; ++r) {
      Herm a = rand_psd(rng, f, 3, r);
      CHECK(rank_of(a) == r);
    }
  }
}

TEST_CASE("subspace sum, complement, intersection") {
  Rng rng(derive_seed(20260815, 2, 2));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 25; ++t) {
      int n = 4;
      Subspace u = span_of_columns(rand_mat(rng, f, n, 2));
      Subspace v = span_of_columns(rand_mat(rng, f, n, 2));
      Subspace s = subspace_sum(u, v);
      Subspace i = subspace_intersect(u, v);
      CHECK(s.dim() + i.dim() == u.dim() + v.dim());  // modular dimension law
      CHECK(subspace_leq(u, s));
      CHECK(subspace_leq(v, s));
      CHECK(subspace_leq(i, u));
      CHECK(subspace_leq(i, v));
      Subspace c = complement(u);
      CHECK(c.dim() == n - u.dim());
      CHECK(subspace_intersect(u, c).dim() == 0);
      CHECK(subspace_sum(u, c).dim() == n);
      CHECK(subspace_distance(complement(c), u) <= 1e-8);
    }
  }
}

TEST_CASE("kernel and range of hermitian matrices are complementary") {
  Rng rng(derive_seed(20260815, 2, 3));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int r = 0; r <= 4; ++r) {
      Herm a = rand_psd(rng, f, 4, r);
      Subspace rg = range_of(a), ker = kernel_of(a);
      CHECK(rg.dim() == r);
      CHECK(ker.dim() == 4 - r);
      // A annihilates its kernel
      AlgMat prod = a.mat() * ker.basis;
      CHECK(fro_norm(prod) <= 1e-7 * (1.0 + fro_norm(a)));
    }
  }
}

TEST_CASE("projector and subspace distance") {
  Rng rng(derive_seed(20260815, 2, 4));
  for (Field f : {Field::R, Field::C, Field::H}) {
    Subspace u = span_of_columns(rand_mat(rng, f, 4, 2));
    Herm p = projector(u);
    CHECK(approx_eq(jordan(p, p), p, 1e-8));  // idempotent
    CHECK(is_psd(p));
    CHECK(p.trace() == doctest::Approx(2.0).epsilon(1e-9));
    // distance separates subspaces and vanishes on reordered bases
    AlgMat swapped(f, 4, 2);
    swapped.set_col(0, u.basis.col(1));
    swapped.set_col(1, u.basis.col(0));
    CHECK(subspace_distance(u, Subspace{f, 4, swapped}) <= 1e-10);
    Subspace w = span_of_columns(rand_mat(rng, f, 4, 2));
    CHECK(subspace_distance(u, w) > 1e-3);
  }
}

TEST_CASE("compression against orthonormal basis") {
  Rng rng(derive_seed(20260815, 2, 5));
  for (Field f : {Field::R, Field::C, Field::H}) {
    Herm a = rand_psd(rng, f, 4, 4);
    Subspace u = span_of_columns(rand_mat(rng, f, 4, 2));
    Herm c = compress(a, u.basis);
    CHECK(c.n() == 2);
    CHECK(is_psd(c));  // compression preserves positivity
  }
}
