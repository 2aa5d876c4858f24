#pragma once

#include <functional>
#include <optional>

#include "conelat/linalg.hpp"

namespace conelat {

// Face of the PSD cone over F^n, recorded through the lattice isomorphism
// nu(F_W) = W: the face is {A psd : range(A) <= W}.
struct Face {
  Field field = Field::R;
  int n = 0;
  Subspace range;

  int rank() const { return range.dim(); }
  static Face apex(Field f, int n) { return Face{f, n, Subspace::zero(f, n)}; }
  static Face full(Field f, int n) { return Face{f, n, Subspace::full(f, n)}; }
};

// Minimal face of the cone containing a PSD matrix.
Face face_of(const Herm& a, double psd_tol = 1e-8);

Face face_join(const Face& f, const Face& g);
Face face_meet(const Face& f, const Face& g);
bool face_leq(const Face& f, const Face& g, double tol = 1e-8);
bool face_eq(const Face& f, const Face& g, double tol = 1e-8);

// Real dimension of the cone face with nu-subspace of F-dimension k.
inline int face_dim_formula(Field f, int k) { return herm_dim(f, k); }

// Dimension of a compact convex body whose face lattice has rank n over the
// coordinate algebra of dimension d: n(n-1)/2 * d + n - 1.
inline int predicted_dimension(int n_rank, int d) {
  if (n_rank < 2 || (d != 1 && d != 2 && d != 4 && d != 8))
    throw std::invalid_argument("predicted_dimension: rank >= 2, d in {1,2,4,8}");
  return n_rank * (n_rank - 1) / 2 * d + n_rank - 1;
}

// A psd and supported on nu(F)?
bool in_face(const Herm& a, const Face& f, double tol = 1e-8);

// Compact base {A psd, <M,A> = 1}; compact iff M is positive definite.
struct SlicedBody {
  Field field = Field::R;
  int n = 0;
  Herm slice;  // M

  static SlicedBody trace_slice(Field f, int n) {
    return SlicedBody{f, n, Herm::identity(f, n)};
  }
  bool is_trace_slice(double tol = 1e-12) const {
    return approx_eq(slice, Herm::identity(field, n), tol);
  }
  bool is_compact(double cutoff = kRankCutoff) const;
  bool contains(const Herm& a, double tol = 1e-8) const;
  // affine dimension of the body when compact: dim Herm_n - 1
  int dimension() const { return herm_dim(field, n) - 1; }
};

// Orthonormal basis of Herm_k(F) for the pairing <X,Y> = Re tr(XY).
std::vector<Herm> herm_basis(Field f, int k);
std::vector<double> herm_coords(const Herm& a);
Herm herm_from_coords(Field f, int k, const std::vector<double>& c);

// Barycenter of the face F cap body. Exact formula P_W / dim_F(W) on the
// trace slice; hit-and-run Monte Carlo average on other compact slices
// (approximate; mc_samples controls the chain length). Throws for the apex
// face (empty intersection with the slice) and for faces on which the body
// is unbounded.
Herm face_barycenter(const Face& f, const SlicedBody& body,
                     int mc_samples = 4000, std::uint64_t seed = 12345);

struct RadialDecomposition {
  Herm b;         // barycenter of the minimal face of a
  Herm p;         // relative-boundary point of that face
  double lambda;  // a = (1-lambda) b + lambda p, 0 <= lambda <= 1
};

RadialDecomposition radial_decompose(const Herm& a, const SlicedBody& body,
                                     int mc_samples = 4000,
                                     std::uint64_t seed = 12345);

// Extends a map given on rank-one slice points (extreme points) to the whole
// body by the radial recursion phi(a) = (1-lambda) phi(b) + lambda phi(p).
// vmap must send extreme points of bodyA to points of bodyB; images of faces
// are reconstructed by joining images of sampled extreme points.
Herm radial_extend(const std::function<Herm(const Herm&)>& vmap,
                   const SlicedBody& body_a, const SlicedBody& body_b,
                   const Herm& a, int mc_samples = 2000,
                   std::uint64_t seed = 999);

// Support function of F cap body in direction d (unit Frobenius suggested):
// the largest generalized eigenvalue of (B* d B, B* M B).
double support_value(const Face& f, const SlicedBody& body, const Herm& d);

// Sampled Hausdorff estimate max_i |h_F(D_i) - h_G(D_i)| over random unit
// directions; a lower bound that vanishes iff the faces agree.
double hausdorff_distance(const Face& f, const Face& g, const SlicedBody& body,
                          int n_dirs, Rng& rng);

// Random rank-one element of F cap body (an extreme point of the body).
Herm extreme_point_on(const Face& f, const SlicedBody& body, Rng& rng);

// Random slice point supported on the face (relative interior almost surely).
Herm random_point_on(const Face& f, const SlicedBody& body, Rng& rng);

}  // namespace conelat
