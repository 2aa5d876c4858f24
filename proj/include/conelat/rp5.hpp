#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelat/cone.hpp"
#include "conelat/poly.hpp"
#include "conelat/ratlin.hpp"

namespace conelat {

// Variable indices into Poly's a..f slots.
enum Var : int { VA = 0, VB = 1, VC = 2, VD = 3, VE = 4, VF = 5 };

// 3x3 matrix of polynomials.
using PolyMat3 = std::array<std::array<Poly, 3>, 3>;

Poly det3(const PolyMat3& m);

// The three displayed 3x3 matrices cutting out the conditions for the
// parametrized plane to meet S4, S5, S6; which in {4, 5, 6}. Entries are
// affine polynomials in a..f.
PolyMat3 condition_matrix(int which);
Poly det_condition(int which);

// Row i = (coeff of e, coeff of f, value at e=f=0) of det_condition(i+4),
// re-derived symbolically from the determinants.
PolyMat3 combined_matrix();

// The same matrix as printed in the source text, hardcoded entry by entry.
PolyMat3 printed_combined_matrix();

// Entrywise comparison; returns human-readable diff lines, empty when the
// matrices agree exactly.
std::vector<std::string> combined_matrix_diff();

// Determinant of combined_matrix(): the condition on (a,b,c,d) for the three
// constraints to admit a common (e,f).
Poly combined_condition();

// Exact factorization of q(a,b) = combined_condition at fixed rational
// (c,d) into linear * quadratic over Q; the linear factor is returned with
// coprime integer coefficients. Throws CheckFailure when no rational linear
// factor exists (degenerate (c,d)).
std::pair<Poly, Poly> factor_condition(const Rational& c, const Rational& d);

// Divide p by a polynomial ell of degree 1 in variable var; returns the
// quotient when the remainder vanishes exactly, nullopt otherwise.
std::optional<Poly> poly_divide_linear(const Poly& p, const Poly& ell,
                                       int var);

// ---------------------------------------------------------------------------
// Geometry of the seven-point configuration in R^5, exact rational layer.

struct RatFlat {
  RatVec point;              // base point, length 5
  std::vector<RatVec> dirs;  // direction basis, each length 5
  int dim() const { return (int)dirs.size(); }
};

// Affine span of u1=(a,b,0,0,0), u2=(0,0,c,d,0), u3=(e,e,e,e,f). Throws
// domain_error when the generators are affinely dependent.
RatFlat section_plane(const std::array<Rational, kNumVars>& params);

// p0 = 0, p1..p5 = e1..e5, p6 = (1,1,1,1,1).
std::vector<RatVec> seven_points();

// Substitutions forcing the parametrized plane through p_k: list of
// (var, value) pairs, k in 0..6.
std::vector<std::pair<int, Rational>> family_constraints(int k);

bool flat_contains(const RatFlat& fl, const RatVec& pt);
bool flats_meet(const RatFlat& f1, const RatFlat& f2);

// Incidence triples of S1..S6, derived: S1..S3 by direct membership of the
// seven points in the parametrization's base spans, S4..S6 as the set of
// point families whose substitution kills the corresponding determinant
// identically.
std::vector<std::array<int, 3>> incidence_triples();

// Frozen expected table.
std::vector<std::array<int, 3>> incidence_reference();

// The six base spans, each the affine span of its incidence triple.
std::vector<RatFlat> base_spans();

// Deterministic derivation transcript of the incidence table.
std::string incidence_transcript();

// ---------------------------------------------------------------------------
// The canonical body: trace slice of C3(R) carried to the normal form.

// Canonical unit vectors v0..v6 in R^3 realizing the incidence pattern.
std::vector<RatVec> canonical_vectors();

// Rank-one projectors v v^T / |v|^2 as exact symmetric coordinate 6-vectors
// in the order (A11, A22, A33, A12, A13, A23).
std::vector<RatVec> canonical_projector_coords();
std::vector<Herm> canonical_projectors();

HermQ sym_to_herm(const RatVec& c);
RatVec herm_to_sym(const HermQ& h);

// Projective frame map: the 6x6 rational matrix T with T*src[k] proportional
// to dst[k] for k = 0..6 (seven points in general position each). Unique up
// to scale; throws CheckFailure on degenerate input.
RatMat projective_frame_map(const std::vector<RatVec>& src,
                            const std::vector<RatVec>& dst);

// Frame map sending the canonical projector coordinates to the homogeneous
// normal-form points (p_k; 1).
RatMat canonical_normalization();

// Numeric affine flat in R^5.
struct FlatD {
  Eigen::VectorXd base;
  Eigen::MatrixXd dirs;  // 5 x k, orthonormal columns
};

// Least-squares distance between two affine flats.
double flat_distance(const FlatD& f1, const FlatD& f2);

// Intersection point of two flats; throws CheckFailure when the distance
// exceeds tol or the intersection is not a single point.
Eigen::VectorXd flat_intersection_point(const FlatD& f1, const FlatD& f2,
                                        double tol = 1e-7);

// Image of a flat under a projective map (6x6 on homogeneous coordinates).
FlatD map_flat(const Eigen::MatrixXd& t6, const FlatD& fl);

struct SevenPointConfig {
  std::vector<Eigen::VectorXd> pts;         // 7 points in R^5
  std::vector<std::array<int, 3>> triples;  // incidence table
};

// A 5-dimensional body with the seven-point face structure: the trace slice
// of C3(R) viewed through a projective chart map H (6x6 on homogeneous
// coordinates; column space convention x_body = dehom(H * (sym coords))).
class R5Body {
 public:
  // Normal-form model: H = canonical_normalization().
  static R5Body canonical();

  // The body transformed by an invertible projective/linear map of R^5
  // given as a 6x6 homogeneous matrix.
  R5Body transformed(const Eigen::MatrixXd& t6) const;

  const SevenPointConfig& config() const { return cfg_; }
  const Eigen::MatrixXd& chart_matrix() const { return h_; }

  // Chart map and inverse between slice elements and body coordinates.
  Eigen::VectorXd to_body(const Herm& a) const;
  Herm from_body(const Eigen::VectorXd& x) const;

  bool contains(const Eigen::VectorXd& x, double tol = 1e-8) const;

  // Span (2-flat) of the face of the body generated by two extreme points.
  FlatD span_through(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Span of the face generated by configured points i, j.
  FlatD span_of_pair(int i, int j) const;

  // Flat of the face F_W for a 2-dim range subspace W of R^3.
  FlatD face_flat(const Eigen::MatrixXd& w) const;

  // Random face span / random 2-flat in R^5.
  FlatD random_face_span(Rng& rng) const;

  // Residual of "fl is the span of a face": pull three points back to the
  // slice and measure the common rank-2 support defect.
  double face_span_residual(const FlatD& fl) const;

  // Extreme-point membership residual for a body point (pullback is PSD
  // rank one after trace normalization).
  double extreme_point_residual(const Eigen::VectorXd& x) const;

  // Random extreme point of the body (image of a random rank-one projector).
  Eigen::VectorXd random_extreme_point(Rng& rng) const;

  // Boundary samples of the face through configured pair (i,j): images of
  // the rank-one circle in the face's range plane.
  std::vector<Eigen::VectorXd> face_boundary_samples(int i, int j, int count,
                                                     double offset = 0.0) const;

 private:
  Eigen::MatrixXd h_, hinv_;  // 6x6 chart and inverse
  SevenPointConfig cfg_;
};

SevenPointConfig canonical_config();

// Lemma "spans" test: fl meets the six base spans of the config and
// n_samples additional face spans of the body, all within tol.
bool spans_check(const FlatD& fl, const R5Body& body, int n_samples,
                 uint64_t seed, double tol = 1e-8);

// Conic fit: fit a conic to boundary samples of face (i,j) in its span
// coordinates and return the max algebraic residual on held-out samples.
double face_conic_residual(const R5Body& body, int i, int j, int fit_samples,
                           int test_samples);

// Projective equivalence per the Theorem "dim5" proof: transports the
// configuration of A into B via face-span intersections and returns the 6x6
// homogeneous map. Throws CheckFailure("configB inconsistent") when the
// required span intersections fail.
struct ProjectiveMatch {
  Eigen::MatrixXd t6;      // 6x6 homogeneous map A -> B
  double frame_residual;   // max misalignment over the seven points
};

ProjectiveMatch projective_equivalence(const R5Body& a, const R5Body& b,
                                       double tol = 1e-7);

}  // namespace conelat
