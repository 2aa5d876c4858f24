#pragma once

#include <json.hpp>

#include "conelat/algebra.hpp"
#include "conelat/rng.hpp"

namespace conelat {

// Element of H_3(O):
//   [[ a,       z,       y      ],
//    [ conj(z), b,       x      ],
//    [ conj(y), conj(x), c      ]]
// with a, b, c real and x, y, z octonions, under the Jordan product.
class AlbertElement {
 public:
  AlbertElement() : m_(Field::O, 3) {}
  AlbertElement(double a, double b, double c, const Alg& x, const Alg& y,
                const Alg& z);
  static AlbertElement from_herm(const Herm& h);
  static AlbertElement identity();
  static AlbertElement diag_unit(int i);  // E_ii

  const Herm& herm() const { return m_; }
  double diag(int i) const { return m_.at(i, i).re(); }
  Alg x() const { return m_.at(1, 2); }
  Alg y() const { return m_.at(0, 2); }
  Alg z() const { return m_.at(0, 1); }

  AlbertElement operator+(const AlbertElement& o) const;
  AlbertElement operator-(const AlbertElement& o) const;
  AlbertElement operator*(double s) const;

 private:
  Herm m_;  // Field::O, 3x3
};

AlbertElement jordan(const AlbertElement& a, const AlbertElement& b);
double trace(const AlbertElement& a);
double inner(const AlbertElement& a, const AlbertElement& b);  // tr(a o b)
double fro_norm(const AlbertElement& a);
bool approx_eq(const AlbertElement& a, const AlbertElement& b,
               double tol = kDefaultTol);

// Quadratic characteristic coefficient sigma = ((tr A)^2 - tr(A o A)) / 2.
double sigma(const AlbertElement& a);

// Freudenthal cubic form
// det A = abc - a n(x) - b n(y) - c n(z) + 2 Re((z x) conj(y)).
double det(const AlbertElement& a);

// Independent determinant route through Jordan power traces:
// det A = (tr(A^3) - tr A tr(A^2) + sigma(A) tr A) / 3.
double det_trace_oracle(const AlbertElement& a);

// Roots of the characteristic cubic t^3 - (tr)t^2 + (sigma)t - det,
// ascending. Throws CheckFailure when the discriminant is significantly
// negative (the element would have non-real spectrum).
std::array<double, 3> albert_eigenvalues(const AlbertElement& a,
                                         double disc_tol = 1e-8);

int albert_rank(const AlbertElement& a, double tol = 1e-7);

// Membership in the cone of squares: all characteristic roots nonnegative,
// decided through the coefficient signs.
bool cone_member(const AlbertElement& a, double tol = 1e-8);

bool is_idempotent(const AlbertElement& a, double tol = 1e-8);

// Rank-one trace-one idempotent: a point of the octonionic projective plane.
bool is_projective_point(const AlbertElement& a, double tol = 1e-7);

// Affine chart of OP^2: the point spanned by the (right) homogeneous vector
// (x, y, 1).
AlbertElement chart_point(const Alg& x, const Alg& y);

// Freudenthal cross product; for distinct projective points P, Q the
// normalization of P x Q is the dual coordinate of the line through them.
AlbertElement freudenthal_cross(const AlbertElement& p, const AlbertElement& q);

struct AlbertLine {
  AlbertElement r;  // rank-one trace-one dual coordinate
};

AlbertLine line_through(const AlbertElement& p, const AlbertElement& q);
AlbertElement meet_of_lines(const AlbertLine& l1, const AlbertLine& l2);
bool incident(const AlbertElement& p, const AlbertLine& l, double tol = 1e-7);

// A lies in the face of the cone cut out by the idempotent e, decided by the
// ladder test e - lambda A psd for some lambda in {1e-1, ..., 1e-6}.
bool in_face(const AlbertElement& a, const AlbertElement& e,
             double tol = 1e-8);

// Entry relabeling A |-> (A_{perm(i), perm(j)}); a Jordan automorphism.
AlbertElement permuted(const AlbertElement& a, const std::array<int, 3>& perm);

AlbertElement rand_albert(Rng& rng);
AlbertElement rand_albert_psd(Rng& rng);  // square of a random element

nlohmann::json to_json(const AlbertElement& a);
AlbertElement albert_from_json(const nlohmann::json& j);

}  // namespace conelat
