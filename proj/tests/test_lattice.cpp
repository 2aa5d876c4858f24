#include <doctest.h>

#include "conelat/lattice.hpp"

using namespace conelat;

namespace {

FaceLattice fl_of(const std::string& name) {
  return face_lattice(polytope_corpus().at(name));
}

int affine_dim_expected(const std::string& name) {
  static const std::map<std::string, int> d = {
      {"point", 0},    {"segment", 1},  {"simplex2", 2},
      {"simplex3", 3}, {"simplex4", 4}, {"square", 2},
      {"cube", 3},     {"octahedron", 3}, {"pentagon", 2}};
  return d.at(name);
}

}  // namespace

TEST_CASE("rational linear algebra basics") {
  RatMat a(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
  CHECK(det(a) == Rational(8));
  RatMat inv = inverse(a);
  RatMat prod = a * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(prod.at(i, j) == (i == j ? Rational(1) : Rational(0)));
  RatVec b{1, 0, 0};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(matvec(a, *x) == b);

  RatMat sing(2, 3);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(0, 2) = 3;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  sing.at(1, 2) = 6;
  CHECK(rank_of(sing) == 1);
  RatMat ns = nullspace(sing);
  CHECK(ns.cols == 2);
  RatMat z = sing * ns;
  for (const Rational& v : z.e) CHECK(v == 0);
}

TEST_CASE("face lattice sizes across the corpus") {
  // counts include the empty face and the polytope itself
  CHECK(fl_of("point").lattice.size() == 2);
  CHECK(fl_of("segment").lattice.size() == 4);
  CHECK(fl_of("simplex2").lattice.size() == 8);
  CHECK(fl_of("simplex3").lattice.size() == 16);
  CHECK(fl_of("simplex4").lattice.size() == 32);
  CHECK(fl_of("square").lattice.size() == 10);
  CHECK(fl_of("pentagon").lattice.size() == 12);
  CHECK(fl_of("cube").lattice.size() == 28);
  CHECK(fl_of("octahedron").lattice.size() == 28);
}

TEST_CASE("face lattices are atomistic and complemented, algebra validates") {
  for (const auto& [name, poly] : polytope_corpus()) {
    FaceLattice fl = face_lattice(poly);
    fl.lattice.validate_algebra();
    CHECK(is_atomistic(fl.lattice));
    CHECK(fl.lattice.atoms().size() == poly.vertices.size());
    // top/bottom sanity and dimension grading
    CHECK(fl.face_dims[fl.lattice.bottom()] == -1);
    CHECK(fl.face_dims[fl.lattice.top()] == affine_dim_expected(name));
  }
}

TEST_CASE("modularity matches known classification") {
  CHECK(is_modular(fl_of("point").lattice).modular);
  CHECK(is_modular(fl_of("segment").lattice).modular);
  CHECK(is_modular(fl_of("simplex2").lattice).modular);
  CHECK(is_modular(fl_of("simplex3").lattice).modular);
  CHECK(is_modular(fl_of("simplex4").lattice).modular);
  for (const char* name : {"square", "pentagon", "cube", "octahedron"}) {
    ModularityResult r = is_modular(fl_of(name).lattice);
    CHECK_FALSE(r.modular);
    // witness really violates the law
    const FiniteLattice& l = fl_of(name).lattice;
    REQUIRE(r.x >= 0);
    CHECK(l.leq(r.x, r.z));
    CHECK(l.join(r.x, l.meet(r.y, r.z)) != l.meet(l.join(r.x, r.y), r.z));
  }
}

TEST_CASE("irreducibility and products") {
  // simplices factor into chains; polygons with >= 4 vertices do not factor
  CHECK_FALSE(is_irreducible(fl_of("segment").lattice).irreducible);
  CHECK_FALSE(is_irreducible(fl_of("simplex2").lattice).irreducible);
  CHECK(is_irreducible(fl_of("square").lattice).irreducible);
  CHECK(is_irreducible(fl_of("pentagon").lattice).irreducible);
  CHECK(is_irreducible(fl_of("cube").lattice).irreducible);

  FiniteLattice sq = fl_of("square").lattice;
  FiniteLattice pt = fl_of("point").lattice;
  FiniteLattice prod = FiniteLattice::product(sq, pt);
  CHECK(prod.size() == 20);
  IrreducibilityResult r = is_irreducible(prod);
  REQUIRE_FALSE(r.irreducible);
  FiniteLattice f1 = interval_lattice(prod, r.u);
  FiniteLattice f2 = interval_lattice(prod, r.v);
  bool match = (lattice_isomorphic(f1, sq) && lattice_isomorphic(f2, pt)) ||
               (lattice_isomorphic(f1, pt) && lattice_isomorphic(f2, sq));
  CHECK(match);
  // product of modular lattices is modular; with a non-modular factor it is not
  CHECK_FALSE(is_modular(prod).modular);
  FiniteLattice chains =
      FiniteLattice::product(fl_of("segment").lattice, fl_of("segment").lattice);
  CHECK(is_modular(chains).modular);
}

TEST_CASE("star join realizes lattice products") {
  const auto& corpus = polytope_corpus();
  // segment * segment is a 3-simplex
  PolytopeV t = star_join(corpus.at("segment"), corpus.at("segment"));
  CHECK(t.dim == 3);
  FaceLattice ft = face_lattice(t);
  CHECK(ft.lattice.size() == 16);
  CHECK(lattice_isomorphic(ft.lattice, fl_of("simplex3").lattice));

  // lattice(P1 * P2) = lattice(P1) x lattice(P2)
  struct Pair { const char* a; const char* b; };
  for (Pair pr : {Pair{"segment", "simplex2"}, Pair{"square", "point"},
                  Pair{"simplex2", "simplex2"}}) {
    PolytopeV j = star_join(corpus.at(pr.a), corpus.at(pr.b));
    FaceLattice fj = face_lattice(j);
    FiniteLattice expect =
        FiniteLattice::product(fl_of(pr.a).lattice, fl_of(pr.b).lattice);
    CHECK(fj.lattice.size() == expect.size());
    CHECK(lattice_isomorphic(fj.lattice, expect));
  }
}

TEST_CASE("isomorphism distinguishes equal-size non-isomorphic lattices") {
  // cube and octahedron lattices are dual, both size 28, not isomorphic
  FiniteLattice c = fl_of("cube").lattice;
  FiniteLattice o = fl_of("octahedron").lattice;
  CHECK_FALSE(lattice_isomorphic(c, o));
  CHECK(lattice_isomorphic(c, c));
  // isomorphism invariant under vertex relabeling
  PolytopeV sq = polytope_corpus().at("square");
  std::swap(sq.vertices[0], sq.vertices[3]);
  std::swap(sq.vertices[1], sq.vertices[2]);
  CHECK(lattice_isomorphic(face_lattice(sq).lattice, fl_of("square").lattice));
}

TEST_CASE("degenerate inputs are rejected with witnesses") {
  PolytopeV bad;
  bad.dim = 2;
  bad.vertices = {{Rational(0), Rational(0)},
                  {Rational(1), Rational(0)},
                  {Rational(2), Rational(0)},
                  {Rational(0), Rational(1)}};  // collinear midpoint
  CHECK_THROWS_WITH_AS(face_lattice(bad), doctest::Contains("not a vertex"),
                       std::invalid_argument);
  PolytopeV dup;
  dup.dim = 1;
  dup.vertices = {{Rational(0)}, {Rational(0)}};
  CHECK_THROWS_WITH_AS(face_lattice(dup), doctest::Contains("duplicate"),
                       std::invalid_argument);
  PolytopeV interior;
  interior.dim = 2;
  interior.vertices = {{Rational(0), Rational(0)},
                       {Rational(2), Rational(0)},
                       {Rational(0), Rational(2)},
                       {Rational(1, 2), Rational(1, 2)}};
  CHECK_THROWS(face_lattice(interior));
}

TEST_CASE("polytope and lattice serialization round trip") {
  const PolytopeV& pent = polytope_corpus().at("pentagon");
  auto j = to_json(pent);
  PolytopeV back = polytope_from_json(j);
  CHECK(back.dim == pent.dim);
  CHECK(back.vertices == pent.vertices);
  FiniteLattice l = fl_of("square").lattice;
  FiniteLattice l2 = lattice_from_json(to_json(l));
  CHECK(l2.size() == l.size());
  CHECK(lattice_isomorphic(l, l2));
}
