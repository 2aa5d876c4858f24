#include <doctest.h>

#include "conelat/sections.hpp"

using namespace conelat;

namespace {

Herm basis_projector(Field f, int n, int i) {
  Herm m(f, n);
  m.set(i, i, Alg::one(f));
  return m;
}

AlgMat unit_col(Field f, int n, int i) {
  AlgMat v(f, n, 1);
  v.at(i, 0) = Alg::one(f);
  return v;
}

AlgMat combine(Field f, int n, std::initializer_list<std::pair<int, double>> cs) {
  AlgMat v(f, n, 1);
  for (const auto& [i, w] : cs) v.at(i, 0) = Alg::scalar(f, w);
  return v * (1.0 / fro_norm(v));
}

Face face_from(Field f, int n, const std::vector<AlgMat>& gens) {
  AlgMat cols(f, n, static_cast<int>(gens.size()));
  for (int j = 0; j < cols.cols(); ++j) cols.set_col(j, gens[static_cast<size_t>(j)]);
  return Face{f, n, span_of_columns(cols)};
}

}  // namespace

TEST_CASE("make_section classifies compactness and rejects bad functionals") {
  SectionBody tr = make_section(Field::R, 3, Herm::identity(Field::R, 3) * (1.0 / 3.0));
  CHECK(tr.compact);
  CHECK(tr.ker.dim() == 0);
  CHECK(recession_rays(tr).empty());

  SectionBody par = make_section(Field::R, 2, basis_projector(Field::R, 2, 0));
  CHECK_FALSE(par.compact);
  CHECK(par.ker.dim() == 1);
  auto rays = recession_rays(par);
  REQUIRE(rays.size() == 1);
  CHECK(fro_norm(rays[0] - basis_projector(Field::R, 2, 1)) < 1e-10);

  Herm neg = Herm::identity(Field::R, 2) * (-1.0);
  CHECK_THROWS_AS(make_section(Field::R, 2, neg), std::invalid_argument);
  CHECK_THROWS_AS(make_section(Field::R, 2, Herm(Field::R, 2)),
                  std::invalid_argument);
}

TEST_CASE("parabola slice of C2(R): {[[1,x],[x,y]] : y >= x^2}") {
  SectionBody sec = make_section(Field::R, 2, basis_projector(Field::R, 2, 0));
  for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    Herm on(Field::R, 2);
    on.set(0, 0, Alg::one(Field::R));
    on.set(0, 1, Alg::scalar(Field::R, x));
    on.set(1, 1, Alg::scalar(Field::R, x * x + 0.25));
    CHECK(sec.body.contains(on));
    Herm off = on;
    off.set(1, 1, Alg::scalar(Field::R, x * x - 0.25));
    CHECK_FALSE(sec.body.contains(off));
  }
  Face full = Face::full(Field::R, 2);
  Rng rng(derive_seed(20260815, 51, 0));
  CHECK(unique_ray_check(sec, full, 10, rng));
}

TEST_CASE("recession cone of the C3(R), M=E11 slice is the face C2(R)") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  Face rec = recession_face(sec);
  AlgMat block(Field::R, 3, 2);
  block.set_col(0, unit_col(Field::R, 3, 1));
  block.set_col(1, unit_col(Field::R, 3, 2));
  CHECK(subspace_eq(rec.range, span_of_columns(block)));
  CHECK(rec.rank() == 2);
  CHECK(face_dim_formula(Field::R, rec.rank()) == herm_dim(Field::R, 2));

  auto rays = recession_rays(sec);
  REQUIRE(rays.size() == 2);
  for (const Herm& r : rays) {
    CHECK(is_psd(r, 1e-9));
    CHECK(rank_of(r) == 1);
    CHECK(approx_eq(r.trace(), 1.0));
    CHECK(in_face(r, rec));
    CHECK(approx_eq(inner(sec.body.slice, r), 0.0, 1e-9));
  }
}

TEST_CASE("compactness criterion: section compact iff M positive definite") {
  int checked = 0;
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 25; ++t) {
      Rng rng(derive_seed(20260815, 52, static_cast<std::uint64_t>(checked)));
      int n = rng.uniform_int(2, 4);
      Herm pd = rand_psd(rng, f, n, n) + Herm::identity(f, n) * 0.1;
      CHECK(make_section(f, n, pd).compact);
      int r = rng.uniform_int(1, n - 1);
      Herm sing = rand_psd(rng, f, n, r);
      SectionBody sec = make_section(f, n, sing);
      CHECK_FALSE(sec.compact);
      CHECK(sec.ker.dim() == n - r);
      ++checked;
    }
  }
  CHECK(checked == 75);
}

TEST_CASE("unique_ray_check on explicit faces of the C3(R) slice") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  Rng rng(derive_seed(20260815, 53, 0));

  Face line = face_from(Field::R, 3,
                        {unit_col(Field::R, 3, 0), unit_col(Field::R, 3, 1)});
  CHECK(unique_ray_check(sec, line, 20, rng));

  CHECK_FALSE(unique_ray_check(sec, recession_face(sec), 20, rng));
  CHECK_FALSE(unique_ray_check(sec, Face::full(Field::R, 3), 20, rng));

  Face compact_face =
      face_from(Field::R, 3, {combine(Field::R, 3, {{0, 1.0}, {1, 0.4}})});
  CHECK(face_is_compact(sec, compact_face));
  CHECK_THROWS_AS(unique_ray_check(sec, compact_face, 20, rng),
                  std::invalid_argument);
}

TEST_CASE("sampled non-compact rank-2 faces have a unique ray") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  for (int t = 0; t < 200; ++t) {
    Rng rng(derive_seed(20260815, 54, static_cast<std::uint64_t>(t)));
    AlgMat k = random_column_in(rng, sec.ker);
    for (;;) {
      AlgMat g = rand_unit_column(rng, Field::R, 3);
      Face f = face_from(Field::R, 3, {k, g});
      if (f.rank() != 2 || face_recession(sec, f).dim() != 1) continue;
      CHECK(unique_ray_check(sec, f, 6, rng));
      break;
    }
  }
}

TEST_CASE("shared directions of explicit face pairs") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  AlgMat e0 = unit_col(Field::R, 3, 0);
  AlgMat e1 = unit_col(Field::R, 3, 1);
  AlgMat e2 = unit_col(Field::R, 3, 2);

  Face f1 = face_from(Field::R, 3, {e1, e0});
  Face f2 = face_from(Field::R, 3, {e1, combine(Field::R, 3, {{0, 1.0}, {2, 1.0}})});
  CHECK(shared_direction_check(sec, f1, f2) == 1);
  CHECK_FALSE(face_meets_body(sec, face_meet(f1, f2)));

  Face f3 = face_from(Field::R, 3, {e2, e0});
  CHECK(shared_direction_check(sec, f1, f3) == 0);
  CHECK(face_meets_body(sec, face_meet(f1, f3)));

  CHECK(shared_direction_check(sec, f1, f1) == 1);
}

TEST_CASE("two rank-2 faces share at most one direction") {
  for (Field f : {Field::R, Field::C}) {
    SectionBody sec = make_section(f, 3, basis_projector(f, 3, 0));
    for (int t = 0; t < 100; ++t) {
      Rng rng(derive_seed(20260815, 55,
                          static_cast<std::uint64_t>(t) * 2 +
                              (f == Field::C ? 1 : 0)));
      AlgMat k1 = random_column_in(rng, sec.ker);
      AlgMat k2 = random_column_in(rng, sec.ker);
      Face a = face_from(f, 3, {k1, rand_unit_column(rng, f, 3)});
      Face b = face_from(f, 3, {k2, rand_unit_column(rng, f, 3)});
      if (a.rank() != 2 || b.rank() != 2) continue;
      int shared = shared_direction_check(sec, a, b);
      CHECK(shared <= 1);
      if (shared == 1 && !face_eq(a, b))
        CHECK_FALSE(face_meets_body(sec, face_meet(a, b)));
    }
  }
}

TEST_CASE("parallel classes partition sampled faces by ray direction") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  Rng rng(derive_seed(20260815, 56, 0));
  auto classes = parallel_classes(sec, 60, 6, rng);
  CHECK(classes.size() == 6);

  Face rec = recession_face(sec);
  int members = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    const ParallelClass& cls = classes[i];
    CHECK(is_psd(cls.direction, 1e-9));
    CHECK(rank_of(cls.direction) == 1);
    CHECK(approx_eq(cls.direction.trace(), 1.0));
    CHECK(in_face(cls.direction, rec));
    for (size_t j = i + 1; j < classes.size(); ++j)
      CHECK(fro_norm(cls.direction - classes[j].direction) > 1e-4);
    members += static_cast<int>(cls.members.size());
    for (const Face& m : cls.members) {
      CHECK(m.rank() == 2);
      CHECK(face_meets_body(sec, m));
      CHECK(subspace_leq(range_of(cls.direction), m.range));
    }
    for (size_t a = 0; a + 1 < cls.members.size(); ++a) {
      CHECK(shared_direction_check(sec, cls.members[a], cls.members[a + 1]) ==
            1);
      if (!face_eq(cls.members[a], cls.members[a + 1]))
        CHECK_FALSE(face_meets_body(
            sec, face_meet(cls.members[a], cls.members[a + 1])));
    }
  }
  CHECK(members == 60);

  SectionBody tr =
      make_section(Field::R, 3, Herm::identity(Field::R, 3) * (1.0 / 3.0));
  CHECK_THROWS_AS(parallel_classes(tr, 10, 2, rng), std::invalid_argument);

  SectionBody par = make_section(Field::R, 2, basis_projector(Field::R, 2, 0));
  auto one = parallel_classes(par, 12, 3, rng);
  CHECK(one.size() == 1);
  CHECK(fro_norm(one[0].direction - basis_projector(Field::R, 2, 1)) < 1e-8);
}

TEST_CASE("class directions biject with extreme points of the maximal face") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  for (int t = 0; t < 40; ++t) {
    Rng rng(derive_seed(20260815, 57, static_cast<std::uint64_t>(t)));
    AlgMat u = random_column_in(rng, sec.ker);
    Herm expect = Herm::hermitize(u * u.adjoint());
    Face f = face_from(Field::R, 3, {u, unit_col(Field::R, 3, 0)});
    Subspace r = face_recession(sec, f);
    REQUIRE(r.dim() == 1);
    AlgMat v = r.basis.col(0);
    Herm got = Herm::hermitize(v * v.adjoint());
    CHECK(fro_norm(got - expect) < 1e-8);
    CHECK(in_face(got, recession_face(sec)));
  }
}

TEST_CASE("affine axioms hold on the non-compact C3(R) section") {
  SectionBody sec = make_section(Field::R, 3, basis_projector(Field::R, 3, 0));
  for (int t = 0; t < 50; ++t) {
    Rng rng(derive_seed(20260815, 58, static_cast<std::uint64_t>(t)));

    AlgMat u = rand_unit_column(rng, Field::R, 3);
    AlgMat v = rand_unit_column(rng, Field::R, 3);
    Herm p = slice_extreme_from(sec, u);
    Herm q = slice_extreme_from(sec, v);
    CHECK(sec.body.contains(p));
    Face through = face_from(Field::R, 3, {u, v});
    REQUIRE(through.rank() == 2);
    CHECK(in_face(p, through));
    CHECK(in_face(q, through));

    AlgMat k = random_column_in(rng, sec.ker);
    Face line = face_from(Field::R, 3, {k, u});
    REQUIRE(face_recession(sec, line).dim() == 1);
    CHECK(in_face(p, line));

    Face parallel = face_from(Field::R, 3, {k, v});
    if (subspace_eq(parallel.range, line.range)) continue;
    CHECK(in_face(q, parallel));
    CHECK(shared_direction_check(sec, line, parallel) == 1);
    CHECK_FALSE(face_meets_body(sec, face_meet(line, parallel)));

    for (int c = 0; c < 10; ++c) {
      AlgMat w = rand_unit_column(rng, Field::R, 3);
      Face other = face_from(Field::R, 3, {v, w});
      if (other.rank() != 2) continue;
      Face meet = face_meet(other, line);
      bool disjoint = !face_meets_body(sec, meet);
      if (disjoint) CHECK(shared_direction_check(sec, other, line) == 1);
    }
  }
}
