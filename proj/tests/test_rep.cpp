#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "rep.hpp"
#include "test_util.hpp"

using namespace quiverhom;

namespace {
const Field Q = Field::rationals();

Representation simple(const Quiver& q, Vertex v, const Field& f) {
  return Representation::build(q, f, {{v, 1}}, {});
}
}  // namespace

TEST_CASE("projective representations of A2") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  Representation p1 = projective_rep(q, v1, Q);
  CHECK(p1.dim(v1) == 1);
  CHECK(p1.dim(v2) == 1);
  Matrix m = p1.arrow_matrix(*q.arrow_by_id("a"));
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0).is_one());

  Representation p2 = projective_rep(q, v2, Q);
  CHECK(p2.dim(v1) == 0);
  CHECK(p2.dim(v2) == 1);
}

TEST_CASE("projective representation over A-infinity") {
  Quiver q = Quiver::a_infinity();
  Representation p = projective_rep(q, 2, Q);
  CHECK(p.dim(0) == 1);
  CHECK(p.dim(1) == 1);
  CHECK(p.dim(2) == 1);
  CHECK(p.dim(3) == 0);
  for (const char* id : {"a0", "a1"}) {
    Matrix m = p.arrow_matrix(*q.arrow_by_id(id));
    CHECK(m.at(0, 0).is_one());
  }
}

TEST_CASE("projective_rep needs a finite acyclic closure") {
  Quiver c3 = Quiver::circular(3);
  CHECK_THROWS_AS(projective_rep(c3, 0, Q), DomainError);
}

TEST_CASE("g_action: idempotents project, arrows move") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  Representation p1 = projective_rep(q, v1, Q);

  TotalVector elem;
  elem[v1] = {Scalar::one(Q)};
  // elem * e_1 keeps the component, elem * e_2 kills it.
  CHECK(g_action(p1, elem, AlgebraElement::stationary(q, Q, v1)) == elem);
  CHECK(g_action(p1, elem, AlgebraElement::stationary(q, Q, v2)).empty());
  CHECK(g_action(p1, elem, AlgebraElement::zero(q, Q)).empty());

  // The basis vector at 1 acted by the arrow lands on the basis at 2.
  AlgebraElement a = AlgebraElement::path_term(q, Q, Path({*q.arrow_by_id("a")}));
  TotalVector moved = g_action(p1, elem, a);
  REQUIRE(moved.count(v2) == 1);
  CHECK(moved.at(v2)[0].is_one());
  CHECK(moved.count(v1) == 0);
}

TEST_CASE("module-representation roundtrip") {
  Quiver q3 = testutil::a3();
  Vertex v1 = *q3.vertex_by_name("1");
  CHECK(fg_roundtrip_check(projective_rep(q3, v1, Q)));
  CHECK(fg_roundtrip_check(Representation(q3, Q)));  // zero representation
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i)
    CHECK(fg_roundtrip_check(random_representation(q3, Q, 2, rng)));
  // Every corpus instance survives the roundtrip.
  for (const std::string& name : corpus_quiver_names())
    for (const auto& inst : corpus_instances(name, Q, 30, 2))
      CHECK(fg_roundtrip_check(inst.rep));
}

TEST_CASE("restriction and zero-padding extension") {
  Quiver q = testutil::a3();
  Vertex v2 = *q.vertex_by_name("2");
  Quiver p = closure(q, {v2});
  std::mt19937_64 rng(22);

  for (int i = 0; i < 20; ++i) {
    Representation z = random_representation(p, Q, 2, rng);
    Representation extended = extend_T(z, q);
    CHECK(extended.dim(*q.vertex_by_name("1")) == 0);
    CHECK(restrict_rep(extended, p) == z);  // S of T is the identity
  }

  Representation x = random_representation(q, Q, 2, rng);
  CHECK(restrict_rep(x, q) == x);

  Representation zero_ext = extend_T(Representation(p, Q), q);
  CHECK(zero_ext.total_dim() == 0);

  // Extension from a non-closed subquiver is rejected.
  Quiver head = Quiver::finite_ids({{*q.vertex_by_name("1"), "1"}}, {});
  CHECK_THROWS_AS(extend_T(Representation(head, Q), q), DomainError);
}

TEST_CASE("hom dimensions on A2 by hand") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  Representation p1 = projective_rep(q, v1, Q);
  Representation p2 = projective_rep(q, v2, Q);
  CHECK(hom_space_dim(p1, p1) == 1);
  CHECK(hom_space_dim(p1, p2) == 0);
  CHECK(hom_space_dim(p2, p1) == 1);
  CHECK(hom_space_dim(p1, Representation(q, Q)) == 0);
}

TEST_CASE("hom additivity over direct sums") {
  Quiver q = testutil::a3alt();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 12; ++i) {
    Representation x = random_representation(q, Q, 2, rng);
    Representation y = random_representation(q, Q, 2, rng);
    Representation z = random_representation(q, Q, 2, rng);
    CHECK(hom_space_dim(x, direct_sum({y, z})) == hom_space_dim(x, y) + hom_space_dim(x, z));
    CHECK(hom_space_dim(direct_sum({x, y}), z) == hom_space_dim(x, z) + hom_space_dim(y, z));
  }
}

TEST_CASE("hom basis members satisfy the commuting squares") {
  Quiver q = testutil::d4();
  std::mt19937_64 rng(24);
  Representation x = random_representation(q, Q, 2, rng);
  Representation y = random_representation(q, Q, 2, rng);
  auto basis = hom_basis(x, y);
  CHECK(basis.size() == hom_space_dim(x, y));
  for (const auto& comps : basis) CHECK_NOTHROW(RepMorphism(x, y, comps));
}

TEST_CASE("morphism constructor rejects non-commuting squares") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  Representation p1 = projective_rep(q, v1, Q);
  // phi_1 = 1, phi_2 = 0 does not commute with the arrow matrix [1].
  std::map<Vertex, Matrix> comps;
  comps.emplace(v1, Matrix::identity(Q, 1));
  CHECK_THROWS_AS(RepMorphism(p1, p1, comps), DomainError);
}

TEST_CASE("top dimensions") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");

  auto top_p1 = top_dims(projective_rep(q, v1, Q));
  CHECK(top_p1.at(v1) == 1);
  CHECK(top_p1.at(v2) == 0);

  CHECK(top_dims(Representation(q, Q)).empty());

  // S1 + S2 with zero arrow matrix: nothing is in the radical.
  Representation s1s2 = Representation::build(q, Q, {{v1, 1}, {v2, 1}}, {});
  auto top = top_dims(s1s2);
  CHECK(top.at(v1) == 1);
  CHECK(top.at(v2) == 1);

  // Additivity under direct sums.
  std::mt19937_64 rng(25);
  Quiver q3 = testutil::a3();
  for (int i = 0; i < 10; ++i) {
    Representation x = random_representation(q3, Q, 2, rng);
    Representation y = random_representation(q3, Q, 2, rng);
    auto tx = top_dims(x), ty = top_dims(y), ts = top_dims(direct_sum({x, y}));
    for (Vertex v : q3.vertices()) {
      std::size_t lhs = (ts.count(v) ? ts.at(v) : 0);
      std::size_t rhs = (tx.count(v) ? tx.at(v) : 0) + (ty.count(v) ? ty.at(v) : 0);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("top_dims rejects cyclic support") {
  Quiver c3 = Quiver::circular(3);
  std::map<Vertex, std::size_t> dims{{0, 1}, {1, 1}, {2, 1}};
  Representation x = Representation::build(c3, Q, dims, {});
  CHECK_THROWS_AS(top_dims(x), DomainError);
}

TEST_CASE("X0 on the truncated descending chain") {
  Quiver q = Quiver::a_infinity();
  for (Vertex top : {0, 3, 6}) {
    Quiver trunc = closure(q, {top});
    std::vector<Vertex> spine;
    for (Vertex v = 0; v <= top; ++v) spine.push_back(v);
    X0Result x0 = build_X0(trunc, spine, Q);
    for (Vertex v = 0; v <= top; ++v) {
      CHECK(x0.rep.dim(v) == 1);
      CHECK(x0.spine_index.at(v) == static_cast<std::size_t>(v));
    }
    for (const Arrow& a : trunc.arrows()) {
      Matrix m = x0.rep.arrow_matrix(a);
      CHECK(m.at(0, 0).is_one());
    }
  }
  // L = 0: the simple at the spine head.
  Quiver point = closure(q, {0});
  X0Result s = build_X0(point, {0}, Q);
  CHECK(s.rep.total_dim() == 1);
  CHECK(s.rep.dim(0) == 1);
}

TEST_CASE("X0 with an off-spine decoration acts by concatenation") {
  // Chain 0 <- 1 <- 2 with an extra arrow from 1 to a side vertex s.
  Quiver q = Quiver::finite({"0", "1", "2", "s"},
                            {{"a0", "1", "0"}, {"a1", "2", "1"}, {"d", "1", "s"}});
  std::vector<Vertex> spine{*q.vertex_by_name("0"), *q.vertex_by_name("1"),
                            *q.vertex_by_name("2")};
  X0Result x0 = build_X0(q, spine, Q);
  Vertex side = *q.vertex_by_name("s");
  CHECK(x0.rep.dim(side) == 1);         // the single path d from vertex 1
  CHECK(x0.spine_index.at(side) == 1);  // first reached from spine index 1
  Matrix d = x0.rep.arrow_matrix(*q.arrow_by_id("d"));
  CHECK(d.at(0, 0).is_one());
}

TEST_CASE("representation build validates shapes") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  std::map<Vertex, std::size_t> dims{{v1, 1}, {v2, 2}};
  std::map<std::string, Matrix> bad{{"a", Matrix::identity(Q, 1)}};  // needs 2x1
  CHECK_THROWS_AS(Representation::build(q, Q, dims, bad), ShapeError);
  std::map<std::string, Matrix> good{{"a", Matrix(Q, 2, 1)}};
  CHECK_NOTHROW(Representation::build(q, Q, dims, good));
}

TEST_CASE("direct sums stack blockwise") {
  Quiver q = testutil::a2();
  Vertex v1 = *q.vertex_by_name("1"), v2 = *q.vertex_by_name("2");
  Representation p1 = projective_rep(q, v1, Q);
  Representation s2 = simple(q, v2, Q);
  Representation sum = direct_sum({p1, s2});
  CHECK(sum.dim(v1) == 1);
  CHECK(sum.dim(v2) == 2);
  Matrix m = sum.arrow_matrix(*q.arrow_by_id("a"));
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 1);
  CHECK(m.at(0, 0).is_one());
  CHECK(m.at(1, 0).is_zero());
}
