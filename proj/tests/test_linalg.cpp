#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrix.hpp"
#include "test_util.hpp"

using namespace quiverhom;
using testutil::minor_rank;
using testutil::rand_matrix;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::fp(5);

Matrix mat(const Field& f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> s;
  for (auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::of_int(f, v));
    s.push_back(row);
  }
  return Matrix::from_rows(f, s);
}
}  // namespace

TEST_CASE("scalar arithmetic stays canonical") {
  Scalar half = Scalar::rational(1, 2);
  Scalar third = Scalar::rational(-2, -6);  // reduces to 1/3
  CHECK(third.str() == "1/3");
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(Scalar::rational(4, -8).str() == "-1/2");
  CHECK(Scalar::rational(7).str() == "7");

  Scalar a = Scalar::of_int(F5, 3), b = Scalar::of_int(F5, 4);
  CHECK((a * b).str() == "2");
  CHECK((a + b).str() == "2");
  CHECK(a.inverse().str() == "2");
  CHECK((a / a).is_one());
  CHECK(Scalar::of_int(F5, -1).str() == "4");
}

TEST_CASE("field context rules") {
  CHECK_THROWS_AS(Field::fp(6), DomainError);
  CHECK_THROWS_AS(Field::fp(1), DomainError);
  CHECK_NOTHROW(Field::fp(2147483647));  // 2^31 - 1 is prime
  CHECK_THROWS_AS(Scalar::of_int(Q, 1) + Scalar::of_int(F5, 1), FieldMismatchError);
  CHECK_THROWS_AS(Scalar::rational(1, 0), DomainError);
  CHECK_THROWS_AS(Scalar::of_int(F5, 0).inverse(), DomainError);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Q, F5}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = testutil::rand_scalar(f, rng);
      Scalar b = testutil::rand_scalar(f, rng);
      Scalar c = testutil::rand_scalar(f, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(Q, 3)) == 3);
  CHECK(rank(Matrix(Q, 2, 2)) == 0);
  CHECK(rank(mat(Q, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat(F5, {{1, 2}, {2, 4}})) == 1);
  // 2*3 = 6 = 1 mod 5, so this matrix drops rank over F5 but not over Q.
  CHECK(rank(mat(Q, {{1, 2}, {3, 1}})) == 2);
  CHECK(rank(mat(F5, {{1, 2}, {3, 1}})) == 1);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  CHECK(kernel_basis(Matrix(Q, 2, 3)).cols() == 3);
  Matrix k = kernel_basis(mat(Q, {{1, 2}, {2, 4}}));
  REQUIRE(k.cols() == 1);
  // Proportional to (2, -1): first coordinate -2 * second.
  CHECK(k.at(0, 0) == -(k.at(1, 0) + k.at(1, 0)));
  CHECK(!k.at(1, 0).is_zero());
}

TEST_CASE("solve examples") {
  std::vector<Scalar> b{Scalar::of_int(Q, 3), Scalar::of_int(Q, 1)};
  auto x = solve(Matrix::identity(Q, 2), b);
  REQUIRE(x);
  CHECK((*x)[0] == b[0]);
  CHECK((*x)[1] == b[1]);

  CHECK(!solve(Matrix(Q, 2, 2), b));  // zero matrix, nonzero rhs

  auto y = solve(mat(Q, {{1, 1}, {0, 1}}), b);
  REQUIRE(y);
  CHECK((*y)[0] == Scalar::of_int(Q, 2));
  CHECK((*y)[1] == Scalar::of_int(Q, 1));
}

TEST_CASE("in_span examples") {
  Matrix basis = mat(Q, {{0}, {1}});
  CHECK(in_span({Scalar::zero(Q), Scalar::zero(Q)}, basis));
  CHECK(!in_span({Scalar::of_int(Q, 1), Scalar::zero(Q)}, basis));
  Matrix b2 = mat(Q, {{1}, {2}});
  CHECK(in_span({Scalar::of_int(Q, 3), Scalar::of_int(Q, 6)}, b2));
  CHECK(!in_span({Scalar::of_int(Q, 3), Scalar::of_int(Q, 5)}, b2));
}

TEST_CASE("rank-nullity and oracle agreement on random matrices") {
  std::mt19937_64 rng(42);
  for (const Field& f : {Q, F5}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = rng() % 4, c = rng() % 4;
      Matrix m = rand_matrix(f, r, c, rng);
      std::size_t rk = rank(m);
      CHECK(rk == minor_rank(m));
      Matrix k = kernel_basis(m);
      CHECK(rk + k.cols() == c);
      // Every kernel column really solves m x = 0 and the basis has full rank.
      for (std::size_t j = 0; j < k.cols(); ++j) {
        auto prod = m * k.col(j);
        for (const Scalar& s : prod) CHECK(s.is_zero());
      }
      CHECK(rank(k) == k.cols());
    }
  }
}

TEST_CASE("solve returns exact solutions; in_span matches solve") {
  std::mt19937_64 rng(43);
  for (const Field& f : {Q, F5}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      Matrix m = rand_matrix(f, r, c, rng);
      std::vector<Scalar> b;
      for (std::size_t i = 0; i < r; ++i) b.push_back(testutil::rand_scalar(f, rng));
      auto x = solve(m, b);
      CHECK(x.has_value() == in_span(b, m));
      if (x) {
        auto prod = m * *x;
        for (std::size_t i = 0; i < r; ++i) CHECK(prod[i] == b[i]);
      }
    }
  }
}

TEST_CASE("deterministic pivoting: identical reruns") {
  std::mt19937_64 rng(99);
  Matrix m = rand_matrix(Q, 4, 5, rng);
  Matrix k1 = kernel_basis(m), k2 = kernel_basis(m);
  CHECK(k1 == k2);
  CHECK(rank(m) == rank(m));
}

TEST_CASE("scalar serialization") {
  CHECK(Scalar::rational(3, 2).str() == "3/2");
  CHECK(Scalar::rational(-3, 2).str() == "-3/2");
  CHECK(Scalar::rational(4, 2).str() == "2");
  CHECK(Scalar::of_int(F5, 13).str() == "3");
}
