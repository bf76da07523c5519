#include "symcert/linalg.hpp"

#include <doctest.h>

using namespace symcert;

TEST_CASE("rank_exact") {
  CHECK(rank_exact(RationalMatrix::identity(6)) == 6);
  CHECK(rank_exact(RationalMatrix(6, 6)) == 0);
  RationalMatrix j(6, 6);
  for (std::size_t a = 0; a < 3; ++a) {
    j(a, a + 3) = 1;
    j(a + 3, a) = -1;
  }
  CHECK(rank_exact(j) == 6);
  // rows 1 and 2 proportional with non-dyadic factors
  RationalMatrix m(3, 3, {Rational(1, 3), Rational(2, 7), Rational(5), Rational(2, 3), Rational(4, 7), Rational(10), Rational(0), Rational(1), Rational(1)});
  CHECK(rank_exact(m) == 2);
  CHECK(rank_exact(RationalMatrix(2, 5)) == 0);
}

TEST_CASE("AntisymMatrix validation") {
  RationalMatrix bad(2, 2);
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(AntisymMatrix{bad}, std::invalid_argument);
  CHECK_THROWS_AS(AntisymMatrix{RationalMatrix(2, 3)}, std::invalid_argument);
}

TEST_CASE("tangent basis and restriction") {
  Vector p{Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)};
  auto basis = tangent_basis(p);
  REQUIRE(basis.size() == 5);
  for (const auto& v : basis) CHECK(dot(v, p) == 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(dot(basis[i], basis[j]) == 0);

  CHECK(restrict_two_form(AntisymMatrix::zero(6), basis, p).rank() == 0);

  RationalMatrix j(6, 6);
  for (std::size_t a = 0; a < 3; ++a) {
    j(a, a + 3) = 1;
    j(a + 3, a) = -1;
  }
  auto restricted = restrict_two_form(AntisymMatrix(j), basis, p);
  CHECK(restricted.size() == 5);
  CHECK(restricted.rank() == 4);

  auto dependent = basis;
  dependent[1] = dependent[0];
  CHECK_THROWS_AS(restrict_two_form(AntisymMatrix(j), dependent, p), std::invalid_argument);
  auto not_tangent = basis;
  not_tangent[0] = p;
  CHECK_THROWS_AS(restrict_two_form(AntisymMatrix(j), not_tangent, p), std::invalid_argument);
}
