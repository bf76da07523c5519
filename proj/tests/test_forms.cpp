#include "symcert/construction.hpp"
#include "symcert/form.hpp"

#include <doctest.h>

#include <bit>

using namespace symcert;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }
DiffForm dz(int i) { return DiffForm::dz(i); }

Polynomial random_poly(RationalSampler& rng) {
  Polynomial p;
  long terms = rng.integer(1, 3);
  for (long t = 0; t < terms; ++t) {
    Exponents e{};
    long deg = rng.integer(0, 3);
    for (long k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(rng.integer(0, kVars - 1))];
    p += Polynomial::monomial(rng.next(3, 5), e);
  }
  return p;
}

DiffForm random_form(RationalSampler& rng, int degree) {
  DiffForm f(degree);
  for (long t = rng.integer(1, 3); t > 0; --t) {
    std::uint8_t mask = 0;
    while (std::popcount(mask) < degree) mask = static_cast<std::uint8_t>(mask | (1U << rng.integer(0, kVars - 1)));
    f += DiffForm::basis(MultiIndex::from_mask(mask), random_poly(rng));
  }
  return f;
}

RationalMatrix random_matrix(RationalSampler& rng) {
  RationalMatrix m(kVars, kVars);
  for (std::size_t i = 0; i < kVars; ++i)
    for (std::size_t j = 0; j < kVars; ++j) m(i, j) = rng.integer(0, 2) == 0 ? Rational(0) : rng.next(2, 3);
  return m;
}

}  // namespace

TEST_CASE("multi-index validation") {
  CHECK_THROWS_AS((MultiIndex{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS((MultiIndex{0, 6}), std::invalid_argument);
  CHECK((MultiIndex{0, 4}).to_string() == "dx1^dy2");
  CHECK(MultiIndex{}.to_string() == "1");
}

TEST_CASE("wedge") {
  CHECK(wedge(dz(X1), dz(X1)).is_zero());
  CHECK(wedge(x(X1) * dz(Y1), x(X2) * dz(Y2)) == DiffForm::basis(MultiIndex{Y1, Y2}, x(X1) * x(X2)));
  CHECK(wedge(dz(X1), dz(Y1)) == -wedge(dz(Y1), dz(X1)));
  CHECK_THROWS_AS(wedge(DiffForm::basis(MultiIndex{0, 1, 2}), DiffForm::basis(MultiIndex{3, 4, 5, 0})), std::invalid_argument);
}

TEST_CASE("ext_d") {
  CHECK(ext_d(x(X1) * dz(Y1)) == wedge(dz(X1), dz(Y1)));
  CHECK(ext_d(ext_d(DiffForm::function(x(X1).pow(3) * x(Y2)))).is_zero());
  CHECK_THROWS_AS(ext_d(DiffForm::basis(MultiIndex::full())), std::invalid_argument);

  // psi_1 vanishes at (x1, y1) = (3/5, 4/5) but dpsi_1 does not. Hand derivation:
  // d[p(r^2)/2 (x dy - y dx)] = (p(r^2) + r^2 p'(r^2)) dx^dy, which at r^2 = 1 is 0 + (-7/6 + 2/6) = -5/6.
  auto c = build_all();
  Point pt{Rational(3, 5), Rational(0), Rational(0), Rational(4, 5), Rational(0), Rational(0)};
  CHECK(c.psi_a[0].eval(pt).empty());
  auto dpsi1 = ext_d(c.psi_a[0]).eval(pt);
  REQUIRE(dpsi1.size() == 1);
  CHECK(dpsi1.begin()->first == MultiIndex{X1, Y1});
  CHECK(dpsi1.begin()->second == Rational(-5, 6));
}

TEST_CASE("hodge_star") {
  CHECK(hodge_star(DiffForm::function(1)) == DiffForm::basis(MultiIndex::full()));
  CHECK(hodge_star(dz(X1)) == DiffForm::basis(MultiIndex{1, 2, 3, 4, 5}));
  // *dx2 = -dx1^dx3^dy1^dy2^dy3: (2 | 1 3 4 5 6) is one transposition
  CHECK(hodge_star(dz(X2)) == -DiffForm::basis(MultiIndex{0, 2, 3, 4, 5}));
}

TEST_CASE("pullback_linear") {
  auto c = build_all();
  CHECK(pullback_linear(c.psi, RationalMatrix::identity(kVars)) == c.psi);
  RationalMatrix rot = RationalMatrix::identity(kVars);
  rot(X1, X1) = Rational(3, 5);
  rot(X1, Y1) = Rational(-4, 5);
  rot(Y1, X1) = Rational(4, 5);
  rot(Y1, Y1) = Rational(3, 5);
  CHECK(pullback_linear(c.psi, rot) == c.psi);
  CHECK(pullback_linear(DiffForm::function(c.h), torus_rotation({Rational(1, 2), Rational(-3), Rational(2, 7)})) ==
        DiffForm::function(c.h));
  // a non-invertible map is allowed
  RationalMatrix proj(kVars, kVars);
  proj(X1, X1) = 1;
  CHECK(pullback_linear(wedge(dz(X1), dz(X2)), proj).is_zero());
}

TEST_CASE("eval_two_form") {
  DiffForm omega0 = wedge(dz(X1), dz(Y1)) + wedge(dz(X2), dz(Y2)) + wedge(dz(X3), dz(Y3));
  auto m = eval_two_form(omega0, anchor_point());
  CHECK(m.rank() == 6);
  CHECK(m(X1, Y1) == 1);
  CHECK(m(Y1, X1) == -1);
  CHECK(eval_two_form(DiffForm(2), anchor_point()).rank() == 0);
  CHECK_THROWS_AS(eval_two_form(dz(X1), anchor_point()), std::invalid_argument);
}

TEST_CASE("subst_coeffs_y0") {
  auto c = build_all();
  DiffForm expected(1);
  for (int a = 0; a < 3; ++a) {
    Polynomial xa = x(a);
    Polynomial p = Polynomial(1) - Rational(7, 6) * xa.pow(2) + Rational(1, 6) * xa.pow(4);
    expected += DiffForm::basis(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << (a + 3))), Rational(1, 2) * p * xa);
  }
  CHECK(subst_coeffs_y0(c.psi) == expected);
  CHECK(subst_coeffs_y0(c.dh) == x(X1) * dz(X1) + x(X2) * dz(X2) + x(X3) * dz(X3));
  CHECK(subst_coeffs_y0(DiffForm(3)).is_zero());
}

TEST_CASE("serialization of forms") {
  CHECK((x(X1) * dz(Y1)).to_string() == "(x1) * dy1");
  CHECK(DiffForm(2).to_string() == "0");
  CHECK(DiffForm::function(Polynomial(3)).to_string() == "(3)");
}

TEST_CASE("property: graded algebra identities on random forms") {
  RationalSampler rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    int ka = static_cast<int>(rng.integer(0, 4));
    int kb = static_cast<int>(rng.integer(0, 5 - ka));
    DiffForm a = random_form(rng, ka), b = random_form(rng, kb);
    DiffForm ab = wedge(a, b);
    CHECK(ab == ((ka * kb) % 2 ? -wedge(b, a) : wedge(b, a)));
    CHECK(ext_d(ab) == wedge(ext_d(a), b) + (ka % 2 ? -wedge(a, ext_d(b)) : wedge(a, ext_d(b))));
    CHECK(ext_d(ext_d(a)).is_zero());
    // ** = (-1)^{k(6-k)}
    CHECK(hodge_star(hodge_star(a)) == ((ka * (6 - ka)) % 2 ? -a : a));

    DiffForm five = random_form(rng, 5);
    Polynomial norm_sq;
    for (const auto& [idx, coeff] : five.terms()) norm_sq += coeff * coeff;
    CHECK(wedge(five, hodge_star(five)) == DiffForm::basis(MultiIndex::full(), norm_sq));

    if (trial % 5 == 0) {
      RationalMatrix m = random_matrix(rng), n = random_matrix(rng);
      CHECK(pullback_linear(pullback_linear(a, m), n) == pullback_linear(a, m * n));
      CHECK(pullback_linear(ab, m) == wedge(pullback_linear(a, m), pullback_linear(b, m)));
      CHECK(pullback_linear(ext_d(a), m) == ext_d(pullback_linear(a, m)));
    }
  }
}
