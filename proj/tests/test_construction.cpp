#include "symcert/construction.hpp"

#include <doctest.h>

#include <cmath>

using namespace symcert;

namespace {

const ConstructionSet& C() {
  static const ConstructionSet c = build_all();
  return c;
}

// Independent oracles: q and Q written out by hand and evaluated in rationals.
Rational q_direct(const Rational& x, const Rational& y) {
  return 2 - Rational(14, 3) * (x + y) + Rational(205, 18) * x * y + x * x + y * y - Rational(7, 3) * (x * x * y - x * y * y);
}

Rational Q_direct(const Rational& x, const Rational& y, const Rational& z) {
  Rational a = q_direct(x, y), b = q_direct(y, z), c = q_direct(z, x);
  return a * a + b * b + c * c;
}

Point xyz(const Rational& a, const Rational& b, const Rational& c) {
  return {a, b, c, Rational(0), Rational(0), Rational(0)};
}

Polynomial x(int i) { return Polynomial::variable(i); }

/// Double-precision square root, as an exact rational.
Rational approx_sqrt(const Rational& v) { return Rational(std::sqrt(v.get_d())); }

}  // namespace

TEST_CASE("build_all anchors") {
  const auto& c = C();
  auto p_at = [&](int t) { return c.p.eval(xyz(Rational(t), 0, 0)); };
  CHECK(p_at(0) == 1);
  CHECK(p_at(1) == 0);
  CHECK(p_at(3) == -1);
  CHECK(c.p_coeffs == std::array<Rational, 3>{Rational(1), Rational(-7, 6), Rational(1, 6)});
  CHECK(c.q.eval(xyz(0, 0, 0)) == 2);
  CHECK(c.q.eval(xyz(1, 1, 0)) == Rational(109, 18));
  CHECK(q_direct(1, 1) == Rational(109, 18));
  CHECK(c.Q.eval(xyz(1, 1, 1)) == Rational(11881, 108));
  CHECK(c.beta.degree() == 5);
  CHECK(c.chi.degree() == 1);
}

TEST_CASE("construction invariants") {
  const auto& c = C();
  CHECK(c.psi == c.psi_a[0] + c.psi_a[1] + c.psi_a[2]);
  CHECK(c.beta == wedge(ext_d(DiffForm::function(c.h)), wedge(ext_d(c.psi), ext_d(c.psi))));
  CHECK(c.chi == hodge_star(c.beta));
  CHECK(wedge(c.beta, c.chi).coefficient(MultiIndex::full()) == c.beta_norm_sq);
  // Q(x,y,z) = Q(y,z,x)
  std::vector<Polynomial> cyc{x(X2), x(X3), x(X1)};
  CHECK(c.Q.compose(cyc) == c.Q);
}

TEST_CASE("Q matches the direct formula") {
  RationalSampler rng(5);
  for (int i = 0; i < 50; ++i) {
    Rational a = rng.next(), b = rng.next(), d = rng.next();
    CHECK(C().Q.eval(xyz(a, b, d)) == Q_direct(a, b, d));
  }
  CHECK(C().Q.eval(xyz(3, 0, 0)) == 22);
}

TEST_CASE("reduced_system") {
  auto rs = reduced_system(C());
  for (const auto& s : rs.stated_polys) CHECK(s.eval(xyz(1, 1, 1)) == Rational(109, 18));
  CHECK(rs.stated_polys[1].eval(xyz(0, Rational(1, 2), Rational(7, 3))) == 0);
  // beta at the anchor has dy-coefficients -25/18 (computed independently with a CAS), so |chi_y0|^2 = 3 (25/18)^2.
  CHECK(rs.sum_sq_reduced.eval(anchor_point()) == Rational(625, 108));
  CHECK(rs.Q_simplex_2d.eval(xyz(3, 0, 0)) == 22);
  CHECK(rs.Q_simplex_2d.eval(xyz(1, 1, 0)) == Rational(11881, 108));

  auto rel = relate_reduction(rs);
  CHECK(rel.vanishing_components == std::vector<int>{X1, X2, X3});
  CHECK_FALSE(rel.common_factor.has_value());
}

TEST_CASE("relate_reduction finds a planted constant") {
  ReducedSystem rs = reduced_system(C());
  for (int i = 0; i < kVars; ++i) rs.chi_y0[i] = Polynomial();
  rs.chi_y0[Y1] = Rational(-3, 4) * rs.stated_polys[2];
  rs.chi_y0[Y2] = Rational(-3, 4) * rs.stated_polys[0];
  rs.chi_y0[Y3] = Rational(-3, 4) * rs.stated_polys[1];
  auto rel = relate_reduction(rs);
  REQUIRE(rel.common_factor.has_value());
  CHECK(*rel.common_factor == Rational(-3, 4));
  CHECK(rel.matching == std::vector<int>{2, 0, 1});
}

TEST_CASE("torus sampler") {
  CHECK(torus_point({Rational(0), Rational(0), Rational(0)}) == anchor_point());
  CHECK(torus_point({Rational(1), Rational(0), Rational(0)}) ==
        Point{Rational(0), Rational(1), Rational(1), Rational(1), Rational(0), Rational(0)});
  auto p = torus_point({Rational(1, 2), Rational(0), Rational(0)});
  CHECK(p[0] == Rational(3, 5));
  CHECK(p[3] == Rational(4, 5));
  auto pts = sample_torus_points(100, 1);
  CHECK(pts == sample_torus_points(100, 1));
  CHECK(pts != sample_torus_points(100, 2));
  for (const auto& q : pts) {
    for (int a = 0; a < 3; ++a) CHECK(q[a] * q[a] + q[a + 3] * q[a + 3] == 1);
    CHECK(C().psi.eval(q).empty());
  }
  CHECK_THROWS_AS(sample_torus_points(0, 1), std::invalid_argument);
}

TEST_CASE("sphere sampler") {
  const auto& c = C();
  CHECK(c.h.eval(anchor_point()) == Rational(3, 2));
  const Point anchor = anchor_point();
  Vector base(anchor.begin(), anchor.end());
  Vector zero(5);
  Vector antipode = sphere_point_from_params(base, zero);
  CHECK(antipode == Vector{-1, -1, -1, 0, 0, 0});
  auto pts = sample_sphere_points(200, 3);
  CHECK(pts == sample_sphere_points(200, 3));
  for (const auto& p : pts) CHECK(c.h.eval(p) == Rational(3, 2));
  for (const auto& p : sample_sphere3_points(200, 3)) CHECK(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] == 3);
}

TEST_CASE("rank4_at") {
  const auto& c = C();
  CHECK(rank4_at(c, anchor_point()) == 4);
  CHECK_THROWS_AS(rank4_at(c, Point{}), std::invalid_argument);
  RationalSampler rng(11);
  for (const auto& p : sample_sphere_points(20, 9)) {
    std::size_t r = rank4_at(c, p);
    CHECK(r % 2 == 0);
    CHECK(r == 4);
    // Same rank at a torus-rotated image.
    RationalMatrix m = torus_rotation({rng.next(), rng.next(), rng.next()});
    Point rotated{};
    for (std::size_t i = 0; i < kVars; ++i)
      for (std::size_t j = 0; j < kVars; ++j) rotated[i] += m(i, j) * p[j];
    CHECK(rank4_at(c, rotated) == r);
  }
}

TEST_CASE("beta is torus invariant") {
  const auto& c = C();
  RationalSampler rng(21);
  for (int i = 0; i < 3; ++i) {
    RationalMatrix m = torus_rotation({rng.next(), rng.next(), rng.next()});
    CHECK(pullback_linear(c.beta, m) == c.beta);
  }
}

TEST_CASE("dpsi is diagonal and beta degenerates on S") {
  const auto& c = C();
  Polynomial g = radial_factor(c);
  CHECK(g == Polynomial(1) - Rational(7, 3) * x(X1) + Rational(1, 2) * x(X1).pow(2));
  CHECK(dpsi_is_diagonal(c, g));

  auto w = find_degenerate_sphere_point(c);
  REQUIRE(w.has_value());
  CHECK(w->t_lo < w->t_hi);
  CHECK(w->t_hi - w->t_lo <= Rational(1, 64) / (mpz_class(1) << 40));
  CHECK(sgn(w->g_at_lo) * sgn(w->g_at_hi) < 0);
  CHECK(w->g_at_lo == g.eval(xyz(w->t_lo, 0, 0)));
  CHECK(3 - 2 * w->t_hi > 0);
  // (7 - sqrt 31)/3 is the root in (0, 1).
  double root = (7 - std::sqrt(31.0)) / 3;
  CHECK(w->t_lo.get_d() <= root + 1e-12);
  CHECK(w->t_hi.get_d() >= root - 1e-12);

  // Independent numerical look at the full 6-variable beta: near the witness
  // point |beta|^2 is tiny compared with its value at the anchor.
  Rational t = (w->t_lo + w->t_hi) / 2;
  Rational s = approx_sqrt(t), r1 = approx_sqrt(3 - 2 * t);
  Point near{r1, s, s, Rational(0), Rational(0), Rational(0)};
  Rational at_witness = c.beta_norm_sq.eval(near);
  Rational at_anchor = c.beta_norm_sq.eval(anchor_point());
  CHECK(at_anchor == Rational(625, 108));
  CHECK(at_witness < Rational(1, 1000000000) * at_anchor);
  CHECK(abs(c.h.eval(near) - Rational(3, 2)) < Rational(1, 1000000000));
}
