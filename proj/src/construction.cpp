#include "symcert/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symcert {

namespace {

Polynomial var(int i) { return Polynomial::variable(i); }

Polynomial sq(const Polynomial& p) { return p * p; }

/// q(a, b) with the formal slots replaced by arbitrary polynomials.
Polynomial q_of(const Polynomial& q, const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial> repl{a, b};
  return q.compose(repl);
}

}  // namespace

ConstructionSet build_all() {
  ConstructionSet c;
  c.p_coeffs = {Rational(1), Rational(-7, 6), Rational(1, 6)};
  c.p = univariate(c.p_coeffs, X1);

  for (int i = 0; i < kVars; ++i) c.h += Rational(1, 2) * sq(var(i));

  c.psi = DiffForm(1);
  for (int a = 0; a < 3; ++a) {
    Polynomial r2 = sq(var(a)) + sq(var(a + 3));
    std::vector<Polynomial> repl{r2};
    Polynomial coeff = Rational(1, 2) * c.p.compose(repl);
    c.psi_a[a] = DiffForm::basis(MultiIndex{a + 3}, coeff * var(a)) + DiffForm::basis(MultiIndex{a}, -(coeff * var(a + 3)));
    c.psi += c.psi_a[a];
  }

  c.dh = ext_d(DiffForm::function(c.h));
  c.dpsi = ext_d(c.psi);
  c.beta = wedge(c.dh, wedge(c.dpsi, c.dpsi));
  c.chi = hodge_star(c.beta);
  for (const auto& [idx, coeff] : c.beta.terms()) c.beta_norm_sq += sq(coeff);

  const Polynomial x = var(X1), y = var(X2), z = var(X3);
  c.q = Polynomial(2) - Rational(14, 3) * (x + y) + Rational(205, 18) * x * y + sq(x) + sq(y) -
        Rational(7, 3) * (sq(x) * y - x * sq(y));
  c.Q = sq(q_of(c.q, x, y)) + sq(q_of(c.q, y, z)) + sq(q_of(c.q, z, x));
  return c;
}

ReducedSystem reduced_system(const ConstructionSet& c) {
  ReducedSystem rs;
  DiffForm chi0 = subst_coeffs_y0(c.chi);
  for (int i = 0; i < kVars; ++i) {
    rs.chi_y0[i] = chi0.coefficient(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << i)));
    rs.sum_sq_reduced += sq(rs.chi_y0[i]);
  }
  const Polynomial x1 = var(X1), x2 = var(X2), x3 = var(X3);
  rs.stated_polys = {x3 * q_of(c.q, sq(x1), sq(x2)), x1 * q_of(c.q, sq(x2), sq(x3)),
                     x2 * q_of(c.q, sq(x3), sq(x1))};
  for (const auto& s : rs.stated_polys) rs.sum_sq_stated += sq(s);
  rs.Q_simplex_2d = c.Q.subst(X3, Polynomial(3) - x1 - x2);
  return rs;
}

ReductionRelation relate_reduction(const ReducedSystem& rs) {
  ReductionRelation rel;
  std::vector<int> live;
  for (int i = 0; i < kVars; ++i) {
    if (rs.chi_y0[i].is_zero())
      rel.vanishing_components.push_back(i);
    else
      live.push_back(i);
  }
  if (live.size() != rs.stated_polys.size()) return rel;
  std::vector<int> perm{0, 1, 2};
  do {
    std::optional<Rational> k;
    bool ok = true;
    for (std::size_t j = 0; j < live.size() && ok; ++j) {
      const Polynomial& comp = rs.chi_y0[live[j]];
      const Polynomial& stated = rs.stated_polys[perm[j]];
      if (stated.is_zero()) {
        ok = false;
        break;
      }
      const auto& [lead_e, lead_c] = *stated.terms().begin();
      Rational ratio = comp.coefficient(lead_e) / lead_c;
      if (ratio == 0 || (k && *k != ratio) || !(comp == ratio * stated)) ok = false;
      k = ratio;
    }
    if (ok) {
      rel.common_factor = k;
      rel.matching = perm;
      return rel;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rel;
}

Polynomial radial_factor(const ConstructionSet& c) { return (var(X1) * c.p).diff(X1); }

bool dpsi_is_diagonal(const ConstructionSet& c, const Polynomial& g) {
  DiffForm expected(2);
  for (int a = 0; a < 3; ++a) {
    std::vector<Polynomial> repl{sq(var(a)) + sq(var(a + 3))};
    expected += DiffForm::basis(MultiIndex{a, a + 3}, g.compose(repl));
  }
  return expected == c.dpsi;
}

std::optional<DegeneracyWitness> find_degenerate_sphere_point(const ConstructionSet& c, int bisection_steps) {
  Polynomial g = radial_factor(c);
  if (!dpsi_is_diagonal(c, g)) return std::nullopt;
  auto at = [&](const Rational& t) {
    std::array<Rational, kVars> pt{};
    pt[0] = t;
    return g.eval(pt);
  };
  // Scan [0, 3/2) on a grid of 1/64; a root at t* keeps x1^2 = 3 - 2t* > 0.
  const Rational step(1, 64);
  for (int k = 0; k < 96; ++k) {
    Rational lo = step * k, hi = step * (k + 1);
    Rational glo = at(lo), ghi = at(hi);
    if (glo == 0) return DegeneracyWitness{g, lo, lo, glo, glo};
    if (sgn(glo) * sgn(ghi) >= 0) continue;
    for (int s = 0; s < bisection_steps; ++s) {
      Rational mid = (lo + hi) / 2;
      Rational gm = at(mid);
      if (gm == 0) return DegeneracyWitness{g, mid, mid, gm, gm};
      if (sgn(gm) == sgn(glo)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
        ghi = gm;
      }
    }
    return DegeneracyWitness{g, lo, hi, glo, ghi};
  }
  return std::nullopt;
}

std::array<Rational, 2> circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

Point torus_point(const std::array<Rational, 3>& t) {
  Point p;
  for (int a = 0; a < 3; ++a) {
    auto [cs, sn] = circle_point(t[a]);
    p[a] = cs;
    p[a + 3] = sn;
  }
  return p;
}

RationalMatrix torus_rotation(const std::array<Rational, 3>& t) {
  RationalMatrix m(kVars, kVars);
  for (std::size_t a = 0; a < 3; ++a) {
    auto [cs, sn] = circle_point(t[a]);
    m(a, a) = cs;
    m(a, a + 3) = -sn;
    m(a + 3, a) = sn;
    m(a + 3, a + 3) = cs;
  }
  return m;
}

long RationalSampler::integer(long lo, long hi) {
  auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % range);
}

Rational RationalSampler::next(int span, int max_den) {
  long den = integer(1, max_den);
  long num = integer(-static_cast<long>(span) * den, static_cast<long>(span) * den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Point> sample_torus_points(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_torus_points: n must be >= 1");
  RationalSampler rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(torus_point({rng.next(), rng.next(), rng.next()}));
  return out;
}

Vector sphere_point_from_params(std::span<const Rational> base, std::span<const Rational> params) {
  auto basis = tangent_basis(base);
  if (params.size() != basis.size()) throw std::invalid_argument("sphere_point_from_params: need dim-1 parameters");
  const std::size_t n = base.size();
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -base[i];
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) v[i] += params[k] * basis[k][i];
  Rational lambda = -2 * dot(base, v) / dot(v, v);
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + lambda * v[i];
  return out;
}

Point anchor_point() { return {Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)}; }

std::vector<Point> sample_sphere_points(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_sphere_points: n must be >= 1");
  RationalSampler rng(seed);
  const Point base = anchor_point();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<Rational, kVars - 1> params;
    for (auto& t : params) t = rng.next();
    Vector v = sphere_point_from_params(base, params);
    Point p;
    std::copy(v.begin(), v.end(), p.begin());
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::array<Rational, 3>> sample_sphere3_points(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_sphere3_points: n must be >= 1");
  RationalSampler rng(seed);
  const std::array<Rational, 3> base{Rational(1), Rational(1), Rational(1)};
  std::vector<std::array<Rational, 3>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<Rational, 2> params{rng.next(), rng.next()};
    Vector v = sphere_point_from_params(base, params);
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

std::size_t rank4_at(const ConstructionSet& c, const Point& point) {
  if (c.h.eval(point) != Rational(3, 2)) throw std::invalid_argument("rank4_at: point is not on S");
  AntisymMatrix m = eval_two_form(c.dpsi, point);
  // grad h = point
  auto basis = tangent_basis(point);
  return restrict_two_form(m, basis, point).rank();
}

}  // namespace symcert
