#ifndef SYMCERT_CONSTRUCTION_HPP
#define SYMCERT_CONSTRUCTION_HPP

#include "symcert/form.hpp"
#include "symcert/linalg.hpp"
#include "symcert/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symcert {

/// Every object of the construction, built symbolically once and then shared
/// read-only.
struct ConstructionSet {
  /// h = (|x|^2 + |y|^2) / 2
  Polynomial h;
  /// p(t) = 1 - 7t/6 + t^2/6, coefficients and as a polynomial in slot x1.
  std::array<Rational, 3> p_coeffs;
  Polynomial p;
  /// psi_a = p(x_a^2 + y_a^2)/2 * (x_a dy_a - y_a dx_a)
  std::array<DiffForm, 3> psi_a;
  DiffForm psi;
  DiffForm dh;
  DiffForm dpsi;
  /// beta = dh ^ dpsi ^ dpsi, a 5-form.
  DiffForm beta;
  /// chi = *beta, a 1-form.
  DiffForm chi;
  /// Sum of squares of beta's coefficients, |beta|^2.
  Polynomial beta_norm_sq;
  /// q(x, y) over slots (x1, x2).
  Polynomial q;
  /// Q(x, y, z) = q(x,y)^2 + q(y,z)^2 + q(z,x)^2 over slots (x1, x2, x3).
  Polynomial Q;
};

ConstructionSet build_all();

/// Objects of the y = 0 reduction.
struct ReducedSystem {
  /// Coefficient of dz_i in chi with y := 0, i = 0..5.
  std::array<Polynomial, kVars> chi_y0;
  /// x3 q(x1^2, x2^2), x1 q(x2^2, x3^2), x2 q(x3^2, x1^2)
  std::array<Polynomial, 3> stated_polys;
  Polynomial sum_sq_reduced;
  /// Sum of squares of the stated polynomials.
  Polynomial sum_sq_stated;
  /// Q with z := 3 - x - y, over slots (x1, x2).
  Polynomial Q_simplex_2d;
};

ReducedSystem reduced_system(const ConstructionSet& c);

/// Exact relation between the surviving chi_y0 components and the stated
/// polynomials.
struct ReductionRelation {
  /// Indices i with chi_y0[i] identically zero.
  std::vector<int> vanishing_components;
  /// Set when the non-vanishing components are one common rational multiple
  /// of the stated polynomials (under some matching).
  std::optional<Rational> common_factor;
  /// stated_polys index matched to each non-vanishing component, if any.
  std::vector<int> matching;
};

ReductionRelation relate_reduction(const ReducedSystem& rs);

/// g(t) = d/dt (t p(t)), in slot x1. dpsi = sum_a g(x_a^2 + y_a^2) dx_a ^ dy_a
/// when the potential has the rotationally symmetric shape.
Polynomial radial_factor(const ConstructionSet& c);

/// True when dpsi equals sum_a g(x_a^2 + y_a^2) dx_a ^ dy_a exactly.
bool dpsi_is_diagonal(const ConstructionSet& c, const Polynomial& g);

/// A point of S where beta vanishes: x2^2 = x3^2 = t*, x1^2 = 3 - 2t*, y = 0,
/// with t* a root of the radial factor g bracketed by [t_lo, t_hi].
struct DegeneracyWitness {
  Polynomial radial_factor;
  Rational t_lo, t_hi;
  Rational g_at_lo, g_at_hi;
};

/// Exact search: requires the diagonal identity for dpsi, then isolates a root
/// t* of g with 0 <= t* and 2 t* < 3 by sign change and bisection to
/// `bisection_steps` halvings.
std::optional<DegeneracyWitness> find_degenerate_sphere_point(const ConstructionSet& c,
                                                              int bisection_steps = 40);

/// (cos, sin) from the rational circle parametrization at t.
std::array<Rational, 2> circle_point(const Rational& t);

/// Point of the torus T with per-factor parameters t_a.
Point torus_point(const std::array<Rational, 3>& t);

/// Rotation by the circle parameter t_a in each (x_a, y_a) plane.
RationalMatrix torus_rotation(const std::array<Rational, 3>& t);

/// Deterministic pseudorandom rational in [-span, span] with denominators up to max_den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}
  Rational next(int span = 4, int max_den = 16);
  /// Uniform-ish integer in [lo, hi]; uses raw engine output so the sequence
  /// is identical on every standard library.
  long integer(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

std::vector<Point> sample_torus_points(std::size_t n, std::uint64_t seed);

/// Stereographic point of the sphere through `base` (centred at the origin):
/// the second intersection of the line from `base` along (w - base), where
/// w = sum params_i u_i over the tangent basis u of `base`. Zero params give -base.
Vector sphere_point_from_params(std::span<const Rational> base, std::span<const Rational> params);

/// Points on S = {h = 3/2}, projected from (1,1,1,0,0,0).
std::vector<Point> sample_sphere_points(std::size_t n, std::uint64_t seed);

/// Points on x1^2 + x2^2 + x3^2 = 3 in R^3, projected from (1,1,1).
std::vector<std::array<Rational, 3>> sample_sphere3_points(std::size_t n, std::uint64_t seed);

/// Rank of dpsi restricted to the tangent space of S at `point`.
/// Throws std::invalid_argument if h(point) != 3/2.
std::size_t rank4_at(const ConstructionSet& c, const Point& point);

/// Anchor point (1,1,1,0,0,0), on both T and S.
Point anchor_point();

}  // namespace symcert

#endif  // SYMCERT_CONSTRUCTION_HPP
