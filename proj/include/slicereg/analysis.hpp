#pragma once

/**
 * @file analysis.hpp
 * @brief Extremal moduli on spheres |q| = R, the H² norm, zero sets.
 *
 * Sphere reduction. For x, y real and any unit J, (x + yJ)ʲ = αⱼ + βⱼJ with
 * the same real αⱼ, βⱼ as for the complex number (x + yi)ʲ, hence
 *
 *     P(x + yJ) = A + J·B,   A = Σ αⱼaⱼ,  B = Σ βⱼaⱼ   (independent of J).
 *
 * Left multiplication by a unit imaginary J is an isometry in ℍ, 𝕆 and (for
 * paravectors) ℝ_{0,m}, so
 *
 *     |P(x + yJ)|² = |A|² + |B|² + 2⟨J, w⟩,   wₖ = ⟨A, uₖB⟩,
 *
 * with uₖ the imaginary basis units. Over the whole sphere x + y𝕊 the extremes
 * sit at J = ±w/|w|. That leaves a one-dimensional search over the meridian
 * angle θ ∈ [0, π] with x = R cos θ, y = R sin θ.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "slicereg/hypercomplex.hpp"
#include "slicereg/numerics.hpp"
#include "slicereg/roots.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg {

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kNormTol = 1e-9;
inline constexpr std::size_t kGridPerDegree = 256;

template <Algebra A>
struct ExtremumResult {
  double value = 0.0;
  A witness{};
  double tolerance = kNormTol;
  long evaluations = 0;
};

template <Algebra A>
struct SphereSplit {
  A a;  // J-independent part
  A b;  // coefficient of J
};

template <Algebra A>
SphereSplit<A> sphere_split(const SlicePolynomial<A>& p, double x, double y) {
  const auto& c = p.coeffs();
  A ra, rb;
  // (x + yJ)(ra + J rb) + aⱼ = (x ra - y rb + aⱼ) + J (x rb + y ra)
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const A na = ra * x - rb * y + *it;
    rb = rb * x + ra * y;
    ra = na;
  }
  return {ra, rb};
}

// The unit J extremizing |P(x + yJ)| over the sphere, and the value there.
template <Algebra A>
struct SphereExtreme {
  double value;
  A point;
};

template <Algebra A>
SphereExtreme<A> sphere_extreme(const SlicePolynomial<A>& p, double x, double y, bool maximize) {
  const auto s = sphere_split(p, x, y);
  typename ImaginaryUnit<A>::Direction w{};
  double w2 = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = inner(s.a, imaginary_basis<A>(k) * s.b);
    w2 += w[k] * w[k];
  }
  ImaginaryUnit<A> unit = default_unit<A>();
  if (w2 > 0.0) {
    unit = ImaginaryUnit<A>::from_direction(w);
    if (!maximize) unit = -unit;
  }
  // evaluate |A + J B| directly: no cancellation when the minimum is a zero
  const A value = s.a + unit.value() * s.b;
  return {value.norm(), slice_value(x, y, unit)};
}

namespace detail {

struct AngleSearch {
  double angle;
  double value;
  long evaluations;
};

// Maximizes f over [lo, hi] (closed when `closed`, else periodic) by a uniform
// grid followed by Brent refinement around the best few local maxima.
template <class F>
AngleSearch grid_then_refine(F&& f, double lo, double hi, std::size_t intervals, bool closed) {
  const std::size_t count = closed ? intervals + 1 : intervals;
  const double h = (hi - lo) / static_cast<double>(intervals);
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = f(lo + h * static_cast<double>(i));
  long evals = static_cast<long>(count);

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < count; ++i) {
    const bool has_left = closed ? i > 0 : true;
    const bool has_right = closed ? i + 1 < count : true;
    const double left = has_left ? v[(i + count - 1) % count] : -std::numeric_limits<double>::infinity();
    const double right = has_right ? v[(i + 1) % count] : -std::numeric_limits<double>::infinity();
    if (v[i] >= left && v[i] >= right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b] || (v[a] == v[b] && a < b); });
  if (peaks.size() > 4) peaks.resize(4);

  constexpr double lowest = -std::numeric_limits<double>::infinity();
  AngleSearch best{lo, lowest, 0};
  for (std::size_t i = 0; i < count; ++i)
    if (v[i] > best.value) best = {lo + h * static_cast<double>(i), v[i], 0};
  for (std::size_t i : peaks) {
    const double c = lo + h * static_cast<double>(i);
    double a = c - h, b = c + h;
    if (closed) {
      a = std::max(a, lo);
      b = std::min(b, hi);
    }
    const auto r = brent_minimize([&](double t) { return -f(t); }, a, b);
    evals += r.evaluations;
    if (-r.fx > best.value) best = {r.x, -r.fx, 0};
  }
  best.evaluations = evals;
  return best;
}

template <Algebra A>
std::size_t grid_intervals(const SlicePolynomial<A>& p) {
  return kGridPerDegree * (p.degree().value() + 1);
}

template <Algebra A>
ExtremumResult<A> sphere_search(const SlicePolynomial<A>& p, double radius, double tol, bool maximize) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double sign = maximize ? 1.0 : -1.0;
  auto f = [&](double t) {
    return sign * sphere_extreme(p, radius * std::cos(t), radius * std::sin(t), maximize).value;
  };
  const auto best = grid_then_refine(f, 0.0, kPi, grid_intervals(p), true);
  const auto e = sphere_extreme(p, radius * std::cos(best.angle), radius * std::sin(best.angle), maximize);
  return {e.value, e.point, tol, best.evaluations + 1};
}

}  // namespace detail

// max_{|q| = R} |P(q)| over the full sphere.
template <Algebra A>
ExtremumResult<A> sup_norm_sphere(const SlicePolynomial<A>& p, double radius = 1.0, double tol = kNormTol) {
  return detail::sphere_search(p, radius, tol, true);
}

// min_{|q| = R} |P(q)| over the full sphere.
template <Algebra A>
ExtremumResult<A> min_modulus_sphere(const SlicePolynomial<A>& p, double radius = 1.0, double tol = kNormTol) {
  return detail::sphere_search(p, radius, tol, false);
}

// ‖P‖ = max_{|q| <= 1} |P(q)|, attained on the unit sphere.
template <Algebra A>
double sup_norm(const SlicePolynomial<A>& p) {
  return sup_norm_sphere(p, 1.0).value;
}

// Ankeny–Rivlin growth quantity max_{|q| = R} |P(q)|, R >= 1.
template <Algebra A>
double growth_max(const SlicePolynomial<A>& p, double radius) {
  if (!(radius >= 1.0)) throw DomainError("growth radius must be >= 1");
  return sup_norm_sphere(p, radius).value;
}

// max over the single circle {R e^{Iθ}} in one slice ℂ_I. Equal to the sphere
// maximum when every coefficient lies in ℂ_I, a lower bound otherwise.
template <Algebra A>
ExtremumResult<A> slice_circle_max(const SlicePolynomial<A>& p, double radius, const ImaginaryUnit<A>& unit,
                                   double tol = kNormTol) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  auto f = [&](double t) { return eval(p, slice_exp(unit, t) * radius).norm(); };
  const auto best = detail::grid_then_refine(f, 0.0, kTwoPi, detail::grid_intervals(p), false);
  const A w = slice_exp(unit, best.angle) * radius;
  return {eval(p, w).norm(), w, tol, best.evaluations};
}

// Lower bound on the sphere maximum from `units` random slices, each scanned
// on a coarse circle. Cross-checks the exact reduction.
template <Algebra A, class Rng>
double sampled_sphere_max(const SlicePolynomial<A>& p, double radius, Rng& rng, std::size_t units = 256,
                          std::size_t nodes_per_degree = 32) {
  std::normal_distribution<double> normal;
  const std::size_t nodes = nodes_per_degree * (p.degree().value() + 1);
  double best = 0.0;
  for (std::size_t u = 0; u < units; ++u) {
    typename ImaginaryUnit<A>::Direction d;
    for (double& v : d) v = normal(rng);
    const auto unit = ImaginaryUnit<A>::from_direction(d);
    for (std::size_t m = 0; m < nodes; ++m) {
      const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(nodes);
      best = std::max(best, eval(p, slice_exp(unit, t) * radius).norm());
    }
  }
  return best;
}

// Normalized H² norm (1/2π ∫|P_I(e^{Iθ})|² dθ)^{1/2} = (Σ|aₘ|²)^{1/2}.
template <Algebra A>
double h2_norm(const SlicePolynomial<A>& p) {
  return std::sqrt(p.coeff_norm2());
}

// ---------------------------------------------------------------------------
// Representation formula and the convex-combination identity (ℍ)
// ---------------------------------------------------------------------------

// (P(x+yI) + P(x-yI))/2 + JI·(P(x-yI) - P(x+yI))/2, equal to P(x + yJ).
inline Quaternion representation_value(const SlicePolynomial<Quaternion>& p, double x, double y,
                                       const ImaginaryUnit<Quaternion>& j,
                                       const ImaginaryUnit<Quaternion>& i = default_unit<Quaternion>()) {
  const Quaternion vp = eval(p, slice_value(x, y, i));
  const Quaternion vm = eval(p, slice_value(x, -y, i));
  return (vp + vm) * 0.5 + j.value() * i.value() * (vm - vp) * 0.5;
}

// | |P(x+yJ)|² - (1+⟨J,I⟩)/2 |P(x+yI)|² - (1-⟨J,I⟩)/2 |P(x-yI)|² |.
// Vanishes when the coefficients of P lie in ℂ_I; not in general.
inline double convex_combination_residual(const SlicePolynomial<Quaternion>& p, double x, double y,
                                          const ImaginaryUnit<Quaternion>& j, const ImaginaryUnit<Quaternion>& i) {
  const double c = inner_product(j, i);
  const double lhs = eval(p, slice_value(x, y, j)).norm2();
  const double plus = eval(p, slice_value(x, y, i)).norm2();
  const double minus = eval(p, slice_value(x, -y, i)).norm2();
  return std::abs(lhs - 0.5 * (1.0 + c) * plus - 0.5 * (1.0 - c) * minus);
}

// ---------------------------------------------------------------------------
// Zero sets (ℍ)
// ---------------------------------------------------------------------------

inline constexpr double kZeroAccept = 1e-8;
inline constexpr double kZeroReject = 1e-4;

struct RealZero {
  double location;
  int multiplicity;
};

struct IsolatedZero {
  Quaternion location;
  int multiplicity;
};

// The whole sphere x + y𝕊.
struct SphericalZero {
  double x;
  double y;
  int multiplicity;
};

struct ZeroSet {
  std::vector<RealZero> real_zeros;
  std::vector<IsolatedZero> isolated_zeros;
  std::vector<SphericalZero> spherical_zeros;

  // spheres count twice
  int total_multiplicity() const {
    int s = 0;
    for (const auto& z : real_zeros) s += z.multiplicity;
    for (const auto& z : isolated_zeros) s += z.multiplicity;
    for (const auto& z : spherical_zeros) s += 2 * z.multiplicity;
    return s;
  }

  bool empty() const { return real_zeros.empty() && isolated_zeros.empty() && spherical_zeros.empty(); }

  // Smallest |q| over all zeros; +inf when there are none.
  double min_modulus() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& z : real_zeros) m = std::min(m, std::abs(z.location));
    for (const auto& z : isolated_zeros) m = std::min(m, z.location.norm());
    for (const auto& z : spherical_zeros) m = std::min(m, std::hypot(z.x, z.y));
    return m;
  }

  double max_modulus() const {
    double m = 0.0;
    for (const auto& z : real_zeros) m = std::max(m, std::abs(z.location));
    for (const auto& z : isolated_zeros) m = std::max(m, z.location.norm());
    for (const auto& z : spherical_zeros) m = std::max(m, std::hypot(z.x, z.y));
    return m;
  }
};

namespace detail {

inline double zero_scale(const SlicePolynomial<Quaternion>& p) { return 1.0 + std::sqrt(p.coeff_norm2()); }

// Q = (q² - 2xq + x² + y²)·S; the remainder is dropped.
inline SlicePolynomial<Quaternion> divide_sphere(const SlicePolynomial<Quaternion>& q, double x, double y) {
  std::vector<Quaternion> r = q.coeffs();
  const std::size_t n = r.size() - 1;
  if (n < 2) return q;
  const double b = -2.0 * x, c = x * x + y * y;
  std::vector<Quaternion> s(n - 1);
  for (std::size_t k = n; k >= 2; --k) {
    const Quaternion lead = r[k];
    s[k - 2] = lead;
    r[k - 1] -= lead * b;
    r[k - 2] -= lead * c;
  }
  return SlicePolynomial<Quaternion>(std::move(s));
}

}  // namespace detail

// Zeros of P from the roots of its real symmetrization P^s: every sphere
// x + y𝕊 carrying a root of P^s carries either the whole sphere of zeros or
// exactly one zero of P.
inline ZeroSet zero_set(const SlicePolynomial<Quaternion>& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  ZeroSet zs;
  if (p.degree().value() == 0) return zs;
  const double scale = detail::zero_scale(p);
  const auto i0 = default_unit<Quaternion>();

  for (const auto& root : roots_real_poly(real_coefficients(symmetrization(p)))) {
    const double x = root.location.real(), y = root.location.imag();
    if (y == 0.0) {
      if (root.multiplicity % 2 != 0) throw ClassificationError("classification ambiguous: odd real root multiplicity");
      const double r = eval(p, scalar<Quaternion>(x)).norm() / scale;
      if (r > kZeroAccept) throw ClassificationError("classification ambiguous: real root residual");
      zs.real_zeros.push_back({x, root.multiplicity / 2});
      continue;
    }

    SlicePolynomial<Quaternion> q = p;
    int spheres = 0;
    int remaining = root.multiplicity;
    Quaternion vp, vm;
    for (;;) {
      vp = eval(q, slice_value(x, y, i0));
      vm = eval(q, slice_value(x, -y, i0));
      const double s = std::max(vp.norm(), vm.norm()) / detail::zero_scale(q);
      if (remaining >= 2 && s <= kZeroAccept) {
        ++spheres;
        remaining -= 2;
        q = detail::divide_sphere(q, x, y);
        continue;
      }
      if (remaining > 0 && s <= kZeroAccept) throw ClassificationError("classification ambiguous: sphere count");
      break;
    }
    if (spheres > 0) zs.spherical_zeros.push_back({x, y, spheres});
    if (remaining == 0) continue;

    // F(J) = b + (J I0) c = 0  =>  J = b c⁻¹ I0
    const Quaternion b = (vp + vm) * 0.5;
    const Quaternion c = (vm - vp) * 0.5;
    const double cs = c.norm() / detail::zero_scale(q);
    if (cs <= kZeroAccept) throw ClassificationError("classification ambiguous: degenerate slice function");
    const Quaternion j = b * c.inverse() * i0.value();
    const double deviation = std::max(std::abs(j.real()), std::abs(j.norm() - 1.0));
    if (deviation >= kZeroReject) throw ClassificationError("classification ambiguous: no zero on a root sphere of P^s");
    if (deviation > kZeroAccept) throw ClassificationError("classification ambiguous: isolated zero off the unit sphere");
    const auto unit = ImaginaryUnit<Quaternion>::from_direction({j[1], j[2], j[3]});
    zs.isolated_zeros.push_back({slice_value(x, y, unit), remaining});
  }
  return zs;
}

}  // namespace slicereg
