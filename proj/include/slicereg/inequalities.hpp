#pragma once

/**
 * @file inequalities.hpp
 * @brief Each inequality as a checkable predicate with a ratio report.
 *
 * A report always compares lhs against rhs:
 *
 *     holds  ⇔  lhs <= rhs·(1 + rel) + abs          (strict checks: lhs < rhs)
 *
 * Implication-style checks (Erdős–Lax, Ankeny–Rivlin, the converse scenario,
 * the minimum-modulus dual) also record whether their hypotheses were met. A
 * failed inequality is a violation only when they were.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "slicereg/analysis.hpp"
#include "slicereg/hypercomplex.hpp"
#include "slicereg/roots.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg {

struct Tolerances {
  double rel = 1e-7;
  double abs = 1e-10;
};

inline constexpr double kEqualityRatioWindow = 1e-6;
inline constexpr double kSubleadingTol = 1e-8;
inline constexpr double kZeroFreeTol = 1e-9;

struct VerificationReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = false;
  double margin = 0.0;  // rhs(1+rel) + abs - lhs
  bool strict = false;
  bool equality_case = false;
  std::vector<double> witness_lhs;
  std::vector<double> witness_rhs;
  bool preconditions_met = true;
  std::vector<std::string> reasons;
  Tolerances tolerances;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> scalars;
  std::map<std::string, std::vector<double>> series;

  // A held inequality failed while its hypotheses were satisfied.
  bool violation() const { return preconditions_met && !holds; }

  void fail_precondition(std::string reason) {
    preconditions_met = false;
    reasons.push_back(std::move(reason));
  }
};

namespace detail {

inline VerificationReport make_report(std::string name, Tolerances tol, bool strict = false) {
  VerificationReport r;
  r.name = std::move(name);
  r.tolerances = tol;
  r.strict = strict;
  return r;
}

inline void finalize(VerificationReport& r, bool extra_condition = true) {
  if (r.rhs != 0.0)
    r.ratio = r.lhs / r.rhs;
  else
    r.ratio = (r.lhs == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  r.margin = r.rhs * (1.0 + r.tolerances.rel) + r.tolerances.abs - r.lhs;
  r.holds = (r.strict ? r.lhs < r.rhs : r.margin >= 0.0) && extra_condition;
  if (!r.holds) r.equality_case = false;
}

template <Algebra A>
std::vector<double> components_of(const A& a) {
  return {a.components().begin(), a.components().end()};
}

// (Σ_{j<n} |aⱼ|²)^{1/2} / |aₙ|
template <Algebra A>
double subleading_mass(const SlicePolynomial<A>& p) {
  const auto& c = p.coeffs();
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) s += c[j].norm2();
  return std::sqrt(s) / c.back().norm();
}

template <Algebra A>
std::size_t require_nonconstant(const SlicePolynomial<A>& p) {
  if (p.is_zero() || p.degree().value() == 0) throw DomainError("constant polynomial");
  return p.degree().value();
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Structure of (λ + μqⁿ)/2: only a₀ and aₙ, with equal moduli.
template <Algebra A>
bool is_two_term_extremal(const SlicePolynomial<A>& p) {
  const auto& c = p.coeffs();
  const double an = c.back().norm();
  double mid = 0.0;
  for (std::size_t j = 1; j + 1 < c.size(); ++j) mid += c[j].norm2();
  return std::sqrt(mid) <= kSubleadingTol * an && std::abs(c.front().norm() - an) <= kSubleadingTol * an;
}

}  // namespace detail

// ‖P'‖ <= n‖P‖, equality exactly for P = qⁿaₙ.
template <Algebra A>
VerificationReport bernstein_check(const SlicePolynomial<A>& p, Tolerances tol = {}) {
  const std::size_t n = detail::require_nonconstant(p);
  auto r = detail::make_report("bernstein", tol);
  const auto d = sup_norm_sphere(derivative(p));
  const auto s = sup_norm_sphere(p);
  r.lhs = d.value;
  r.rhs = static_cast<double>(n) * s.value;
  r.witness_lhs = detail::components_of(d.witness);
  r.witness_rhs = detail::components_of(s.witness);
  const double mass = detail::subleading_mass(p);
  r.scalars["subleading_mass"] = mass;
  r.scalars["norm_p"] = s.value;
  r.scalars["norm_dp"] = d.value;
  detail::finalize(r);
  r.equality_case = r.holds && std::abs(r.ratio - 1.0) <= kEqualityRatioWindow && mass <= kSubleadingTol;
  return r;
}

// ‖P'‖₂ <= n‖P‖₂ in closed form: Σ m²|aₘ|² <= n² Σ |aₘ|².
template <Algebra A>
VerificationReport bernstein_l2_check(const SlicePolynomial<A>& p, Tolerances tol = {1e-12, 0.0}) {
  const std::size_t n = detail::require_nonconstant(p);
  auto r = detail::make_report("bernstein-l2", tol);
  double weighted = 0.0;
  for (std::size_t m = 0; m < p.coeffs().size(); ++m)
    weighted += static_cast<double>(m * m) * p.coeffs()[m].norm2();
  r.lhs = std::sqrt(weighted);
  r.rhs = static_cast<double>(n) * h2_norm(p);
  const double mass = detail::subleading_mass(p);
  r.scalars["subleading_mass"] = mass;
  detail::finalize(r);
  r.equality_case = r.holds && mass <= kSubleadingTol;
  return r;
}

// n·min|P| <= min|P'| on the unit sphere. Needs every zero in the closed unit
// ball and, as for Erdős–Lax, coefficients in one slice: q + 3 violates it
// outright, and generic quaternionic products of factors (q - c), |c| <= 1, do
// too. Both hypotheses are recorded as preconditions.
inline VerificationReport bernstein_min_check(const SlicePolynomial<Quaternion>& p, Tolerances tol = {}) {
  const std::size_t n = detail::require_nonconstant(p);
  auto r = detail::make_report("bernstein-min", tol);
  const auto mp = min_modulus_sphere(p);
  const auto md = min_modulus_sphere(derivative(p));
  r.lhs = static_cast<double>(n) * mp.value;
  r.rhs = md.value;
  r.witness_lhs = detail::components_of(mp.witness);
  r.witness_rhs = detail::components_of(md.witness);
  if (!common_coefficient_slice(p)) r.fail_precondition("coefficients do not lie in a common slice");
  try {
    const double far = zero_set(p).max_modulus();
    r.scalars["max_zero_modulus"] = far;
    if (far > 1.0 + kZeroFreeTol) r.fail_precondition("a zero lies outside the closed unit ball (|q| = " + detail::fmt(far) + ")");
  } catch (const ClassificationError& e) {
    r.fail_precondition(e.what());
  }
  const double mass = detail::subleading_mass(p);
  r.scalars["subleading_mass"] = mass;
  detail::finalize(r);
  r.equality_case = r.holds && std::abs(r.ratio - 1.0) <= kEqualityRatioWindow && mass <= kSubleadingTol;
  return r;
}

namespace detail {

inline void erdos_lax_sides(VerificationReport& r, const SlicePolynomial<Quaternion>& p, std::size_t n) {
  const auto d = sup_norm_sphere(derivative(p));
  const auto s = sup_norm_sphere(p);
  r.lhs = d.value;
  r.rhs = 0.5 * static_cast<double>(n) * s.value;
  r.witness_lhs = components_of(d.witness);
  r.witness_rhs = components_of(s.witness);
  r.scalars["norm_p"] = s.value;
  r.scalars["norm_dp"] = d.value;
}

}  // namespace detail

// ‖P'‖ <= (n/2)‖P‖ when all aⱼ lie in one slice ℂ_I and P_I has no zero in
// the open unit disk.
inline VerificationReport erdos_lax_subclass_check(const SlicePolynomial<Quaternion>& p, Tolerances tol = {}) {
  const std::size_t n = detail::require_nonconstant(p);
  auto r = detail::make_report("erdos-lax", tol);
  detail::erdos_lax_sides(r, p, n);
  if (const auto unit = common_coefficient_slice(p)) {
    const auto restricted = restrict_to_slice(p, *unit);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& z : complex_roots(restricted.coeffs())) nearest = std::min(nearest, std::abs(z.location));
    r.scalars["min_zero_modulus"] = nearest;
    r.series["slice_unit"] = {unit->direction().begin(), unit->direction().end()};
    if (nearest < 1.0 - kZeroFreeTol)
      r.fail_precondition("restriction to the slice has a zero in the open unit disk (|z| = " + detail::fmt(nearest) + ")");
  } else {
    r.fail_precondition("coefficients do not lie in a common slice");
  }
  detail::finalize(r);
  r.equality_case = r.holds && std::abs(r.ratio - 1.0) <= kEqualityRatioWindow && detail::is_two_term_extremal(p);
  return r;
}

// Same inequality under the zero-structure hypothesis: no zero in the open
// ball, zeros real or spherical, at most one isolated nonreal zero, simple.
inline VerificationReport erdos_lax_zero_structure_check(const SlicePolynomial<Quaternion>& p, Tolerances tol = {}) {
  const std::size_t n = detail::require_nonconstant(p);
  auto r = detail::make_report("erdos-lax-zeros", tol);
  detail::erdos_lax_sides(r, p, n);
  try {
    const ZeroSet zs = zero_set(p);
    r.scalars["min_zero_modulus"] = zs.min_modulus();
    r.scalars["isolated_zeros"] = static_cast<double>(zs.isolated_zeros.size());
    if (zs.min_modulus() < 1.0 - kZeroFreeTol) r.fail_precondition("a zero lies in the open unit ball");
    if (zs.isolated_zeros.size() > 1) r.fail_precondition("more than one isolated zero");
    for (const auto& z : zs.isolated_zeros)
      if (z.multiplicity != 1) r.fail_precondition("isolated zero of multiplicity " + std::to_string(z.multiplicity));
  } catch (const ClassificationError& e) {
    r.fail_precondition(e.what());
  }
  detail::finalize(r);
  r.equality_case = r.holds && std::abs(r.ratio - 1.0) <= kEqualityRatioWindow && detail::is_two_term_extremal(p);
  return r;
}

// |p'(a)/p(a)| > n/2 at a = e^{iθ} for p = Π(z - zₘ) with all |zₘ| < 1, via
// Re(a/(a - zₘ)) > 1/2 termwise.
inline VerificationReport lax_ratio_check(std::span<const std::complex<double>> zeros, double theta) {
  auto r = detail::make_report("lax-ratio", Tolerances{0.0, 0.0}, true);
  const std::complex<double> a = std::polar(1.0, theta);
  std::complex<double> log_derivative = 0.0;
  std::vector<double> terms;
  terms.reserve(zeros.size());
  bool terms_ok = true;
  double nearest = 0.0;
  for (const auto& z : zeros) {
    nearest = std::max(nearest, std::abs(z));
    if (a == z) throw DomainError("evaluation point coincides with a zero");
    log_derivative += 1.0 / (a - z);
    terms.push_back((a / (a - z)).real());
    terms_ok = terms_ok && terms.back() > 0.5;
  }
  if (nearest >= 1.0) r.fail_precondition("a zero lies outside the open unit disk");
  r.lhs = 0.5 * static_cast<double>(zeros.size());
  r.rhs = std::abs(log_derivative);
  r.witness_lhs = {a.real(), a.imag()};
  r.series["term_real_parts"] = terms;
  r.scalars["sum_real_parts"] = (a * log_derivative).real();
  detail::finalize(r, terms_ok);
  return r;
}

namespace detail {

inline SlicePolynomial<Quaternion> normalized_by_norm(const SlicePolynomial<Quaternion>& p, double& norm) {
  norm = sup_norm(p);
  if (!(norm > 0.0)) throw DomainError("zero polynomial");
  return p * (1.0 / norm);
}

// all zeros outside the open ball and coefficients in one slice
inline void complex_zero_free_hypothesis(VerificationReport& r, const SlicePolynomial<Quaternion>& p) {
  if (!common_coefficient_slice(p)) r.fail_precondition("coefficients do not lie in a common slice");
  try {
    const double nearest = zero_set(p).min_modulus();
    r.scalars["min_zero_modulus"] = nearest;
    if (nearest < 1.0 - kZeroFreeTol) r.fail_precondition("a zero lies in the open unit ball (|q| = " + fmt(nearest) + ")");
  } catch (const ClassificationError& e) {
    r.fail_precondition(e.what());
  }
}

}  // namespace detail

// max_{|q|=R} |P| <= (1 + Rⁿ)/2 for ‖P‖ = 1 (normalized on entry) and P free
// of zeros in the open ball.
inline VerificationReport ankeny_growth_check(const SlicePolynomial<Quaternion>& p, double radius,
                                              Tolerances tol = {}) {
  const std::size_t n = detail::require_nonconstant(p);
  if (!(radius > 1.0)) throw DomainError("growth radius must be > 1");
  auto r = detail::make_report("ankeny-growth", tol);
  double norm = 0.0;
  const auto q = detail::normalized_by_norm(p, norm);
  r.scalars["input_norm"] = norm;
  r.scalars["radius"] = radius;
  const auto g = sup_norm_sphere(q, radius);
  r.lhs = g.value;
  r.rhs = 0.5 * (1.0 + std::pow(radius, static_cast<double>(n)));
  r.witness_lhs = detail::components_of(g.witness);
  detail::complex_zero_free_hypothesis(r, q);
  detail::finalize(r);
  r.equality_case = r.holds && std::abs(r.ratio - 1.0) <= kEqualityRatioWindow && detail::is_two_term_extremal(q);
  return r;
}

// For ℂ_I-coefficient P: rotate and scale so that P(1) = ‖P‖ = 1, i.e.
// P̃(z) = P(e^{Iθ*} z) / P(e^{Iθ*}) with θ* the argmax of |P| on the circle.
inline SlicePolynomial<Quaternion> normalize_at_one(const SlicePolynomial<Quaternion>& p) {
  const auto unit = common_coefficient_slice(p);
  if (!unit) throw DomainError("coefficients do not lie in a common slice");
  const auto pi = restrict_to_slice(p, *unit);
  const auto peak = slice_circle_max(p, 1.0, *unit);
  const auto sp = slice_decompose(peak.witness);
  const double theta = std::atan2(sp.y * inner_product(sp.unit, *unit), sp.x);
  const std::complex<double> w = std::polar(1.0, theta);
  const std::complex<double> scale = 1.0 / pi(w);
  std::vector<std::complex<double>> c = pi.coeffs();
  std::complex<double> power = 1.0;
  for (auto& v : c) {
    v *= power * scale;
    power *= w;
  }
  return ComplexSlicePolynomial<Quaternion>(*unit, std::move(c)).to_polynomial();
}

inline constexpr std::size_t kConverseSamples = 16;

// R samples in (1, δ): 1 + (δ-1)·10^{-4(1 - k/count)}, k = 0..count-1.
inline std::vector<double> converse_radii(double delta, std::size_t count = kConverseSamples) {
  std::vector<double> radii(count);
  for (std::size_t k = 0; k < count; ++k)
    radii[k] = 1.0 + (delta - 1.0) * std::pow(10.0, -4.0 * (1.0 - static_cast<double>(k) / static_cast<double>(count)));
  return radii;
}

// Converse of Ankeny–Rivlin as an implication: if P(1) = ‖P‖ = 1 and the
// growth bound holds at every sampled R in (1, δ), then some zero of P has
// |q| >= 1. lhs = 1, rhs = largest zero modulus. Failing hypotheses are a
// neutral outcome.
inline VerificationReport ankeny_converse_scenario(const SlicePolynomial<Quaternion>& p, double delta,
                                                   std::size_t samples = kConverseSamples) {
  const std::size_t n = detail::require_nonconstant(p);
  if (!(delta > 1.0)) throw DomainError("delta must be > 1");
  auto r = detail::make_report("ankeny-converse", Tolerances{0.0, 1e-8});

  const Quaternion p1 = eval(p, scalar<Quaternion>(1.0));
  const double norm = sup_norm(p);
  r.scalars["p_at_1_defect"] = (p1 - scalar<Quaternion>(1.0)).norm();
  r.scalars["norm_p"] = norm;
  if ((p1 - scalar<Quaternion>(1.0)).norm() > 1e-8 || std::abs(norm - 1.0) > 1e-8)
    r.fail_precondition("normalization P(1) = ||P|| = 1 fails");

  const auto ps = symmetrization(p);
  const auto radii = converse_radii(delta, samples);
  std::vector<double> growth, ps_growth;
  const double nd = static_cast<double>(n);
  for (double radius : radii) {
    const double bound = 0.5 * (1.0 + std::pow(radius, nd));
    growth.push_back(sup_norm_sphere(p, radius).value / bound);
    ps_growth.push_back(sup_norm_sphere(ps, radius).value / (0.5 * (1.0 + std::pow(radius, 2.0 * nd))));
  }
  r.series["radii"] = radii;
  r.series["growth_ratio"] = growth;
  r.series["ps_growth_ratio"] = ps_growth;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (growth[k] > 1.0 + 1e-9) {
      r.fail_precondition("growth bound fails at R = " + detail::fmt(radii[k]));
      break;
    }
  }

  // P^s(1), (P^s)'(1) and the logarithmic derivative of P^s at 1
  const auto psc = real_coefficients(ps);
  const double ps1 = eval(ps, scalar<Quaternion>(1.0)).real();
  const double dps1 = eval(derivative(ps), scalar<Quaternion>(1.0)).real();
  r.scalars["ps_at_1"] = ps1;
  r.scalars["dps_at_1"] = dps1;
  r.scalars["degree"] = nd;
  const std::vector<std::complex<double>> cps(psc.begin(), psc.end());
  const auto ps_roots = aberth_ehrlich(cps);
  double outer = 0.0;
  for (const auto& z : ps_roots) outer = std::max(outer, std::abs(z));
  r.scalars["ps_max_zero_modulus"] = outer;
  if (outer < 1.0) {
    const auto lax = lax_ratio_check(ps_roots, 0.0);
    r.scalars["ps_lax_ratio"] = lax.rhs;
    r.scalars["ps_lax_holds"] = lax.holds ? 1.0 : 0.0;
  }

  r.lhs = 1.0;
  try {
    r.rhs = zero_set(p).max_modulus();
  } catch (const ClassificationError& e) {
    r.rhs = outer;
    r.reasons.push_back(std::string("zero set from P^s roots: ") + e.what());
  }
  detail::finalize(r);
  return r;
}

}  // namespace slicereg
