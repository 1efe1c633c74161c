#pragma once

/**
 * @file kernels.hpp
 * @brief Dirichlet/Fejér kernels and Cesàro sums of algebra-valued periodic
 * functions over a fixed slice unit I.
 *
 * Fourier modes are e^{Ijθ} = cos jθ + sin jθ·I and always multiply values
 * from the LEFT:  cⱼ = (1/2π)∫ e^{-Ijθ} g(θ) dθ,  g(θ) = Σ e^{Ijθ} cⱼ.
 * The kernels themselves are real and commute with everything, so a
 * convolution F_n * g does not depend on the side F_n is applied from.
 * Integrals use the uniform trapezoid rule, which is exact for trigonometric
 * polynomials of degree below the node count.
 */

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "slicereg/hypercomplex.hpp"
#include "slicereg/numerics.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg {

// Below this |sin(x/2)| the closed forms switch to direct summation.
inline constexpr double kKernelSingularity = 1e-7;

// D_k(x) = Σ_{s=-k}^{k} e^{isx}
inline double dirichlet_series(unsigned k, double x) {
  double s = 1.0;
  for (unsigned j = 1; j <= k; ++j) s += 2.0 * std::cos(j * x);
  return s;
}

// Closed forms are evaluated at x reduced to [-π, π]; otherwise the rounding of
// (n+1)x/2 near a multiple of 2π is amplified by the small denominator.
inline double reduce_angle(double x) { return std::remainder(x, kTwoPi); }

inline double dirichlet(unsigned k, double x) {
  x = reduce_angle(x);
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < kKernelSingularity) return dirichlet_series(k, x);
  return std::sin((k + 0.5) * x) / s;
}

// F_n(x) = Σ_{|j|<=n} (1 - |j|/(n+1)) e^{ijx}
inline double fejer_series(unsigned n, double x) {
  double s = 1.0;
  for (unsigned j = 1; j <= n; ++j) s += 2.0 * (1.0 - j / (n + 1.0)) * std::cos(j * x);
  return s;
}

// F_n(x) = (1/(n+1)) Σ_{k=0}^{n} D_k(x)
inline double fejer_average(unsigned n, double x) {
  double s = 0.0;
  for (unsigned k = 0; k <= n; ++k) s += dirichlet(k, x);
  return s / (n + 1.0);
}

// F_n(x) = (1/(n+1)) (sin((n+1)x/2) / sin(x/2))²
inline double fejer(unsigned n, double x) {
  x = reduce_angle(x);
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < kKernelSingularity) return fejer_series(n, x);
  const double t = std::sin(0.5 * (n + 1.0) * x) / s;
  return t * t / (n + 1.0);
}

// 2π-periodic θ ↦ A, optionally with a known band limit N (modes in [-N, N]).
template <Algebra A>
struct PeriodicFunction {
  std::function<A(double)> fn;
  std::optional<std::size_t> support;

  A operator()(double theta) const { return fn(theta); }
};

template <Algebra A>
struct FourierCoefficients {
  ImaginaryUnit<A> unit;
  std::size_t order = 0;  // N: coefficients for j in [-N, N]
  std::vector<A> values;  // values[j + N]

  const A& operator[](long j) const { return values.at(static_cast<std::size_t>(j + static_cast<long>(order))); }

  // Σ e^{Ijθ} cⱼ
  A reconstruct(double theta) const {
    CompensatedSum<A> s;
    const long n = static_cast<long>(order);
    for (long j = -n; j <= n; ++j) s.add(slice_exp(unit, j * theta) * (*this)[j]);
    return s.value();
  }
};

// Node count used when callers do not choose: 8(n+1) rounded up to 2^k.
constexpr std::size_t default_nodes(std::size_t n) { return next_pow2(8 * (n + 1)); }

inline void require_nodes(std::size_t band, std::size_t nodes) {
  if (nodes < 4 * (band + 1)) throw DomainError("insufficient quadrature nodes");
}

template <Algebra A>
std::vector<A> sample_uniform(const PeriodicFunction<A>& g, std::size_t nodes) {
  std::vector<A> v(nodes);
  for (std::size_t m = 0; m < nodes; ++m) v[m] = g(kTwoPi * static_cast<double>(m) / static_cast<double>(nodes));
  return v;
}

template <Algebra A>
FourierCoefficients<A> fourier_coeffs(const PeriodicFunction<A>& g, const ImaginaryUnit<A>& unit, std::size_t order,
                                      std::size_t nodes) {
  require_nodes(std::max(order, g.support.value_or(0)), nodes);
  const std::vector<A> samples = sample_uniform(g, nodes);
  FourierCoefficients<A> c{unit, order, std::vector<A>(2 * order + 1)};
  const long n = static_cast<long>(order);
  for (long j = -n; j <= n; ++j) {
    CompensatedSum<A> s;
    for (std::size_t m = 0; m < nodes; ++m) {
      const double theta = kTwoPi * static_cast<double>(m) / static_cast<double>(nodes);
      s.add(slice_exp(unit, -j * theta) * samples[m]);
    }
    c.values[static_cast<std::size_t>(j + n)] = s.value() / static_cast<double>(nodes);
  }
  return c;
}

// σ_n(θ; g) = Σ_{|j|<=n} (1 - |j|/(n+1)) e^{Ijθ} cⱼ
template <Algebra A>
A cesaro_sum_coeff(const FourierCoefficients<A>& c, std::size_t n, double theta) {
  if (n > c.order) throw DomainError("Fourier coefficients do not cover the Cesaro range");
  CompensatedSum<A> s;
  const long nn = static_cast<long>(n);
  for (long j = -nn; j <= nn; ++j) {
    const double weight = 1.0 - static_cast<double>(std::abs(j)) / (n + 1.0);
    s.add(slice_exp(c.unit, j * theta) * c[j] * weight);
  }
  return s.value();
}

// σ_n(θ; g) = (1/2π) ∫ F_n(θ - φ) g(φ) dφ
template <Algebra A>
A cesaro_sum_conv(const PeriodicFunction<A>& g, std::size_t n, double theta, std::size_t nodes) {
  require_nodes(std::max(n, g.support.value_or(0)), nodes);
  CompensatedSum<A> s;
  for (std::size_t m = 0; m < nodes; ++m) {
    const double phi = kTwoPi * static_cast<double>(m) / static_cast<double>(nodes);
    s.add(g(phi) * fejer(static_cast<unsigned>(n), theta - phi));
  }
  return s.value() / static_cast<double>(nodes);
}

// g(θ) = e^{Inθ} P(e^{-Iθ}) = Σⱼ e^{Ijθ} a_{n-j}, n = deg P.
template <Algebra A>
PeriodicFunction<A> bernstein_transform(const SlicePolynomial<A>& p, const ImaginaryUnit<A>& unit) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  const std::size_t n = p.degree().value();
  return {[p, unit, n](double theta) {
            return slice_exp(unit, static_cast<double>(n) * theta) * eval(p, slice_exp(unit, -theta));
          },
          n};
}

// |(1/n) q^{-(n-1)} P'(q) - σ_{n-1}(-θ; g)| at q = e^{Iθ}. The left side is a
// direct evaluation of P'; the right side goes through quadrature Fourier
// coefficients of the transform g.
template <Algebra A>
double derivative_cesaro_identity_residual(const SlicePolynomial<A>& p, const ImaginaryUnit<A>& unit, double theta) {
  if (p.is_zero() || p.degree().value() < 1) throw DomainError("constant polynomial");
  const std::size_t n = p.degree().value();
  const A q = slice_exp(unit, theta);
  const A lhs = slice_exp(unit, -static_cast<double>(n - 1) * theta) * eval(derivative(p), q) / static_cast<double>(n);
  const auto g = bernstein_transform(p, unit);
  const auto c = fourier_coeffs(g, unit, n, default_nodes(n));
  const A rhs = cesaro_sum_coeff(c, n - 1, -theta);
  return (lhs - rhs).norm();
}

}  // namespace slicereg
