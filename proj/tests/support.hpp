#pragma once

// Random inputs and independent oracles shared by the test suites.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "slicereg/hypercomplex.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg::testing {

using Rng = std::mt19937_64;

template <Algebra A>
A random_element(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> normal;
  A a;
  for (std::size_t k = 0; k < A::dimension; ++k) a[k] = scale * normal(rng);
  return a;
}

// x0 + Σ xₖ uₖ with Gaussian components.
template <Algebra A>
A random_paravector(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> normal;
  A a;
  a[0] = scale * normal(rng);
  for (std::size_t k = 0; k < algebra_traits<A>::imaginary_dimension; ++k)
    a[algebra_traits<A>::imaginary_index(k)] = scale * normal(rng);
  return a;
}

template <Algebra A>
ImaginaryUnit<A> random_unit(Rng& rng) {
  std::normal_distribution<double> normal;
  typename ImaginaryUnit<A>::Direction d;
  for (double& v : d) v = normal(rng);
  return ImaginaryUnit<A>::from_direction(d);
}

template <Algebra A>
SlicePolynomial<A> random_polynomial(Rng& rng, std::size_t degree) {
  std::vector<A> c(degree + 1);
  for (auto& a : c) a = random_element<A>(rng);
  return SlicePolynomial<A>(std::move(c));
}

// Coefficients u + v·I in one slice.
template <Algebra A>
SlicePolynomial<A> random_slice_polynomial(Rng& rng, std::size_t degree, const ImaginaryUnit<A>& unit) {
  std::normal_distribution<double> normal;
  std::vector<A> c(degree + 1);
  for (auto& a : c) a = slice_value(normal(rng), normal(rng), unit);
  return SlicePolynomial<A>(std::move(c));
}

// A point with |q| = r in a random slice.
template <Algebra A>
A random_sphere_point(Rng& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 3.141592653589793);
  const double t = u(rng);
  return slice_value(r * std::cos(t), r * std::sin(t), random_unit<A>(rng));
}

// Σ qʲ aⱼ with each power built by repeated left multiplication.
template <Algebra A>
A naive_eval(const SlicePolynomial<A>& p, const A& q) {
  A sum{};
  A power = scalar<A>(1.0);
  for (const A& a : p.coeffs()) {
    sum += power * a;
    power = q * power;
  }
  return sum;
}

// Σ |q|ʲ |aⱼ|, the natural scale of an evaluation error.
template <Algebra A>
double eval_scale(const SlicePolynomial<A>& p, const A& q) {
  double s = 0.0, r = 1.0;
  for (const A& a : p.coeffs()) {
    s += r * a.norm();
    r *= q.norm();
  }
  return s;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

}  // namespace slicereg::testing
