#pragma once

/**
 * @file slicepoly.hpp
 * @brief Slice regular polynomials P(q) = Σ qʲ aⱼ with coefficients on the RIGHT.
 *
 * Left/right placement matters: powers of the variable always multiply the
 * coefficients from the left, so Horner runs as r ← q·r + aⱼ.
 */

#include <algorithm>
#include <compare>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "slicereg/hypercomplex.hpp"

namespace slicereg {

// Polynomial degree with a distinguished -∞ for the zero polynomial.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t n) : value_(static_cast<long long>(n)) {}

  constexpr bool is_minus_infinity() const { return value_ == kMinusInf; }

  std::size_t value() const {
    if (is_minus_infinity()) throw DomainError("degree of the zero polynomial");
    return static_cast<std::size_t>(value_);
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    Degree d;
    d.value_ = a.value_ + b.value_;
    return d;
  }

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  static constexpr long long kMinusInf = std::numeric_limits<long long>::min();
  constexpr Degree() = default;
  long long value_ = kMinusInf;
};

template <Algebra A>
class SlicePolynomial {
 public:
  using algebra_type = A;

  SlicePolynomial() = default;
  explicit SlicePolynomial(std::vector<A> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  SlicePolynomial(std::initializer_list<A> coeffs) : coeffs_(coeffs) { trim(); }

  static SlicePolynomial monomial(std::size_t n, const A& a) {
    std::vector<A> c(n + 1);
    c[n] = a;
    return SlicePolynomial(std::move(c));
  }

  const std::vector<A>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }

  // aⱼ, zero past the degree
  A coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : A{}; }

  const A& leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial");
    return coeffs_.back();
  }

  // Σ |aⱼ|², the squared coefficient norm
  double coeff_norm2() const {
    double s = 0.0;
    for (const A& a : coeffs_) s += a.norm2();
    return s;
  }

  A operator()(const A& q) const;

  friend SlicePolynomial operator+(const SlicePolynomial& f, const SlicePolynomial& g) {
    std::vector<A> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.coeff(j) + g.coeff(j);
    return SlicePolynomial(std::move(c));
  }
  friend SlicePolynomial operator-(const SlicePolynomial& f, const SlicePolynomial& g) {
    std::vector<A> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.coeff(j) - g.coeff(j);
    return SlicePolynomial(std::move(c));
  }
  // P(q)·s for a real s
  friend SlicePolynomial operator*(SlicePolynomial f, double s) {
    for (A& a : f.coeffs_) a = a * s;
    f.trim();
    return f;
  }
  // P(q)·c: right multiplication by a constant keeps slice regularity
  friend SlicePolynomial operator*(SlicePolynomial f, const A& c) {
    for (A& a : f.coeffs_) a = a * c;
    f.trim();
    return f;
  }

  friend bool operator==(const SlicePolynomial&, const SlicePolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<A> coeffs_;
};

template <Algebra A>
A eval(const SlicePolynomial<A>& p, const A& q) {
  if (!is_slice_point(q)) throw DomainError("point is not a paravector");
  const auto& c = p.coeffs();
  A r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = q * r + *it;
  return r;
}

template <Algebra A>
A SlicePolynomial<A>::operator()(const A& q) const {
  return eval(*this, q);
}

// P'(q) = Σ q^{j-1} j aⱼ
template <Algebra A>
SlicePolynomial<A> derivative(const SlicePolynomial<A>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<A> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = c[j] * static_cast<double>(j);
  return SlicePolynomial<A>(std::move(d));
}

// Regular (*-) product: Cauchy convolution Σ qⁿ Σₖ aₖ b_{n-k}, order preserved.
template <Algebra A>
SlicePolynomial<A> star_product(const SlicePolynomial<A>& f, const SlicePolynomial<A>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<A> c(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = 0; l < b.size(); ++l) c[k + l] += a[k] * b[l];
  return SlicePolynomial<A>(std::move(c));
}

template <Algebra A>
SlicePolynomial<A> regular_conjugate(const SlicePolynomial<A>& f) {
  std::vector<A> c = f.coeffs();
  for (A& a : c) a = a.conj();
  return SlicePolynomial<A>(std::move(c));
}

// f^s = f * f^c. The coefficients Σₖ aₖ conj(a_{n-k}) pair up into real parts,
// so the result is projected onto real coefficients.
inline SlicePolynomial<Quaternion> symmetrization(const SlicePolynomial<Quaternion>& f) {
  const SlicePolynomial<Quaternion> s = star_product(f, regular_conjugate(f));
  std::vector<Quaternion> c = s.coeffs();
  for (Quaternion& a : c) a = scalar<Quaternion>(a.real());
  return SlicePolynomial<Quaternion>(std::move(c));
}

// Real coefficient list of a polynomial known to have real coefficients.
template <Algebra A>
std::vector<double> real_coefficients(const SlicePolynomial<A>& p) {
  std::vector<double> r;
  r.reserve(p.coeffs().size());
  for (const A& a : p.coeffs()) r.push_back(a.real());
  return r;
}

// f*g(q) = f(q) g(f(q)⁻¹ q f(q)), or 0 where f(q) = 0.
inline Quaternion pointwise_star_value(const SlicePolynomial<Quaternion>& f, const SlicePolynomial<Quaternion>& g,
                                       const Quaternion& q) {
  const Quaternion fq = eval(f, q);
  if (fq.is_zero()) return {};
  return fq * eval(g, fq.inverse() * q * fq);
}

// ---------------------------------------------------------------------------
// Slice restriction
// ---------------------------------------------------------------------------

inline constexpr double kSliceParallelTol = 1e-10;

namespace detail {

// Splits a coefficient into (real part, component along unit, rejection norm,
// imaginary norm). Components outside span{1, imaginary units} count as
// rejection.
template <Algebra A>
struct SliceSplit {
  double re;
  double along;
  double rejection;
  double imag_norm;
};

template <Algebra A>
SliceSplit<A> split_against(const A& a, const ImaginaryUnit<A>& unit) {
  const auto& d = unit.direction();
  double along = 0.0, imag2 = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double v = a[algebra_traits<A>::imaginary_index(k)];
    along += v * d[k];
    imag2 += v * v;
  }
  const double off2 = off_slice_norm2(a);
  double rej2 = off2;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double r = a[algebra_traits<A>::imaginary_index(k)] - along * d[k];
    rej2 += r * r;
  }
  return {a[0], along, std::sqrt(rej2), std::sqrt(imag2 + off2)};
}

}  // namespace detail

// P restricted to ℂ_I, viewed as a complex polynomial in z = x + yI.
template <Algebra A>
class ComplexSlicePolynomial {
 public:
  ComplexSlicePolynomial(ImaginaryUnit<A> unit, std::vector<std::complex<double>> coeffs)
      : unit_(std::move(unit)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  }

  const ImaginaryUnit<A>& unit() const { return unit_; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = z * r + *it;
    return r;
  }

  // u + v i  ↦  u + v·unit
  A embed(std::complex<double> z) const { return slice_value(z.real(), z.imag(), unit_); }

  SlicePolynomial<A> to_polynomial() const {
    std::vector<A> c;
    c.reserve(coeffs_.size());
    for (auto z : coeffs_) c.push_back(embed(z));
    return SlicePolynomial<A>(std::move(c));
  }

 private:
  ImaginaryUnit<A> unit_;
  std::vector<std::complex<double>> coeffs_;
};

template <Algebra A>
ComplexSlicePolynomial<A> restrict_to_slice(const SlicePolynomial<A>& p, const ImaginaryUnit<A>& unit) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coeffs().size());
  for (const A& a : p.coeffs()) {
    const auto s = detail::split_against(a, unit);
    if (s.rejection > kSliceParallelTol * s.imag_norm) throw DomainError("coefficients leave the slice");
    c.emplace_back(s.re, s.along);
  }
  return ComplexSlicePolynomial<A>(unit, std::move(c));
}

// A unit I with every aⱼ ∈ ℂ_I; the default unit when all coefficients are
// real; nothing when the imaginary parts are not parallel.
template <Algebra A>
std::optional<ImaginaryUnit<A>> common_coefficient_slice(const SlicePolynomial<A>& p) {
  const A* ref = nullptr;
  double best = 0.0;
  for (const A& a : p.coeffs()) {
    double im = 0.0;
    for (std::size_t k = 1; k < A::dimension; ++k) im += a[k] * a[k];
    if (im > best) {
      best = im;
      ref = &a;
    }
  }
  if (ref == nullptr) return default_unit<A>();
  if (!is_slice_point(*ref)) return std::nullopt;
  const ImaginaryUnit<A> unit = slice_decompose(*ref).unit;
  for (const A& a : p.coeffs()) {
    const auto s = detail::split_against(a, unit);
    if (s.rejection > kSliceParallelTol * s.imag_norm) return std::nullopt;
  }
  return unit;
}

}  // namespace slicereg
