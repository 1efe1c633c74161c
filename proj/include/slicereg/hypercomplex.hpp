#pragma once

/**
 * @file hypercomplex.hpp
 * @brief Coefficient algebras for slice regular polynomials.
 *
 *   Quaternion   ℍ      basis {1, i, j, k},  i² = j² = k² = ijk = -1
 *   Octonion     𝕆      Cayley–Dickson pairs (a, b) of quaternions
 *   Clifford<M>  ℝ_{0,M} blades indexed by subsets of {e1..eM}, eᵢ² = -1
 *
 * Every algebra stores its real components in a fixed array and shares the
 * linear-space operations; only the product and the conjugation differ.
 * Slice points q = x + yI live in span{1, imaginary units}: all non-real
 * components for ℍ and 𝕆, the paravectors for ℝ_{0,M}.
 */

#include <array>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slicereg {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <class Derived, std::size_t N>
class Components {
 public:
  static constexpr std::size_t dimension = N;

  constexpr Components() = default;
  constexpr explicit Components(const std::array<double, N>& c) : c_(c) {}

  constexpr double operator[](std::size_t k) const { return c_[k]; }
  constexpr double& operator[](std::size_t k) { return c_[k]; }
  constexpr const std::array<double, N>& components() const { return c_; }

  constexpr double real() const { return c_[0]; }

  constexpr double norm2() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  constexpr bool is_zero() const {
    for (double v : c_)
      if (v != 0.0) return false;
    return true;
  }

  friend constexpr Derived operator+(Derived a, const Derived& b) {
    for (std::size_t k = 0; k < N; ++k) a[k] += b[k];
    return a;
  }
  friend constexpr Derived operator-(Derived a, const Derived& b) {
    for (std::size_t k = 0; k < N; ++k) a[k] -= b[k];
    return a;
  }
  friend constexpr Derived operator-(Derived a) {
    for (std::size_t k = 0; k < N; ++k) a[k] = -a[k];
    return a;
  }
  friend constexpr Derived operator*(Derived a, double s) {
    for (std::size_t k = 0; k < N; ++k) a[k] *= s;
    return a;
  }
  friend constexpr Derived operator*(double s, Derived a) { return a * s; }
  friend constexpr Derived operator/(Derived a, double s) {
    for (std::size_t k = 0; k < N; ++k) a[k] /= s;
    return a;
  }
  constexpr Derived& operator+=(const Derived& b) {
    for (std::size_t k = 0; k < N; ++k) c_[k] += b[k];
    return static_cast<Derived&>(*this);
  }
  constexpr Derived& operator-=(const Derived& b) {
    for (std::size_t k = 0; k < N; ++k) c_[k] -= b[k];
    return static_cast<Derived&>(*this);
  }

  friend constexpr bool operator==(const Derived& a, const Derived& b) {
    return a.components() == b.components();
  }

 protected:
  std::array<double, N> c_{};
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Quaternions
// ---------------------------------------------------------------------------

class Quaternion : public detail::Components<Quaternion, 4> {
 public:
  constexpr Quaternion() = default;
  constexpr explicit Quaternion(const std::array<double, 4>& c) : Components(c) {}
  constexpr Quaternion(double x0, double x1, double x2, double x3) : Components({x0, x1, x2, x3}) {}

  // Hamilton product
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  }

  constexpr Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

  Quaternion inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw DomainError("non-invertible element");
    return conj() / n2;
  }
};

// ---------------------------------------------------------------------------
// Octonions: (a, b)(c, d) = (ac - d̄b, da + bc̄), a, b, c, d ∈ ℍ
// ---------------------------------------------------------------------------

class Octonion : public detail::Components<Octonion, 8> {
 public:
  constexpr Octonion() = default;
  constexpr explicit Octonion(const std::array<double, 8>& c) : Components(c) {}
  constexpr Octonion(const Quaternion& a, const Quaternion& b)
      : Components({a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]}) {}

  constexpr Quaternion first() const { return {c_[0], c_[1], c_[2], c_[3]}; }
  constexpr Quaternion second() const { return {c_[4], c_[5], c_[6], c_[7]}; }

  friend constexpr Octonion operator*(const Octonion& x, const Octonion& y) {
    const Quaternion a = x.first(), b = x.second();
    const Quaternion c = y.first(), d = y.second();
    return {a * c - d.conj() * b, d * a + b * c.conj()};
  }

  constexpr Octonion conj() const { return {first().conj(), -second()}; }

  Octonion inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw DomainError("non-invertible element");
    return conj() / n2;
  }
};

// ---------------------------------------------------------------------------
// Clifford algebras ℝ_{0,M}
// ---------------------------------------------------------------------------

namespace detail {

// Sign of e_A e_B for blades given as bitmasks (bit i <-> e_{i+1}), negative
// definite metric.
constexpr int blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);  // each shared eᵢ squares to -1
  return (swaps % 2 == 0) ? 1 : -1;
}

// Bar conjugation (reversion ∘ grade involution): (-1)^{k(k+1)/2} on grade k.
constexpr int bar_sign(unsigned blade) {
  const int k = std::popcount(blade);
  return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1;
}

template <int M>
constexpr auto make_sign_table() {
  constexpr std::size_t n = std::size_t{1} << M;
  std::array<std::int8_t, n * n> table{};
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) table[a * n + b] = static_cast<std::int8_t>(blade_sign(a, b));
  return table;
}

template <int M>
inline constexpr auto blade_sign_table = make_sign_table<M>();

}  // namespace detail

inline constexpr int max_clifford_signature = 6;

template <int M>
  requires(M >= 1 && M <= max_clifford_signature)
class Clifford : public detail::Components<Clifford<M>, (std::size_t{1} << M)> {
  using Base = detail::Components<Clifford<M>, (std::size_t{1} << M)>;

 public:
  static constexpr int signature = M;
  static constexpr std::size_t blades = std::size_t{1} << M;

  constexpr Clifford() = default;
  constexpr explicit Clifford(const std::array<double, blades>& c) : Base(c) {}

  friend constexpr Clifford operator*(const Clifford& a, const Clifford& b) {
    const auto& signs = detail::blade_sign_table<M>;
    Clifford r;
    for (std::size_t i = 0; i < blades; ++i) {
      if (a[i] == 0.0) continue;
      for (std::size_t j = 0; j < blades; ++j) r[i ^ j] += signs[i * blades + j] * a[i] * b[j];
    }
    return r;
  }

  constexpr Clifford conj() const {
    Clifford r = *this;
    for (std::size_t i = 0; i < blades; ++i) r[i] *= detail::bar_sign(static_cast<unsigned>(i));
    return r;
  }

  // grade 0 and grade 1 only
  constexpr bool is_paravector() const {
    for (std::size_t i = 0; i < blades; ++i)
      if (std::popcount(i) > 1 && (*this)[i] != 0.0) return false;
    return true;
  }

  // conj(a)/|a|² is a two-sided inverse exactly when a·conj(a) is scalar.
  Clifford inverse() const {
    const double n2 = this->norm2();
    if (n2 == 0.0) throw DomainError("non-invertible element");
    const Clifford aa = *this * conj();
    for (std::size_t i = 1; i < blades; ++i)
      if (std::abs(aa[i]) > 1e-12 * n2) throw DomainError("non-invertible element");
    return conj() / n2;
  }
};

// ---------------------------------------------------------------------------
// Traits and the Algebra concept
// ---------------------------------------------------------------------------

template <class A>
struct algebra_traits;

template <>
struct algebra_traits<Quaternion> {
  static constexpr std::size_t imaginary_dimension = 3;
  static constexpr std::size_t imaginary_index(std::size_t k) { return k + 1; }
  static std::string name() { return "quaternion"; }
};

template <>
struct algebra_traits<Octonion> {
  static constexpr std::size_t imaginary_dimension = 7;
  static constexpr std::size_t imaginary_index(std::size_t k) { return k + 1; }
  static std::string name() { return "octonion"; }
};

template <int M>
struct algebra_traits<Clifford<M>> {
  static constexpr std::size_t imaginary_dimension = M;
  static constexpr std::size_t imaginary_index(std::size_t k) { return std::size_t{1} << k; }
  static std::string name() { return "clifford" + std::to_string(M); }
};

template <class A>
concept Algebra = requires(const A a, const A b, double s, std::size_t k) {
  { a * b } -> std::same_as<A>;
  { a + b } -> std::same_as<A>;
  { a - b } -> std::same_as<A>;
  { a * s } -> std::same_as<A>;
  { a.conj() } -> std::same_as<A>;
  { a.norm() } -> std::same_as<double>;
  { a[k] } -> std::convertible_to<double>;
  { A::dimension } -> std::convertible_to<std::size_t>;
  { algebra_traits<A>::imaginary_dimension } -> std::convertible_to<std::size_t>;
};

template <Algebra A>
constexpr A scalar(double r) {
  A a;
  a[0] = r;
  return a;
}

template <Algebra A>
constexpr A basis_element(std::size_t index) {
  A a;
  a[index] = 1.0;
  return a;
}

// k-th imaginary unit: i, j, k / e1..e7 / e1..eM
template <Algebra A>
constexpr A imaginary_basis(std::size_t k) {
  return basis_element<A>(algebra_traits<A>::imaginary_index(k));
}

template <Algebra A>
A conj(const A& a) {
  return a.conj();
}
template <Algebra A>
double modulus(const A& a) {
  return a.norm();
}
template <Algebra A>
A inverse(const A& a) {
  return a.inverse();
}

// Euclidean inner product of component vectors; equals Re(a·conj(b)).
template <Algebra A>
constexpr double inner(const A& a, const A& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < A::dimension; ++k) s += a[k] * b[k];
  return s;
}

// True when q ∈ span{1, imaginary units}; always true for ℍ and 𝕆.
template <Algebra A>
constexpr bool is_slice_point(const A& q) {
  if constexpr (requires { q.is_paravector(); })
    return q.is_paravector();
  else
    return true;
}

namespace detail {

// Squared mass outside span{1, imaginary units}, summed directly rather than
// as a difference of norms (which would cancel to rounding noise).
template <Algebra A>
double off_slice_norm2(const A& a) {
  double s = 0.0;
  for (std::size_t k = 1; k < A::dimension; ++k) {
    bool imaginary = false;
    for (std::size_t j = 0; j < algebra_traits<A>::imaginary_dimension && !imaginary; ++j)
      imaginary = algebra_traits<A>::imaginary_index(j) == k;
    if (!imaginary) s += a[k] * a[k];
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Imaginary units and slice decomposition
// ---------------------------------------------------------------------------

template <Algebra A>
class ImaginaryUnit {
 public:
  static constexpr std::size_t dimension = algebra_traits<A>::imaginary_dimension;
  using Direction = std::array<double, dimension>;

  static ImaginaryUnit from_direction(const Direction& d) {
    double n2 = 0.0;
    for (double v : d) n2 += v * v;
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw DomainError("imaginary unit needs a nonzero direction");
    const double n = std::sqrt(n2);
    Direction u;
    for (std::size_t k = 0; k < dimension; ++k) u[k] = d[k] / n;
    return ImaginaryUnit(u);
  }

  // Accepts an element with zero real part, unit modulus, no off-slice parts.
  static ImaginaryUnit from_element(const A& a, double tol = 1e-12) {
    Direction d{};
    double n2 = 0.0;
    for (std::size_t k = 0; k < dimension; ++k) {
      d[k] = a[algebra_traits<A>::imaginary_index(k)];
      n2 += d[k] * d[k];
    }
    const double off = detail::off_slice_norm2(a);
    if (std::abs(a[0]) > tol || off > tol * tol || std::abs(std::sqrt(n2) - 1.0) > tol)
      throw DomainError("element is not an imaginary unit");
    return from_direction(d);
  }

  static ImaginaryUnit canonical(std::size_t k = 0) {
    Direction d{};
    d.at(k) = 1.0;
    return ImaginaryUnit(d);
  }

  const Direction& direction() const { return dir_; }

  A value() const {
    A a;
    for (std::size_t k = 0; k < dimension; ++k) a[algebra_traits<A>::imaginary_index(k)] = dir_[k];
    return a;
  }

  ImaginaryUnit operator-() const {
    Direction d = dir_;
    for (double& v : d) v = -v;
    return ImaginaryUnit(d);
  }

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  explicit ImaginaryUnit(const Direction& d) : dir_(d) {}
  Direction dir_;
};

// Fixed unit for real points: i for ℍ, e1 for ℝ_{0,M}.
template <Algebra A>
ImaginaryUnit<A> default_unit() {
  return ImaginaryUnit<A>::canonical(0);
}

template <Algebra A>
double inner_product(const ImaginaryUnit<A>& a, const ImaginaryUnit<A>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < ImaginaryUnit<A>::dimension; ++k) s += a.direction()[k] * b.direction()[k];
  return s;
}

// x + y·I
template <Algebra A>
A slice_value(double x, double y, const ImaginaryUnit<A>& unit) {
  A a = unit.value() * y;
  a[0] = x;
  return a;
}

// e^{Iθ} = cos θ + sin θ·I
template <Algebra A>
A slice_exp(const ImaginaryUnit<A>& unit, double theta) {
  return slice_value(std::cos(theta), std::sin(theta), unit);
}

template <Algebra A>
struct SlicePoint {
  double x = 0.0;
  double y = 0.0;  // >= 0
  ImaginaryUnit<A> unit = default_unit<A>();

  A recompose() const { return slice_value(x, y, unit); }
};

template <Algebra A>
SlicePoint<A> slice_decompose(const A& q) {
  if (!is_slice_point(q)) throw DomainError("point is not a paravector");
  typename ImaginaryUnit<A>::Direction d{};
  double n2 = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = q[algebra_traits<A>::imaginary_index(k)];
    n2 += d[k] * d[k];
  }
  if (n2 == 0.0) return {q[0], 0.0, default_unit<A>()};
  return {q[0], std::sqrt(n2), ImaginaryUnit<A>::from_direction(d)};
}

}  // namespace slicereg
