#pragma once

// Small numerical building blocks shared by the kernels and the norm search.

#include <cmath>
#include <cstddef>
#include <utility>

#include "slicereg/hypercomplex.hpp"

namespace slicereg {

// Neumaier-compensated sum of algebra elements, componentwise.
template <Algebra A>
class CompensatedSum {
 public:
  void add(const A& v) {
    for (std::size_t k = 0; k < A::dimension; ++k) {
      const double t = sum_[k] + v[k];
      if (std::abs(sum_[k]) >= std::abs(v[k]))
        comp_[k] += (sum_[k] - t) + v[k];
      else
        comp_[k] += (v[k] - t) + sum_[k];
      sum_[k] = t;
    }
  }
  A value() const { return sum_ + comp_; }

 private:
  A sum_{};
  A comp_{};
};

struct MinimizeResult {
  double x;
  double fx;
  int evaluations;
};

// Brent's method: parabolic interpolation with golden-section fallback on
// [a, b]. Converges to a local minimum for unimodal f, including V-shaped
// minima where |f| has a kink.
template <class F>
MinimizeResult brent_minimize(F&& f, double a, double b, double xtol = 1e-14, int max_iter = 200) {
  constexpr double golden = 0.3819660112501051;
  constexpr double eps = 4.440892098500626e-16;  // 2 machine epsilon
  double x = a + golden * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  int evals = 1;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = eps * std::abs(x) + xtol;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    bool golden_step = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    ++evals;
    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, fx, evals};
}

// Smallest power of two >= n.
constexpr std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

}  // namespace slicereg
