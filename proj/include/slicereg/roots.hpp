#pragma once

/**
 * @file roots.hpp
 * @brief Simultaneous polynomial root finding (Aberth–Ehrlich) with root
 * clustering for multiplicities.
 *
 * Coefficients are ascending: c[0] + c[1] z + ... + c[n] zⁿ. A root stops
 * moving once its residual is within the rounding-error bound of Horner's
 * rule, which is also how far a multiple root can be resolved; clusters are
 * then merged at radius 1e-6 and re-polished with Newton on the (m-1)-th
 * derivative, where an m-fold root becomes simple.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "slicereg/hypercomplex.hpp"
#include "slicereg/numerics.hpp"

namespace slicereg {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootCluster {
  std::complex<double> location;
  int multiplicity = 1;
};

inline constexpr int kAberthMaxSweeps = 200;
inline constexpr double kRootClusterRadius = 1e-6;

namespace detail {

using cplx = std::complex<double>;

struct HornerValue {
  cplx p;
  cplx dp;
  double bound;  // Σ |cⱼ| |z|ʲ
};

inline HornerValue horner_with_bound(std::span<const cplx> c, cplx z) {
  cplx p = 0.0, dp = 0.0;
  double bound = 0.0;
  const double az = std::abs(z);
  for (std::size_t j = c.size(); j-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[j];
    bound = bound * az + std::abs(c[j]);
  }
  return {p, dp, bound};
}

inline std::vector<cplx> derivative_coeffs(std::span<const cplx> c, int order) {
  std::vector<cplx> d(c.begin(), c.end());
  for (int o = 0; o < order && !d.empty(); ++o) {
    std::vector<cplx> next(d.size() > 1 ? d.size() - 1 : 0);
    for (std::size_t j = 1; j < d.size(); ++j) next[j - 1] = d[j] * static_cast<double>(j);
    d = std::move(next);
  }
  return d;
}

}  // namespace detail

// All n roots, unclustered.
inline std::vector<std::complex<double>> aberth_ehrlich(std::span<const std::complex<double>> c,
                                                        int max_sweeps = kAberthMaxSweeps) {
  using detail::cplx;
  if (c.empty() || c.back() == 0.0) throw DomainError("leading coefficient must be nonzero");
  // Exact roots at 0 are split off: near 0 the relative stopping test cannot fire.
  std::size_t zeros = 0;
  while (zeros + 1 < c.size() && c[zeros] == 0.0) ++zeros;
  if (zeros > 0) {
    auto rest = aberth_ehrlich(c.subspan(zeros), max_sweeps);
    rest.insert(rest.begin(), zeros, cplx(0.0));
    return rest;
  }
  const std::size_t n = c.size() - 1;
  if (n == 0) return {};

  double radius = 0.0;
  for (std::size_t j = 0; j < n; ++j) radius = std::max(radius, std::abs(c[j] / c[n]));
  radius += 1.0;

  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / n + 0.4);

  constexpr double eps = 2.220446049250313e-16;
  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto h = detail::horner_with_bound(c, z[i]);
      if (std::abs(h.p) <= 4.0 * eps * h.bound) {
        done[i] = true;
        continue;
      }
      all_done = false;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx ratio = (h.dp == 0.0) ? cplx(radius * 1e-3, 0.0) : h.p / h.dp;
      const cplx step = ratio / (1.0 - ratio * sum);
      z[i] -= step;
      if (std::abs(step) <= eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) return z;
  }
  if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return z;
  throw ConvergenceError("did not converge");
}

// Groups roots closer than radius·max(1, |z|), or whose inclusion disks
// n|p(zᵢ)| / |cₙ Π_{j≠i}(zᵢ - zⱼ)| overlap, and polishes each cluster. The
// second rule catches roots of multiplicity m >= 3, which double precision
// only resolves to about ε^{1/m}.
inline std::vector<RootCluster> cluster_roots(std::span<const std::complex<double>> c,
                                              const std::vector<std::complex<double>>& roots,
                                              double radius = kRootClusterRadius) {
  using detail::cplx;
  const std::size_t n = roots.size();
  std::vector<double> disk(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double denom = std::abs(c.back());
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= std::abs(roots[i] - roots[j]);
    const double num = static_cast<double>(n) * std::abs(detail::horner_with_bound(c, roots[i]).p);
    if (num == 0.0)
      disk[i] = 0.0;
    else
      disk[i] = (denom > 0.0) ? num / denom : std::numeric_limits<double>::infinity();
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(roots[i] - roots[j]);
      if (d <= radius * std::max(1.0, std::abs(roots[i])) || d <= disk[i] + disk[j]) parent[find(i)] = find(j);
    }

  std::vector<RootCluster> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({0.0, 0});
    }
    out[slot[r]].location += roots[i];
    out[slot[r]].multiplicity += 1;
  }
  std::vector<double> spread(out.size(), 0.0);
  for (auto& cl : out) cl.location /= static_cast<double>(cl.multiplicity);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = slot[find(i)];
    spread[k] = std::max(spread[k], std::abs(roots[i] - out[k].location));
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto& cl = out[k];
    if (cl.multiplicity < 2) continue;
    const auto d = detail::derivative_coeffs(c, cl.multiplicity - 1);
    cplx z = cl.location;
    for (int it = 0; it < 8; ++it) {
      const auto h = detail::horner_with_bound(d, z);
      if (h.dp == 0.0) break;
      z -= h.p / h.dp;
    }
    const double reach = std::max(radius * std::max(1.0, std::abs(cl.location)), spread[k]);
    if (std::abs(z - cl.location) <= reach) cl.location = z;
  }
  return out;
}

// Root clusters of a complex-coefficient polynomial.
inline std::vector<RootCluster> complex_roots(std::span<const std::complex<double>> c) {
  return cluster_roots(c, aberth_ehrlich(c));
}

// Roots of a real-coefficient polynomial: real roots with imaginary part
// exactly 0, conjugate pairs reported once with positive imaginary part.
inline std::vector<RootCluster> roots_real_poly(std::span<const double> coeffs) {
  std::vector<std::complex<double>> c(coeffs.begin(), coeffs.end());
  std::vector<RootCluster> out;
  for (auto cl : complex_roots(c)) {
    const double scale = std::max(1.0, std::abs(cl.location));
    if (std::abs(cl.location.imag()) <= kRootClusterRadius * scale) {
      cl.location = {cl.location.real(), 0.0};
      out.push_back(cl);
    } else if (cl.location.imag() > 0.0) {
      out.push_back(cl);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

}  // namespace slicereg
