#pragma once

/**
 * @file generator.hpp
 * @brief Seeded random polynomials for fuzz campaigns.
 *
 * Trial t draws from its own std::mt19937_64 seeded with splitmix64(seed ^ t),
 * so any trial can be regenerated alone and campaigns can run trials in any
 * order or in parallel without changing the sequence.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "slicereg/analysis.hpp"
#include "slicereg/hypercomplex.hpp"
#include "slicereg/numerics.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ trial); }

enum class CoefficientLaw { UniformBall, Gaussian };

enum class Structure {
  None,
  CommonSlice,       // every coefficient in one random slice ℂ_I
  ZerosOutside,      // ℂ_I coefficients, all zeros with |q| >= 1
  ZerosInside,       // ℂ_I coefficients, all zeros with |q| <= 0.9
  RealAndSpherical,  // real and spherical zeros only, all with |q| >= 1
  Monomial,          // qⁿaₙ
};

inline constexpr double kInsideRadius = 0.9;
inline constexpr double kOutsideRadiusMax = 3.0;
inline constexpr int kMaxResamples = 100;

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_degree = 1;
  std::size_t max_degree = 12;
  CoefficientLaw law = CoefficientLaw::UniformBall;
  Structure structure = Structure::None;
};

inline std::string_view to_string(CoefficientLaw law) {
  return law == CoefficientLaw::Gaussian ? "gaussian" : "uniform";
}

inline std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::None: return "none";
    case Structure::CommonSlice: return "common-slice";
    case Structure::ZerosOutside: return "zeros-outside";
    case Structure::ZerosInside: return "zeros-inside";
    case Structure::RealAndSpherical: return "real-spherical";
    case Structure::Monomial: return "monomial";
  }
  return "none";
}

inline CoefficientLaw parse_law(std::string_view s) {
  if (s == "uniform") return CoefficientLaw::UniformBall;
  if (s == "gaussian") return CoefficientLaw::Gaussian;
  throw DomainError("unknown coefficient law '" + std::string(s) + "'");
}

inline Structure parse_structure(std::string_view s) {
  for (Structure v : {Structure::None, Structure::CommonSlice, Structure::ZerosOutside, Structure::ZerosInside,
                      Structure::RealAndSpherical, Structure::Monomial})
    if (to_string(v) == s) return v;
  throw DomainError("unknown structural constraint '" + std::string(s) + "'");
}

template <Algebra A>
class PolynomialGenerator {
 public:
  explicit PolynomialGenerator(GeneratorConfig config) : config_(config) {
    if (config_.min_degree > config_.max_degree) throw DomainError("empty degree range");
    if constexpr (!std::is_same_v<A, Quaternion>) {
      if (config_.structure != Structure::None && config_.structure != Structure::Monomial &&
          config_.structure != Structure::CommonSlice)
        throw DomainError("zero-structure constraints need quaternion coefficients");
    }
  }

  const GeneratorConfig& config() const { return config_; }

  std::uint64_t seed_for(std::size_t trial) const { return trial_seed(config_.seed, trial); }

  SlicePolynomial<A> generate(std::size_t trial) const {
    std::mt19937_64 rng(seed_for(trial));
    const std::size_t n = degree(rng);
    switch (config_.structure) {
      case Structure::None: {
        std::vector<A> c(n + 1);
        for (auto& a : c) a = element(rng);
        return SlicePolynomial<A>(std::move(c));
      }
      case Structure::Monomial:
        return SlicePolynomial<A>::monomial(n, element(rng));
      case Structure::CommonSlice: {
        const auto unit = random_unit(rng);
        std::vector<A> c(n + 1);
        for (auto& a : c) a = slice_value(scalar_draw(rng), scalar_draw(rng), unit);
        return SlicePolynomial<A>(std::move(c));
      }
      default:
        break;
    }
    if constexpr (std::is_same_v<A, Quaternion>) {
      for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
        auto p = structured(rng, n);
        if (accept(p)) return p;
      }
      throw DomainError("rejection sampling exhausted");
    } else {
      throw DomainError("zero-structure constraints need quaternion coefficients");
    }
  }

  // Zeros for the logarithmic-derivative lemma: uniform in the disk of radius
  // 1 - margin.
  std::vector<std::complex<double>> generate_disk_zeros(std::size_t trial, double margin = 1e-3) const {
    std::mt19937_64 rng(seed_for(trial));
    const std::size_t n = std::max<std::size_t>(1, degree(rng));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::complex<double>> z(n);
    for (auto& v : z) v = std::polar((1.0 - margin) * std::sqrt(u(rng)), kTwoPi * u(rng));
    return z;
  }

  // Evaluation angle paired with generate_disk_zeros.
  double generate_angle(std::size_t trial) const {
    std::mt19937_64 rng(splitmix64(seed_for(trial)));
    return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
  }

 private:
  std::size_t degree(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::size_t>(config_.min_degree, config_.max_degree)(rng);
  }

  double scalar_draw(std::mt19937_64& rng) const {
    if (config_.law == CoefficientLaw::Gaussian) return std::normal_distribution<double>()(rng);
    return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  }

  // Gaussian law: iid N(0,1) components. Uniform law: uniform in the unit
  // ball of ℝ^dim. Redrawn on the (probability zero) exact zero.
  A element(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    for (;;) {
      A a;
      for (std::size_t k = 0; k < A::dimension; ++k) a[k] = normal(rng);
      const double n = a.norm();
      if (n == 0.0) continue;
      if (config_.law == CoefficientLaw::Gaussian) return a;
      const double r = std::pow(std::uniform_real_distribution<double>(0.0, 1.0)(rng), 1.0 / A::dimension);
      if (r == 0.0) continue;
      return a * (r / n);
    }
  }

  ImaginaryUnit<A> random_unit(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    typename ImaginaryUnit<A>::Direction d;
    for (;;) {
      for (double& v : d) v = normal(rng);
      double n2 = 0.0;
      for (double v : d) n2 += v * v;
      if (n2 > 1e-12) return ImaginaryUnit<A>::from_direction(d);
    }
  }

  std::complex<double> complex_draw(std::mt19937_64& rng) const {
    for (;;) {
      const std::complex<double> c(scalar_draw(rng), scalar_draw(rng));
      if (std::abs(c) > 1e-3) return c;
    }
  }

  SlicePolynomial<Quaternion> structured(std::mt19937_64& rng, std::size_t n) const
    requires std::is_same_v<A, Quaternion>
  {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (config_.structure == Structure::RealAndSpherical) {
      std::vector<double> c{1.0};
      auto times = [&c](const std::vector<double>& f) {
        std::vector<double> r(c.size() + f.size() - 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += c[i] * f[j];
        c = std::move(r);
      };
      std::size_t d = 0;
      while (d < n) {
        const double rho = 1.0 + (kOutsideRadiusMax - 1.0) * u(rng);
        if (n - d >= 2 && u(rng) < 0.5) {
          const double phi = kPi * (0.05 + 0.9 * u(rng));
          times({rho * rho, -2.0 * rho * std::cos(phi), 1.0});
          d += 2;
        } else {
          times({u(rng) < 0.5 ? -rho : rho, 1.0});
          d += 1;
        }
      }
      const Quaternion lead = element(rng);
      std::vector<Quaternion> q;
      for (double v : c) q.push_back(scalar<Quaternion>(v) * lead);
      return SlicePolynomial<Quaternion>(std::move(q));
    }

    const bool inside = config_.structure == Structure::ZerosInside;
    const auto unit = random_unit(rng);
    std::vector<std::complex<double>> c{complex_draw(rng)};
    for (std::size_t k = 0; k < n; ++k) {
      const double rho = inside ? kInsideRadius * std::sqrt(u(rng)) : 1.0 + (kOutsideRadiusMax - 1.0) * u(rng);
      const std::complex<double> z = std::polar(rho, kTwoPi * u(rng));
      std::vector<std::complex<double>> r(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        r[i + 1] += c[i];
        r[i] -= c[i] * z;
      }
      c = std::move(r);
    }
    return ComplexSlicePolynomial<Quaternion>(unit, std::move(c)).to_polynomial();
  }

  // Post-validation against the computed zero set.
  bool accept(const SlicePolynomial<Quaternion>& p) const
    requires std::is_same_v<A, Quaternion>
  {
    try {
      const ZeroSet zs = zero_set(p);
      if (zs.total_multiplicity() != static_cast<int>(p.degree().value())) return false;
      switch (config_.structure) {
        case Structure::ZerosInside:
          return zs.max_modulus() <= kInsideRadius + 1e-9;
        case Structure::RealAndSpherical:
          return zs.isolated_zeros.empty() && zs.min_modulus() >= 1.0 - 1e-9;
        default:
          return zs.min_modulus() >= 1.0 - 1e-9;
      }
    } catch (const std::exception&) {
      return false;
    }
  }

  GeneratorConfig config_;
};

}  // namespace slicereg
