#include <catch_amalgamated.hpp>

#include <set>

#include "slicereg/generator.hpp"

using namespace slicereg;

namespace {

using Q = Quaternion;

}  // namespace

TEST_CASE("splitmix64 reference values", "[generator]") {
  // the first two outputs of the reference generator seeded with 0, and the first for 1234567
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
  CHECK(splitmix64(1234567) == 6457827717110365317ULL);
  CHECK(trial_seed(42, 3) == splitmix64(42 ^ 3));

  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(7, t));
  CHECK(seen.size() == 1000);
}

TEST_CASE("names round-trip", "[generator]") {
  for (Structure s : {Structure::None, Structure::CommonSlice, Structure::ZerosOutside, Structure::ZerosInside,
                      Structure::RealAndSpherical, Structure::Monomial})
    CHECK(parse_structure(to_string(s)) == s);
  CHECK(parse_law("uniform") == CoefficientLaw::UniformBall);
  CHECK(parse_law("gaussian") == CoefficientLaw::Gaussian);
  CHECK_THROWS_AS(parse_law("cauchy"), DomainError);
  CHECK_THROWS_AS(parse_structure("zeros-everywhere"), DomainError);
}

TEST_CASE("identical seeds give identical sequences", "[generator][property]") {
  for (Structure s : {Structure::None, Structure::CommonSlice, Structure::ZerosOutside, Structure::ZerosInside,
                      Structure::RealAndSpherical, Structure::Monomial}) {
    const GeneratorConfig cfg{99, 1, 9, CoefficientLaw::Gaussian, s};
    const PolynomialGenerator<Q> a(cfg), b(cfg);
    for (std::size_t t = 0; t < 20; ++t) CHECK(a.generate(t) == b.generate(t));
    // trials are independent of the order they are drawn in
    CHECK(a.generate(5) == PolynomialGenerator<Q>(cfg).generate(5));
  }
  const PolynomialGenerator<Q> x(GeneratorConfig{1}), y(GeneratorConfig{2});
  CHECK_FALSE(x.generate(0) == y.generate(0));
  CHECK(x.generate_disk_zeros(4) == x.generate_disk_zeros(4));
  CHECK(x.generate_angle(4) == x.generate_angle(4));
}

TEST_CASE("degree range and coefficient laws", "[generator]") {
  const PolynomialGenerator<Q> gen(GeneratorConfig{5, 3, 6});
  std::set<std::size_t> degrees;
  for (std::size_t t = 0; t < 300; ++t) {
    const auto p = gen.generate(t);
    degrees.insert(p.degree().value());
    for (const Q& a : p.coeffs()) CHECK(a.norm() <= 1.0);
  }
  CHECK(degrees == std::set<std::size_t>{3, 4, 5, 6});

  const PolynomialGenerator<Octonion> oct(GeneratorConfig{5, 2, 2, CoefficientLaw::Gaussian});
  bool large = false;
  for (std::size_t t = 0; t < 100; ++t)
    for (const auto& a : oct.generate(t).coeffs()) large = large || a.norm() > 1.0;
  CHECK(large);

  CHECK_THROWS_AS(PolynomialGenerator<Q>(GeneratorConfig{0, 5, 2}), DomainError);
  CHECK_THROWS_AS(PolynomialGenerator<Octonion>(GeneratorConfig{0, 1, 3, CoefficientLaw::UniformBall, Structure::ZerosInside}),
                  DomainError);
  CHECK_NOTHROW(PolynomialGenerator<Clifford<3>>(GeneratorConfig{0, 1, 3, CoefficientLaw::UniformBall, Structure::CommonSlice}));
}

TEST_CASE("structural constraints are met", "[generator][property]") {
  SECTION("monomial") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{1, 1, 8, CoefficientLaw::UniformBall, Structure::Monomial});
    for (std::size_t t = 0; t < 50; ++t) {
      const auto p = gen.generate(t);
      for (std::size_t j = 0; j + 1 < p.coeffs().size(); ++j) CHECK(p.coeff(j).is_zero());
    }
  }
  SECTION("common slice") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{2, 1, 8, CoefficientLaw::UniformBall, Structure::CommonSlice});
    for (std::size_t t = 0; t < 50; ++t) CHECK(common_coefficient_slice(gen.generate(t)).has_value());
  }
  SECTION("zeros outside") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{3, 1, 10, CoefficientLaw::UniformBall, Structure::ZerosOutside});
    for (std::size_t t = 0; t < 50; ++t) {
      const auto p = gen.generate(t);
      REQUIRE(common_coefficient_slice(p).has_value());
      const auto z = zero_set(p);
      CHECK(z.min_modulus() >= 1.0 - 1e-9);
      CHECK(z.total_multiplicity() == static_cast<int>(p.degree().value()));
    }
  }
  SECTION("zeros inside") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{4, 1, 10, CoefficientLaw::Gaussian, Structure::ZerosInside});
    for (std::size_t t = 0; t < 50; ++t) {
      const auto p = gen.generate(t);
      REQUIRE(common_coefficient_slice(p).has_value());
      CHECK(zero_set(p).max_modulus() <= kInsideRadius + 1e-9);
    }
  }
  SECTION("real and spherical zeros") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{5, 1, 10, CoefficientLaw::UniformBall, Structure::RealAndSpherical});
    for (std::size_t t = 0; t < 50; ++t) {
      const auto z = zero_set(gen.generate(t));
      CHECK(z.isolated_zeros.empty());
      CHECK(z.min_modulus() >= 1.0 - 1e-9);
    }
  }
  SECTION("disk zeros") {
    const PolynomialGenerator<Q> gen(GeneratorConfig{6, 1, 20});
    for (std::size_t t = 0; t < 100; ++t) {
      const auto z = gen.generate_disk_zeros(t, 1e-3);
      CHECK(!z.empty());
      for (const auto& v : z) CHECK(std::abs(v) <= 1.0 - 1e-3);
      const double a = gen.generate_angle(t);
      CHECK(a >= 0.0);
      CHECK(a < kTwoPi);
    }
  }
}
