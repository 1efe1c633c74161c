#pragma once

/**
 * @file campaign.hpp
 * @brief Seeded fuzz campaigns over one inequality check.
 *
 * Trials are independent: each regenerates its input from the trial seed and
 * writes into its own slot, so the outcome list and the summary (reduced in
 * trial order afterwards) do not depend on the thread count.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "slicereg/generator.hpp"
#include "slicereg/inequalities.hpp"

namespace slicereg {

inline constexpr std::array<std::string_view, 8> kCheckNames{
    "bernstein", "bernstein-min", "bernstein-l2", "erdos-lax", "erdos-lax-zeros", "lax-ratio", "ankeny-growth",
    "ankeny-converse"};

inline bool is_check_name(std::string_view name) {
  return std::find(kCheckNames.begin(), kCheckNames.end(), name) != kCheckNames.end();
}

struct CheckParameters {
  Tolerances tolerances;
  double radius = 2.0;  // ankeny-growth
  double delta = 2.0;   // ankeny-converse
};

// Dispatches a polynomial check by name. lax-ratio takes zeros instead.
template <Algebra A>
VerificationReport run_check(std::string_view check, const SlicePolynomial<A>& p, const CheckParameters& params) {
  if (check == "bernstein") return bernstein_check(p, params.tolerances);
  if (check == "bernstein-l2") return bernstein_l2_check(p);
  if constexpr (std::is_same_v<A, Quaternion>) {
    if (check == "bernstein-min") return bernstein_min_check(p, params.tolerances);
    if (check == "erdos-lax") return erdos_lax_subclass_check(p, params.tolerances);
    if (check == "erdos-lax-zeros") return erdos_lax_zero_structure_check(p, params.tolerances);
    if (check == "ankeny-growth") return ankeny_growth_check(p, params.radius, params.tolerances);
    if (check == "ankeny-converse") return ankeny_converse_scenario(p, params.delta);
  }
  if (!is_check_name(check)) throw DomainError("unknown check '" + std::string(check) + "'");
  throw DomainError("check '" + std::string(check) + "' needs quaternion coefficients");
}

struct CampaignConfig {
  std::string check = "bernstein";
  GeneratorConfig generator;
  std::size_t trials = 100;
  CheckParameters params;
  unsigned threads = 1;
};

struct TrialOutcome {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t degree = 0;
  std::optional<VerificationReport> report;
  std::string error;
};

struct CampaignSummary {
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;
  std::size_t precondition_failures = 0;
  std::size_t errors = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
  double mean_ratio = std::numeric_limits<double>::quiet_NaN();
  std::optional<std::size_t> extremal_trial;
};

template <Algebra A>
struct CampaignResult {
  std::vector<TrialOutcome> outcomes;
  CampaignSummary summary;
  std::optional<SlicePolynomial<A>> extremal;  // input of the extremal trial
};

namespace detail {

// p(z) = Π (z - zₘ) in ℂ_i, the polynomial behind a lax-ratio zero set.
inline SlicePolynomial<Quaternion> monic_from_zeros(const std::vector<std::complex<double>>& zeros) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& z : zeros) {
    std::vector<std::complex<double>> r(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      r[i + 1] += c[i];
      r[i] -= c[i] * z;
    }
    c = std::move(r);
  }
  return ComplexSlicePolynomial<Quaternion>(default_unit<Quaternion>(), std::move(c)).to_polynomial();
}

template <Algebra A>
SlicePolynomial<A> trial_input(const PolynomialGenerator<A>& gen, const CampaignConfig& cfg, std::size_t t) {
  if constexpr (std::is_same_v<A, Quaternion>) {
    if (cfg.check == "lax-ratio") return monic_from_zeros(gen.generate_disk_zeros(t));
    if (cfg.check == "ankeny-converse") return normalize_at_one(gen.generate(t));
  }
  return gen.generate(t);
}

template <Algebra A>
TrialOutcome run_trial(const PolynomialGenerator<A>& gen, const CampaignConfig& cfg, std::size_t t) {
  TrialOutcome out;
  out.trial = t;
  out.seed = gen.seed_for(t);
  try {
    VerificationReport r;
    if constexpr (std::is_same_v<A, Quaternion>) {
      if (cfg.check == "lax-ratio") {
        const auto zeros = gen.generate_disk_zeros(t);
        out.degree = zeros.size();
        r = lax_ratio_check(zeros, gen.generate_angle(t));
      }
    }
    if (cfg.check != "lax-ratio") {
      const auto p = trial_input(gen, cfg, t);
      out.degree = p.degree().value();
      r = run_check(cfg.check, p, cfg.params);
    }
    r.seed = out.seed;
    out.report = std::move(r);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

inline CampaignSummary summarize(const std::vector<TrialOutcome>& outcomes) {
  CampaignSummary s;
  s.trials = outcomes.size();
  double sum = 0.0;
  std::size_t finite = 0;
  bool any_met = false;
  for (const auto& o : outcomes) {
    if (!o.report) {
      ++s.errors;
      continue;
    }
    const auto& r = *o.report;
    s.holds += r.holds ? 1 : 0;
    s.violations += r.violation() ? 1 : 0;
    s.equality_cases += r.equality_case ? 1 : 0;
    s.precondition_failures += r.preconditions_met ? 0 : 1;
    any_met = any_met || r.preconditions_met;
    if (std::isfinite(r.ratio)) {
      s.min_ratio = std::min(s.min_ratio, r.ratio);
      sum += r.ratio;
      ++finite;
    }
  }
  if (finite > 0) {
    s.mean_ratio = sum / static_cast<double>(finite);
  } else {
    s.min_ratio = std::numeric_limits<double>::quiet_NaN();
  }

  // Extremal trial: largest ratio, among trials whose hypotheses hold when
  // there are any; the earliest trial wins ties.
  for (const auto& o : outcomes) {
    if (!o.report || (any_met && !o.report->preconditions_met)) continue;
    if (!s.extremal_trial || o.report->ratio > s.max_ratio) {
      s.extremal_trial = o.trial;
      s.max_ratio = o.report->ratio;
    }
  }
  if (!s.extremal_trial) s.max_ratio = std::numeric_limits<double>::quiet_NaN();
  return s;
}

}  // namespace detail

template <Algebra A>
CampaignResult<A> fuzz_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("campaign needs at least one trial");
  if (!is_check_name(cfg.check)) throw DomainError("unknown check '" + cfg.check + "'");
  const PolynomialGenerator<A> gen(cfg.generator);

  CampaignResult<A> result;
  result.outcomes.resize(cfg.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) result.outcomes[t] = detail::run_trial(gen, cfg, t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next.fetch_add(1)) < cfg.trials;) result.outcomes[t] = detail::run_trial(gen, cfg, t);
      });
  }
  result.summary = detail::summarize(result.outcomes);
  if (result.summary.extremal_trial) result.extremal = detail::trial_input(gen, cfg, *result.summary.extremal_trial);
  return result;
}

}  // namespace slicereg
