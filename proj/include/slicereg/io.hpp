#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of elements, polynomials, reports and campaign output.
 *
 * Elements: quaternion [x0,x1,x2,x3]; octonion [c0..c7]; Clifford
 * {"m": m, "coeffs": [2^m blades]} with blade bit i ↔ e_{i+1}.
 * Polynomials: {"algebra": "quaternion" | "octonion" | "clifford", "m": m,
 * "coeffs": [a0, a1, ...]}; a bare array of quaternions is also accepted.
 * Doubles are written in shortest round-trip form.
 */

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include <json.hpp>

#include "slicereg/analysis.hpp"
#include "slicereg/campaign.hpp"
#include "slicereg/hypercomplex.hpp"
#include "slicereg/inequalities.hpp"
#include "slicereg/slicepoly.hpp"

namespace slicereg::io {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that reads back to the same double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// JSON has no infinities: non-finite values become strings.
inline json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  const auto res = std::to_chars(buf, buf + 16, v, 16);
  std::string s(buf, res.ptr);
  return std::string(16 - s.size(), '0') + s;
}

// Parses text, reporting failures as "source:line:col: message".
inline json parse_text(std::string_view text, std::string_view source = "<input>") {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // drop nlohmann's own "[json.exception...] parse error at line L, column C: " prefix
    if (const auto at = what.find(", column "); at != std::string::npos) {
      if (const auto colon = what.find(": ", at); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

// ---------------------------------------------------------------------------
// Elements and polynomials
// ---------------------------------------------------------------------------

template <Algebra A>
json element_to_json(const A& a) {
  json arr = json::array();
  for (double v : a.components()) arr.push_back(v);
  if constexpr (requires { A::signature; }) return json{{"m", A::signature}, {"coeffs", std::move(arr)}};
  return arr;
}

namespace detail {

inline double read_number(const json& j, std::string_view what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

template <Algebra A>
A read_components(const json& arr, std::string_view what) {
  if (!arr.is_array() || arr.size() != A::dimension)
    throw ParseError(std::string(what) + ": expected an array of " + std::to_string(A::dimension) + " numbers");
  A a;
  for (std::size_t k = 0; k < A::dimension; ++k) a[k] = read_number(arr[k], what);
  return a;
}

}  // namespace detail

template <Algebra A>
A element_from_json(const json& j, std::string_view what = "element") {
  if constexpr (requires { A::signature; }) {
    if (j.is_object()) {
      if (!j.contains("m") || !j.contains("coeffs")) throw ParseError(std::string(what) + ": expected {\"m\", \"coeffs\"}");
      if (!j["m"].is_number_integer() || j["m"].get<int>() != A::signature)
        throw ParseError(std::string(what) + ": Clifford signature does not match m = " + std::to_string(A::signature));
      return detail::read_components<A>(j["coeffs"], what);
    }
  }
  return detail::read_components<A>(j, what);
}

template <Algebra A>
std::string algebra_tag() {
  if constexpr (std::is_same_v<A, Quaternion>) return "quaternion";
  if constexpr (std::is_same_v<A, Octonion>) return "octonion";
  if constexpr (requires { A::signature; }) return "clifford";
}

template <Algebra A>
json polynomial_to_json(const SlicePolynomial<A>& p) {
  json j{{"algebra", algebra_tag<A>()}};
  if constexpr (requires { A::signature; }) j["m"] = A::signature;
  json c = json::array();
  for (const A& a : p.coeffs()) c.push_back(element_to_json(a));
  j["coeffs"] = std::move(c);
  return j;
}

using AnyPolynomial =
    std::variant<SlicePolynomial<Quaternion>, SlicePolynomial<Octonion>, SlicePolynomial<Clifford<1>>,
                 SlicePolynomial<Clifford<2>>, SlicePolynomial<Clifford<3>>, SlicePolynomial<Clifford<4>>,
                 SlicePolynomial<Clifford<5>>, SlicePolynomial<Clifford<6>>>;

template <Algebra A>
SlicePolynomial<A> polynomial_from_json_as(const json& coeffs) {
  if (!coeffs.is_array() || coeffs.empty()) throw ParseError("coeffs: expected a non-empty array");
  std::vector<A> c;
  for (std::size_t k = 0; k < coeffs.size(); ++k) c.push_back(element_from_json<A>(coeffs[k], "coeffs[" + std::to_string(k) + "]"));
  return SlicePolynomial<A>(std::move(c));
}

namespace detail {

template <int M>
AnyPolynomial clifford_polynomial(int m, const json& coeffs) {
  if constexpr (M > max_clifford_signature) {
    throw DomainError("Clifford signature m must be in 1.." + std::to_string(max_clifford_signature));
  } else {
    if (m == M) return polynomial_from_json_as<Clifford<M>>(coeffs);
    return clifford_polynomial<M + 1>(m, coeffs);
  }
}

}  // namespace detail

inline AnyPolynomial polynomial_from_json(const json& j) {
  if (j.is_array()) return polynomial_from_json_as<Quaternion>(j);
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("polynomial: expected an object with \"coeffs\"");
  const std::string tag = j.value("algebra", std::string("quaternion"));
  if (tag == "quaternion") return polynomial_from_json_as<Quaternion>(j["coeffs"]);
  if (tag == "octonion") return polynomial_from_json_as<Octonion>(j["coeffs"]);
  if (tag == "clifford") {
    if (!j.contains("m") || !j["m"].is_number_integer()) throw ParseError("clifford polynomial: missing integer \"m\"");
    const int m = j["m"].get<int>();
    if (m < 1) throw DomainError("Clifford signature m must be in 1.." + std::to_string(max_clifford_signature));
    return detail::clifford_polynomial<1>(m, j["coeffs"]);
  }
  throw ParseError("unknown algebra '" + tag + "'");
}

// ---------------------------------------------------------------------------
// Analysis results
// ---------------------------------------------------------------------------

template <Algebra A>
json extremum_to_json(const ExtremumResult<A>& r) {
  json w = json::array();
  for (double v : r.witness.components()) w.push_back(v);
  return json{{"value", r.value}, {"witness", std::move(w)}, {"tol", r.tolerance}, {"evaluations", r.evaluations}};
}

inline json zero_set_to_json(const ZeroSet& zs) {
  json real = json::array(), isolated = json::array(), spherical = json::array();
  for (const auto& z : zs.real_zeros) real.push_back({{"location", z.location}, {"multiplicity", z.multiplicity}});
  for (const auto& z : zs.isolated_zeros)
    isolated.push_back({{"location", element_to_json(z.location)}, {"multiplicity", z.multiplicity}});
  for (const auto& z : zs.spherical_zeros)
    spherical.push_back({{"x", z.x}, {"y", z.y}, {"multiplicity", z.multiplicity}});
  return json{{"real_zeros", std::move(real)},
              {"isolated_zeros", std::move(isolated)},
              {"spherical_zeros", std::move(spherical)},
              {"total_multiplicity", zs.total_multiplicity()}};
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline constexpr std::string_view kReportSchema = "report_v1";

inline json report_to_json(const VerificationReport& r, std::optional<std::size_t> trial = std::nullopt,
                           std::string_view config_hash = "") {
  json j{{"schema", kReportSchema}, {"check", r.name}};
  j["trial"] = trial ? json(*trial) : json(nullptr);
  j["config_hash"] = std::string(config_hash);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["ratio"] = number(r.ratio);
  j["holds"] = r.holds;
  j["margin"] = number(r.margin);
  j["strict"] = r.strict;
  j["equality_case"] = r.equality_case;
  j["witnesses"] = {{"lhs", r.witness_lhs}, {"rhs", r.witness_rhs}};
  j["preconditions_met"] = r.preconditions_met;
  j["reasons"] = r.reasons;
  j["tolerances"] = {{"rel", r.tolerances.rel}, {"abs", r.tolerances.abs}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  json details = json::object();
  for (const auto& [k, v] : r.scalars) details[k] = number(v);
  for (const auto& [k, v] : r.series) {
    json arr = json::array();
    for (double x : v) arr.push_back(number(x));
    details[k] = std::move(arr);
  }
  j["details"] = std::move(details);
  return j;
}

inline constexpr std::string_view kCsvHeader = "check,degree,ratio,holds,equality_case,preconditions_met,seed";

inline void write_csv(std::ostream& os, std::string_view check, const std::vector<TrialOutcome>& outcomes,
                      std::string_view config_hash, const Tolerances& tol) {
  os << "# config_hash=" << config_hash << " rel_tol=" << format_double(tol.rel)
     << " abs_tol=" << format_double(tol.abs) << '\n';
  os << kCsvHeader << '\n';
  for (const auto& o : outcomes) {
    os << check << ',' << o.degree << ',';
    if (o.report) {
      const auto& r = *o.report;
      os << format_double(r.ratio) << ',' << (r.holds ? "true" : "false") << ','
         << (r.equality_case ? "true" : "false") << ',' << (r.preconditions_met ? "true" : "false");
    } else {
      os << "error,false,false,false";
    }
    os << ',' << o.seed << '\n';
  }
}

inline json summary_to_json(const CampaignSummary& s) {
  return json{{"trials", s.trials},
              {"holds", s.holds},
              {"violations", s.violations},
              {"equality_cases", s.equality_cases},
              {"precondition_failures", s.precondition_failures},
              {"errors", s.errors},
              {"min_ratio", number(s.min_ratio)},
              {"max_ratio", number(s.max_ratio)},
              {"mean_ratio", number(s.mean_ratio)},
              {"extremal_trial", s.extremal_trial ? json(*s.extremal_trial) : json(nullptr)}};
}

}  // namespace slicereg::io
