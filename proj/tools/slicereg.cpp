// slicereg: command-line front end.
//
// Exit codes: 0 success (or hypotheses unmet), 1 inequality violation,
// 2 parse error, 3 domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "slicereg/analysis.hpp"
#include "slicereg/campaign.hpp"
#include "slicereg/io.hpp"
#include "slicereg/kernels.hpp"

namespace {

using namespace slicereg;
using io::json;

enum Exit : int { kOk = 0, kViolation = 1, kParse = 2, kDomain = 3 };

json load_json(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_text(arg, what);
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw io::ParseError(what + ": cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return io::parse_text(ss.str(), arg);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::pair<std::size_t, std::size_t> parse_degree_range(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const auto n = std::stoul(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {n, n};
    }
    const auto lo = std::stoul(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    const std::string rest = s.substr(dots + 2);
    const auto hi = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw io::ParseError("--deg: expected N or LO..HI, got '" + s + "'");
  }
}

Structure default_structure(const std::string& check) {
  if (check == "erdos-lax" || check == "ankeny-growth") return Structure::ZerosOutside;
  if (check == "erdos-lax-zeros") return Structure::RealAndSpherical;
  if (check == "ankeny-converse" || check == "bernstein-min") return Structure::ZerosInside;
  return Structure::None;
}

struct Options {
  std::string poly;
  std::string point;
  std::string check;
  std::string zeros;
  double theta = 0.0;
  double radius = 1.0;
  double growth_radius = 2.0;
  double delta = 2.0;
  double rel_tol = Tolerances{}.rel;
  double abs_tol = Tolerances{}.abs;
  double norm_tol = kNormTol;
  bool minimum = false;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string degrees = "1..12";
  std::string algebra = "quaternion";
  std::string law = "uniform";
  std::string constraint = "auto";
  std::string output;
  std::string summary;
  std::string witness;
  unsigned threads = 1;
  bool fejer = false;
  bool dirichlet = false;
  unsigned kernel_n = 8;
  std::size_t nodes = 512;
};

CheckParameters check_parameters(const Options& o) {
  CheckParameters p;
  p.tolerances = {o.rel_tol, o.abs_tol};
  p.radius = o.growth_radius;
  p.delta = o.delta;
  return p;
}

std::string config_hash(const json& config) { return io::hex64(io::fnv1a64(config.dump())); }

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o) {
  const auto poly = io::polynomial_from_json(load_json(o.poly, "polynomial"));
  const json point = load_json(o.point, "point");
  return std::visit(
      [&](const auto& p) {
        using A = std::decay_t<decltype(p.leading())>;
        const A q = io::element_from_json<A>(point, "point");
        emit(json{{"value", io::element_to_json(eval(p, q))}});
        return int{kOk};
      },
      poly);
}

int cmd_check(const Options& o) {
  const auto params = check_parameters(o);
  json config{{"command", "check"}, {"check", o.check}, {"rel_tol", o.rel_tol}, {"abs_tol", o.abs_tol}};
  VerificationReport report;
  if (o.check == "lax-ratio") {
    const json zj = load_json(o.zeros, "zeros");
    if (!zj.is_array()) throw io::ParseError("zeros: expected an array of [re, im] pairs");
    std::vector<std::complex<double>> zeros;
    for (const auto& z : zj) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw io::ParseError("zeros: expected an array of [re, im] pairs");
      zeros.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    config["zeros"] = zj;
    config["theta"] = o.theta;
    report = lax_ratio_check(zeros, o.theta);
  } else {
    const json pj = load_json(o.poly, "polynomial");
    config["polynomial"] = pj;
    config["radius"] = o.growth_radius;
    config["delta"] = o.delta;
    const auto poly = io::polynomial_from_json(pj);
    report = std::visit([&](const auto& p) { return run_check(o.check, p, params); }, poly);
  }
  emit(io::report_to_json(report, std::nullopt, config_hash(config)));
  return report.violation() ? kViolation : kOk;
}

template <Algebra A>
int run_fuzz(const Options& o, const CampaignConfig& cfg, const json& config) {
  const std::string hash = config_hash(config);
  const auto result = fuzz_campaign<A>(cfg);

  std::ofstream csv_file;
  if (!o.output.empty()) {
    csv_file.open(o.output, std::ios::binary);
    if (!csv_file) throw DomainError("cannot write '" + o.output + "'");
  }
  std::ostream& csv = o.output.empty() ? std::cout : csv_file;
  io::write_csv(csv, cfg.check, result.outcomes, hash, cfg.params.tolerances);

  json summary{{"schema", "campaign_v1"}, {"config_hash", hash}, {"config", config}};
  summary["summary"] = io::summary_to_json(result.summary);
  if (result.summary.extremal_trial) {
    const auto& outcome = result.outcomes[*result.summary.extremal_trial];
    summary["extremal_witness"] = io::polynomial_to_json(*result.extremal);
    summary["extremal_report"] = io::report_to_json(*outcome.report, outcome.trial, hash);
  }
  json errors = json::array();
  for (const auto& out : result.outcomes)
    if (!out.report) errors.push_back({{"trial", out.trial}, {"seed", out.seed}, {"error", out.error}});
  summary["errors"] = std::move(errors);

  if (!o.witness.empty() && result.extremal) {
    std::ofstream w(o.witness, std::ios::binary);
    if (!w) throw DomainError("cannot write '" + o.witness + "'");
    w << io::polynomial_to_json(*result.extremal).dump(2) << '\n';
  }
  if (!o.summary.empty()) {
    std::ofstream s(o.summary, std::ios::binary);
    if (!s) throw DomainError("cannot write '" + o.summary + "'");
    s << summary.dump(2) << '\n';
  } else {
    (o.output.empty() ? std::cerr : std::cout) << summary.dump(2) << '\n';
  }
  return result.summary.violations > 0 ? kViolation : kOk;
}

template <int M>
int run_fuzz_clifford(int m, const Options& o, const CampaignConfig& cfg, const json& config) {
  if constexpr (M > max_clifford_signature) {
    throw DomainError("Clifford signature m must be in 1.." + std::to_string(max_clifford_signature));
  } else {
    if (m == M) return run_fuzz<Clifford<M>>(o, cfg, config);
    return run_fuzz_clifford<M + 1>(m, o, cfg, config);
  }
}

int cmd_fuzz(const Options& o) {
  if (!is_check_name(o.check)) throw DomainError("unknown check '" + o.check + "'");
  if (o.trials < 1) throw DomainError("campaign needs at least one trial");
  const auto [lo, hi] = parse_degree_range(o.degrees);
  if (lo < 1) throw DomainError("degrees must be >= 1");

  CampaignConfig cfg;
  cfg.check = o.check;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  cfg.params = check_parameters(o);
  cfg.generator.seed = o.seed;
  cfg.generator.min_degree = lo;
  cfg.generator.max_degree = hi;
  cfg.generator.law = parse_law(o.law);
  cfg.generator.structure = o.constraint == "auto" ? default_structure(o.check) : parse_structure(o.constraint);

  // thread count is deliberately not part of the hash: it cannot change output
  const json config{{"command", "fuzz"},
                    {"check", cfg.check},
                    {"algebra", o.algebra},
                    {"seed", cfg.generator.seed},
                    {"trials", cfg.trials},
                    {"degrees", {lo, hi}},
                    {"law", to_string(cfg.generator.law)},
                    {"constraint", to_string(cfg.generator.structure)},
                    {"rel_tol", cfg.params.tolerances.rel},
                    {"abs_tol", cfg.params.tolerances.abs},
                    {"radius", cfg.params.radius},
                    {"delta", cfg.params.delta}};

  if (o.algebra == "quaternion") return run_fuzz<Quaternion>(o, cfg, config);
  if (o.algebra == "octonion") return run_fuzz<Octonion>(o, cfg, config);
  if (o.algebra.rfind("clifford", 0) == 0) {
    const std::string digits = o.algebra.substr(8);
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '9')
      return run_fuzz_clifford<1>(digits[0] - '0', o, cfg, config);
  }
  throw io::ParseError("--algebra: expected quaternion, octonion or cliffordM, got '" + o.algebra + "'");
}

int cmd_norm(const Options& o) {
  const auto poly = io::polynomial_from_json(load_json(o.poly, "polynomial"));
  if (!(o.radius > 0.0)) throw DomainError("radius must be > 0");
  std::visit(
      [&](const auto& p) {
        const auto r = o.minimum ? min_modulus_sphere(p, o.radius, o.norm_tol) : sup_norm_sphere(p, o.radius, o.norm_tol);
        emit(io::extremum_to_json(r));
      },
      poly);
  return kOk;
}

int cmd_zeros(const Options& o) {
  const auto poly = io::polynomial_from_json(load_json(o.poly, "polynomial"));
  const auto* p = std::get_if<SlicePolynomial<Quaternion>>(&poly);
  if (p == nullptr) throw DomainError("zero sets need quaternion coefficients");
  emit(io::zero_set_to_json(zero_set(*p)));
  return kOk;
}

int cmd_kernel(const Options& o) {
  if (o.nodes < 1) throw DomainError("--nodes must be >= 1");
  std::cout << "x,value\n";
  for (std::size_t m = 0; m < o.nodes; ++m) {
    const double x = kTwoPi * static_cast<double>(m) / static_cast<double>(o.nodes);
    const double v = o.fejer ? fejer(o.kernel_n, x) : dirichlet(o.kernel_n, x);
    std::cout << io::format_double(x) << ',' << io::format_double(v) << '\n';
  }
  return kOk;
}

unsigned default_threads() {
  if (const char* env = std::getenv("SLICEREG_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
    std::cerr << "warning: ignoring invalid SLICEREG_THREADS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.threads = default_threads();

  CLI::App app{"Slice regular polynomials over quaternions, octonions and Clifford algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "slicereg 1.0.0");

  auto add_tolerances = [&o](CLI::App* sub) {
    sub->add_option("--rel-tol", o.rel_tol, "relative tolerance on the ratio")->check(CLI::NonNegativeNumber);
    sub->add_option("--abs-tol", o.abs_tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate P at a point");
  eval_cmd->add_option("-p,--poly", o.poly, "polynomial JSON (file or inline)")->required();
  eval_cmd->add_option("-q,--point", o.point, "point JSON (file or inline)")->required();

  auto* check_cmd = app.add_subcommand("check", "run one inequality check and print its report");
  check_cmd->add_option("name", o.check, "check name")->required()->check(CLI::IsMember(
      std::vector<std::string>(kCheckNames.begin(), kCheckNames.end())));
  check_cmd->add_option("-p,--poly", o.poly, "polynomial JSON (file or inline)");
  check_cmd->add_option("--zeros", o.zeros, "lax-ratio: zeros as [[re, im], ...]");
  check_cmd->add_option("--theta", o.theta, "lax-ratio: evaluation angle");
  check_cmd->add_option("-R,--radius", o.growth_radius, "ankeny-growth: radius R > 1");
  check_cmd->add_option("--delta", o.delta, "ankeny-converse: delta > 1");
  add_tolerances(check_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded random campaign over one check");
  fuzz_cmd->add_option("--check", o.check, "check name")->required();
  fuzz_cmd->add_option("--trials", o.trials, "number of trials");
  fuzz_cmd->add_option("--seed", o.seed, "64-bit campaign seed");
  fuzz_cmd->add_option("--deg", o.degrees, "degree N or range LO..HI");
  fuzz_cmd->add_option("--algebra", o.algebra, "quaternion | octonion | cliffordM");
  fuzz_cmd->add_option("--law", o.law, "coefficient law: uniform | gaussian");
  fuzz_cmd->add_option("--constraint", o.constraint,
                       "auto | none | common-slice | zeros-outside | zeros-inside | real-spherical | monomial");
  fuzz_cmd->add_option("-R,--radius", o.growth_radius, "ankeny-growth radius");
  fuzz_cmd->add_option("--delta", o.delta, "ankeny-converse delta");
  fuzz_cmd->add_option("-o,--output", o.output, "CSV path (default stdout)");
  fuzz_cmd->add_option("--summary", o.summary, "summary JSON path");
  fuzz_cmd->add_option("--witness", o.witness, "extremal witness polynomial JSON path");
  fuzz_cmd->add_option("--threads", o.threads, "worker threads (env SLICEREG_THREADS)")->check(CLI::Range(1u, 1024u));
  add_tolerances(fuzz_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "max (or min) of |P| on the sphere |q| = R");
  norm_cmd->add_option("-p,--poly", o.poly, "polynomial JSON (file or inline)")->required();
  norm_cmd->add_option("-R,--radius", o.radius, "sphere radius");
  norm_cmd->add_flag("--min", o.minimum, "minimum modulus instead of the maximum");
  norm_cmd->add_option("--tol", o.norm_tol, "value tolerance")->check(CLI::PositiveNumber);

  auto* zeros_cmd = app.add_subcommand("zeros", "classified zero set of a quaternionic polynomial");
  zeros_cmd->add_option("-p,--poly", o.poly, "polynomial JSON (file or inline)")->required();

  auto* kernel_cmd = app.add_subcommand("kernel", "tabulate D_n or F_n on [0, 2pi)");
  auto* fejer_flag = kernel_cmd->add_flag("--fejer", o.fejer, "Fejer kernel F_n");
  auto* dirichlet_flag = kernel_cmd->add_flag("--dirichlet", o.dirichlet, "Dirichlet kernel D_n");
  fejer_flag->excludes(dirichlet_flag);
  kernel_cmd->add_option("-n", o.kernel_n, "kernel order");
  kernel_cmd->add_option("--nodes", o.nodes, "number of uniform nodes");

  try {
    app.parse(argc, argv);
    if (kernel_cmd->parsed() && !o.fejer && !o.dirichlet)
      throw CLI::RequiredError("kernel needs --fejer or --dirichlet");
    if (check_cmd->parsed() && o.check != "lax-ratio" && o.poly.empty())
      throw CLI::RequiredError("check " + o.check + " needs -p/--poly");
    if (check_cmd->parsed() && o.check == "lax-ratio" && o.zeros.empty())
      throw CLI::RequiredError("check lax-ratio needs --zeros");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(o);
    if (check_cmd->parsed()) return cmd_check(o);
    if (fuzz_cmd->parsed()) return cmd_fuzz(o);
    if (norm_cmd->parsed()) return cmd_norm(o);
    if (zeros_cmd->parsed()) return cmd_zeros(o);
    if (kernel_cmd->parsed()) return cmd_kernel(o);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
