#include <catch_amalgamated.hpp>

#include <cstring>
#include <sstream>

#include "slicereg/io.hpp"
#include "support.hpp"

using namespace slicereg;
using namespace slicereg::testing;
using slicereg::io::json;

namespace {

using Q = Quaternion;

std::string parse_message(std::string_view text) {
  try {
    io::parse_text(text, "in.json");
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("FNV-1a reference values", "[io]") {
  CHECK(io::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(io::fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(io::hex64(0xabcULL) == "0000000000000abc");
  CHECK(io::hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
}

TEST_CASE("double formatting round-trips", "[io][property]") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-2.5e-300) == "-2.5e-300");
  CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(io::format_double(std::nan("")) == "nan");
  CHECK(io::number(std::numeric_limits<double>::infinity()) == json("inf"));
  CHECK(io::number(1.5) == json(1.5));

  Rng rng(81);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int t = 0; t < 10000; ++t) {
    double v;
    const std::uint64_t b = bits(rng);
    std::memcpy(&v, &b, sizeof v);
    if (!std::isfinite(v)) continue;
    CHECK(std::stod(io::format_double(v)) == v);
    // nlohmann's serialization also round-trips
    CHECK(json::parse(json(v).dump()).get<double>() == v);
  }
}

TEST_CASE("parse errors carry line and column", "[io]") {
  const auto msg = parse_message("{\n  \"coeffs\": [1, 2,,]\n}");
  CHECK(msg.rfind("in.json:2:", 0) == 0);
  CHECK(msg.find("[json.exception") == std::string::npos);
  CHECK(msg.find("line 2") == std::string::npos);

  CHECK(parse_message("[1, 2").rfind("in.json:1:", 0) == 0);
  CHECK(parse_message("").rfind("in.json:1:1:", 0) == 0);
  CHECK(parse_message("[1, 2]").empty());
}

TEMPLATE_TEST_CASE("element and polynomial round-trips", "[io][property]", Quaternion, Octonion, Clifford<1>,
                   Clifford<3>, Clifford<6>) {
  Rng rng(82);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_polynomial<TestType>(rng, t % 6);
    const json j = io::polynomial_to_json(p);
    const auto text = j.dump();
    const auto any = io::polynomial_from_json(io::parse_text(text));
    REQUIRE(std::holds_alternative<SlicePolynomial<TestType>>(any));
    CHECK(std::get<SlicePolynomial<TestType>>(any) == p);

    const TestType a = random_element<TestType>(rng);
    CHECK(io::element_from_json<TestType>(json::parse(io::element_to_json(a).dump())) == a);
  }
}

TEST_CASE("polynomial input forms", "[io]") {
  const auto bare = io::polynomial_from_json(json::parse("[[1,0,0,0],[0,1,0,0]]"));
  REQUIRE(std::holds_alternative<SlicePolynomial<Q>>(bare));
  CHECK(std::get<SlicePolynomial<Q>>(bare).coeff(1) == Q{0, 1, 0, 0});

  const auto tagged = io::polynomial_from_json(json::parse(R"({"coeffs": [[0,0,0,1]]})"));
  CHECK(std::holds_alternative<SlicePolynomial<Q>>(tagged));

  const auto cl = io::polynomial_from_json(json::parse(R"({"algebra":"clifford","m":2,"coeffs":[[1,0,0,0],{"m":2,"coeffs":[0,1,0,0]}]})"));
  REQUIRE(std::holds_alternative<SlicePolynomial<Clifford<2>>>(cl));
  CHECK(std::get<SlicePolynomial<Clifford<2>>>(cl).degree().value() == 1);

  const auto oct = io::polynomial_from_json(json::parse(R"({"algebra":"octonion","coeffs":[[1,2,3,4,5,6,7,8]]})"));
  CHECK(std::holds_alternative<SlicePolynomial<Octonion>>(oct));

  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"algebra":"clifford","m":2,"coeffs":[{"m":3,"coeffs":[1,0,0,0]}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"algebra":"clifford","coeffs":[[1,0]]})")), io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"algebra":"clifford","m":9,"coeffs":[[1]]})")), DomainError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"algebra":"sedenion","coeffs":[[1]]})")), io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"coeffs":[[1,0,0]]})")), io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"coeffs":[[1,0,"x",0]]})")), io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"coeffs":[]})")), io::ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse("42")), io::ParseError);
}

TEST_CASE("report JSON", "[io]") {
  auto r = bernstein_check(SlicePolynomial<Q>::monomial(2, Q{0, 0, 0, 1}));
  r.seed = 17;
  const json j = io::report_to_json(r, 3, "00ff");
  const std::vector<std::string> keys{"schema",        "check",     "trial",      "config_hash", "lhs",
                                      "rhs",           "ratio",     "holds",      "margin",      "strict",
                                      "equality_case", "witnesses", "preconditions_met",         "reasons",
                                      "tolerances",    "seed",      "details"};
  std::vector<std::string> got;
  for (const auto& item : j.items()) got.push_back(item.key());
  CHECK(got == keys);
  CHECK(j["schema"] == "report_v1");
  CHECK(j["check"] == "bernstein");
  CHECK(j["trial"] == 3);
  CHECK(j["config_hash"] == "00ff");
  CHECK(j["equality_case"] == true);
  CHECK(j["seed"] == 17);
  CHECK(j["tolerances"]["rel"] == 1e-7);
  CHECK(j["witnesses"]["lhs"].size() == 4);

  VerificationReport inf;
  inf.lhs = 1.0;
  detail::finalize(inf);
  const json k = io::report_to_json(inf);
  CHECK(k["ratio"] == "inf");
  CHECK(k["trial"].is_null());
  CHECK(k["seed"].is_null());
}

TEST_CASE("CSV layout", "[io]") {
  std::vector<TrialOutcome> outs(2);
  outs[0].trial = 0;
  outs[0].seed = 11;
  outs[0].degree = 3;
  VerificationReport r;
  r.ratio = 0.75;
  r.holds = true;
  outs[0].report = r;
  outs[1].trial = 1;
  outs[1].seed = 12;
  outs[1].degree = 2;
  outs[1].error = "boom";

  std::ostringstream os;
  io::write_csv(os, "bernstein", outs, "abc", Tolerances{});
  CHECK(os.str() ==
        "# config_hash=abc rel_tol=1e-07 abs_tol=1e-10\n"
        "check,degree,ratio,holds,equality_case,preconditions_met,seed\n"
        "bernstein,3,0.75,true,false,true,11\n"
        "bernstein,2,error,false,false,false,12\n");
}

TEST_CASE("zero set and extremum JSON", "[io]") {
  const SlicePolynomial<Q> sq({Q{1, 0, 0, 0}, Q{}, Q{1, 0, 0, 0}});
  const json z = io::zero_set_to_json(zero_set(sq));
  CHECK(z["spherical_zeros"].size() == 1);
  CHECK(z["total_multiplicity"] == 2);
  CHECK(z["real_zeros"].empty());

  const json e = io::extremum_to_json(sup_norm_sphere(sq));
  CHECK(e["witness"].size() == 4);
  CHECK(e.contains("tol"));
  CHECK(e["evaluations"].get<long>() > 0);
}
