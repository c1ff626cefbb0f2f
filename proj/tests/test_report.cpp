#include "fixtures.hpp"

#include "cmprime/error.hpp"
#include "cmprime/report.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cmprime;
using namespace fixtures;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_group(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::invariant;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("group parsing") {
  ParsedGroup p = parse_group(kOrder20);
  CHECK(p.n == 5);
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0].image(0) == 4);  // 1 -> 5
  CHECK(p.generators[1].image(0) == 0);
  ParsedGroup s = parse_group("n=3;gens=[-2,1,3]");
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0].is_signed());
  ParsedGroup spaced = parse_group("  n = 4 ;  gens = (1, 2) (3, 4) ; (1,3)(2,4) ");
  CHECK(spaced.generators.size() == 2);
  ParsedGroup trivial = parse_group("n=2; gens=");
  CHECK(trivial.generators.empty());
  CHECK(group_from_generators(2, trivial.generators).order() == 1);
}

TEST_CASE("group parse errors") {
  CHECK(code_of("n=3; gens=(1,1,2)") == ErrorCode::parse);
  CHECK(code_of("n=3; gens=(1,4)") == ErrorCode::parse);
  CHECK(code_of("n=3; gens=[1,1,2]") == ErrorCode::parse);
  CHECK(code_of("n=3; gens=[1,2]") == ErrorCode::parse);
  CHECK(code_of("n=3; gens=(1,2") == ErrorCode::parse);
  CHECK(code_of("m=3; gens=(1,2)") == ErrorCode::parse);
  CHECK(code_of("n=0; gens=") == ErrorCode::parse);
  CHECK(code_of("n=3; gens=x") == ErrorCode::parse);
  CHECK(code_of("n=9; gens=(1,2)") == ErrorCode::unsupported);
  CHECK(code_of("n=7; gens=[-1,2,3,4,5,6,7]") == ErrorCode::unsupported);
}

TEST_CASE("default ambient") {
  CHECK(default_ambient(group_of(kA4)) == AmbientKind::symmetric);
  CHECK(default_ambient(group_of(kYoungAlt5)) == AmbientKind::young);
  CHECK(default_ambient(group_of(kG225)) == AmbientKind::hyperoctahedral);
}

TEST_CASE("order-20 report") {
  AnalysisReport r = analyze(parse_group(kOrder20), {});
  CHECK(r.group_order == 20);
  CHECK(r.ambient == AmbientKind::symmetric);
  CHECK(r.ambient_order == 120);
  CHECK(r.index == 6);
  CHECK(r.secondary_degrees == std::vector<unsigned>{0, 4, 5, 6, 7, 8});
  CHECK(r.goebel_bound == 10);
  CHECK(r.deficiency == 2);
  CHECK(r.bad_primes == std::vector<std::uint64_t>{2});
  CHECK(r.delta_degree == 30);
  CHECK(r.method == "symbolic");
  CHECK(has(r.identities_checked, "det_M_equals_sign_deficiency_delta"));
  CHECK(has(r.identities_checked, "symbolic_equals_evaluated"));
  CHECK(has(r.identities_checked, "mu_equals_deficiency_times_delta"));
  CHECK_FALSE(r.verification.has_value());
  CHECK_FALSE(r.timings.has_value());
  CHECK_NOTHROW(check_consistency(r));
  std::string text = to_text(r);
  CHECK(text.find("(verified symbolically)") != std::string::npos);
}

TEST_CASE("verification records") {
  AnalysisOptions o;
  o.verify = true;
  AnalysisReport r = analyze(parse_group(kOrder20), o);
  REQUIRE(r.verification.has_value());
  REQUIRE(r.verification->size() == 2);
  CHECK((*r.verification)[0].prime == 2);
  CHECK_FALSE((*r.verification)[0].is_good);
  CHECK((*r.verification)[0].witness_degree.has_value());
  CHECK((*r.verification)[1].prime == 5);
  CHECK((*r.verification)[1].is_good);
  CHECK(has(r.identities_checked, "modp_verdicts_match_deficiency"));
}

TEST_CASE("JSON round trip and determinism") {
  AnalysisOptions o;
  o.verify = true;
  for (std::string text : {kOrder20, kYoungAlt5, kG225, kA3}) {
    CAPTURE(text);
    AnalysisReport r = analyze(parse_group(text), o);
    std::string j = to_json(r);
    AnalysisReport back = report_from_json(j);
    CHECK(back == r);
    CHECK(to_json(back) == j);
    CHECK(to_json(analyze(parse_group(text), o)) == j);
    CHECK(j.find("\"schema\": 1") != std::string::npos);
  }
}

TEST_CASE("timings are opt-in") {
  AnalysisOptions o;
  o.timings = true;
  AnalysisReport r = analyze(parse_group(kA4), o);
  REQUIRE(r.timings.has_value());
  CHECK(to_json(r).find("timings") != std::string::npos);
  CHECK(to_json(analyze(parse_group(kA4), {})).find("timings") == std::string::npos);
}

TEST_CASE("reports are consistent over fixture groups") {
  for (const auto& [name, text] : small_index_groups()) {
    CAPTURE(name);
    AnalysisReport r = analyze(parse_group(text), {});
    CHECK_NOTHROW(check_consistency(r));
    CHECK(r.deficiency * r.index >= 1);
  }
}

TEST_CASE("inconsistent reports are rejected") {
  AnalysisReport r = analyze(parse_group(kOrder20), {});
  AnalysisReport bad = r;
  bad.bad_primes.clear();
  CHECK_THROWS_AS(check_consistency(bad), Error);
  bad = r;
  bad.deficiency = 14;
  bad.bad_primes = {2, 7};
  CHECK_THROWS_AS(check_consistency(bad), Error);
  bad = r;
  bad.secondary_degrees.back() = 9;
  CHECK_THROWS_AS(check_consistency(bad), Error);
}

TEST_CASE("non-default ambient and evaluation point") {
  AnalysisOptions o;
  o.ambient = AmbientKind::young;
  AnalysisReport y = analyze(parse_group("n=4; gens=(1,2)"), o);
  CHECK(y.ambient == AmbientKind::young);
  CHECK(y.index == 1);
  AnalysisOptions p;
  p.point = std::vector<Integer>{2, 3, 5, 7, 11};
  AnalysisReport r = analyze(parse_group(kOrder20), p);
  CHECK(r.deficiency == 2);
  CHECK(r.evaluation_point == *p.point);
}

TEST_CASE("degree cap and degenerate points") {
  AnalysisOptions o;
  o.max_degree = 5;
  CHECK_THROWS_AS(analyze(parse_group(kOrder20), o), Error);
  AnalysisOptions z;
  z.point = std::vector<Integer>{1, 1, 2, 3, 4};
  CHECK_THROWS_AS(analyze(parse_group(kOrder20), z), Error);
}
