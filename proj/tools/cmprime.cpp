// Command-line frontend: analyze, verify, oracle, hilbert.

#include "cmprime/deficiency.hpp"
#include "cmprime/error.hpp"
#include "cmprime/frame.hpp"
#include "cmprime/hilbert.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/modp.hpp"
#include "cmprime/report.hpp"
#include "cmprime/secondary.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cmprime;

namespace {

struct Common {
  std::string group;
  std::string ambient = "auto";
  std::string format = "text";
  std::string point;
  unsigned max_degree = 0;
  std::string out;
};

std::optional<AmbientKind> parse_ambient(const std::string& s) {
  if (s == "auto") return std::nullopt;
  return ambient_from_string(s);
}

std::optional<std::vector<Integer>> parse_point(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<Integer> z;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    require(!item.empty() && v.set_str(item, 10) == 0, ErrorCode::parse,
            "malformed evaluation point '" + s + "'");
    z.push_back(v);
  }
  return z;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  require(static_cast<bool>(f), ErrorCode::parse, "cannot write " + c.out);
  f << text;
}

struct Setup {
  ParsedGroup parsed;
  Group group;
  AmbientFrame frame;
};

Setup setup(const Common& c) {
  Setup s;
  s.parsed = parse_group(c.group);
  s.group = group_from_generators(s.parsed.n, s.parsed.generators);
  s.frame = build_frame(s.group, parse_ambient(c.ambient).value_or(default_ambient(s.group)));
  return s;
}

SecondarySet secondaries(const Common& c, const Setup& s, const HilbertData& h) {
  UniversalOptions uo;
  uo.point = parse_point(c.point);
  uo.max_degree = c.max_degree;
  return universal_secondaries(s.frame, h, uo);
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("group", c.group, "group, e.g. \"n=5; gens=(1,5,4,2,3);(2,3,4,5)\"")
      ->required();
  app->add_option("--ambient", c.ambient, "ambient reflection group")
      ->check(CLI::IsMember({"auto", "sym", "young", "hyperoctahedral"}));
  app->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_option("--point", c.point, "evaluation point z1,z2,...");
  app->add_option("--max-degree", c.max_degree, "refuse secondaries above this degree");
  app->add_option("--out", c.out, "write the report to this file");
}

int run(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay defect of permutation group invariants"};
  app.require_subcommand(1);
  Common c;
  bool verify = false, timings = false, no_symbolic = false;
  std::uint64_t prime = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline");
  add_common(analyze_cmd, c);
  analyze_cmd->add_flag("--verify", verify, "mod-p check of each prime dividing |G|");
  analyze_cmd->add_flag("--timings", timings, "include stage timings");
  analyze_cmd->add_flag("--no-symbolic", no_symbolic, "skip the symbolic determinant");

  auto* verify_cmd = app.add_subcommand("verify", "mod-p oracle for one prime");
  add_common(verify_cmd, c);
  verify_cmd->add_option("--prime", prime, "prime p")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "symbolic determinant cross-check");
  add_common(oracle_cmd, c);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "secondary degrees only");
  add_common(hilbert_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::parse);
  }

  const bool json_out = c.format == "json";
  if (analyze_cmd->parsed()) {
    AnalysisOptions o;
    o.ambient = parse_ambient(c.ambient);
    o.point = parse_point(c.point);
    o.max_degree = c.max_degree;
    o.verify = verify;
    o.timings = timings;
    o.symbolic = !no_symbolic;
    AnalysisReport r = analyze(parse_group(c.group), o);
    emit(c, json_out ? to_json(r) : to_text(r));
    return 0;
  }

  Setup s = setup(c);
  HilbertData h = secondary_degrees(s.frame);
  if (hilbert_cmd->parsed()) {
    nlohmann::json j = {{"schema", kReportSchema},
                        {"ambient", to_string(s.frame.kind())},
                        {"index", s.frame.index()},
                        {"secondary_degrees", h.degrees},
                        {"delta_degree", discriminant_degree(s.frame)}};
    std::ostringstream os;
    if (json_out) {
      os << j.dump(2) << "\n";
    } else {
      os << "index " << s.frame.index() << ", deg Delta(G) " << discriminant_degree(s.frame)
         << "\nsecondary degrees:";
      for (unsigned d : h.degrees) os << ' ' << d;
      os << "\n";
    }
    emit(c, os.str());
    return 0;
  }

  SecondarySet set = secondaries(c, s, h);
  std::vector<SparsePoly> polys = set.polys();
  if (verify_cmd->parsed()) {
    InvariantContext ctx(s.frame);
    ModPVerdict v = is_good_prime(ctx, polys, prime);
    DeficiencyReport d = deficiency_evaluated(s.frame, polys, set.evaluation_point);
    bool agrees = v.is_good != (mpz_divisible_ui_p(d.deficiency.get_mpz_t(), prime) != 0);
    nlohmann::json j = {{"schema", kReportSchema},
                        {"prime", prime},
                        {"is_good", v.is_good},
                        {"swept_to", v.swept_to},
                        {"deficiency", d.deficiency.get_str()},
                        {"agrees_with_deficiency", agrees}};
    std::ostringstream os;
    std::string label = v.witness ? orbit_sum_label(v.witness->rep, s.parsed.n) : "";
    if (v.witness)
      j["witness"] = {{"degree", v.witness->degree},
                      {"exponents", v.witness->rep.exponents(s.parsed.n)},
                      {"orbit_sum", label}};
    if (json_out) {
      os << j.dump(2) << "\n";
    } else {
      os << "p = " << prime << ": " << (v.is_good ? "good" : "bad") << " (degrees 0.."
         << v.swept_to << ")";
      if (v.witness) os << ", witness " << label << " in degree " << v.witness->degree;
      os << "\ndeficiency " << d.deficiency << ", " << (agrees ? "consistent" : "INCONSISTENT")
         << "\n";
    }
    emit(c, os.str());
    return agrees ? 0 : static_cast<int>(ErrorCode::invariant);
  }

  // oracle
  DeficiencyReport ev = deficiency_evaluated(s.frame, polys, set.evaluation_point);
  DeficiencyReport sy = deficiency_symbolic(s.frame, polys);
  bool agree = ev.deficiency == sy.deficiency && ev.det_sign == sy.det_sign;
  std::ostringstream os;
  if (json_out) {
    nlohmann::json j = {{"schema", kReportSchema},
                        {"evaluated", ev.deficiency.get_str()},
                        {"symbolic", sy.deficiency.get_str()},
                        {"det_sign", sy.det_sign},
                        {"identity_checked", sy.identity_checked},
                        {"agree", agree}};
    os << j.dump(2) << "\n";
  } else {
    os << "det M = " << (sy.det_sign < 0 ? "-1" : "+1") << " · " << sy.deficiency
       << " · Δ(G)\n"
       << "evaluated deficiency " << ev.deficiency << ", symbolic " << sy.deficiency
       << (agree ? " (agree)" : " (DISAGREE)") << "\n";
  }
  emit(c, os.str());
  return agree ? 0 : static_cast<int>(ErrorCode::invariant);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // argument preconditions count as input errors
    return e.code() == ErrorCode::domain ? static_cast<int>(ErrorCode::parse)
                                         : static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::invariant);
  }
}
