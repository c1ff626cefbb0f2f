#include "cmprime/report.hpp"

#include "cmprime/deficiency.hpp"
#include "cmprime/error.hpp"
#include "cmprime/hilbert.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/modp.hpp"
#include "cmprime/secondary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <sstream>

namespace cmprime {

namespace {

using nlohmann::json;

class Scanner {
public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(ErrorCode::parse, std::string("expected '") + c + "' at position " +
                                 std::to_string(pos_));
  }
  void expect_word(const std::string& w) {
    skip_space();
    if (s_.compare(pos_, w.size(), w) != 0)
      fail(ErrorCode::parse, "expected '" + w + "' at position " +
                                 std::to_string(pos_));
    pos_ += w.size();
  }
  long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits || pos_ - digits > 6)
      fail(ErrorCode::parse, "expected an integer at position " +
                                 std::to_string(start));
    return std::stol(s_.substr(start, pos_ - start));
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

std::size_t point(long v, std::size_t n) {
  require(v >= 1 && static_cast<std::size_t>(v) <= n, ErrorCode::parse,
          "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v);
}

SignedPermutation parse_cycles(Scanner& sc, std::size_t n) {
  std::vector<std::vector<std::size_t>> cycles;
  while (sc.accept('(')) {
    std::vector<std::size_t> cycle;
    if (!sc.accept(')')) {
      do {
        std::size_t p = point(sc.integer(), n);
        require(std::find(cycle.begin(), cycle.end(), p) == cycle.end(),
                ErrorCode::parse,
                "duplicate index " + std::to_string(p) + " in a cycle");
        cycle.push_back(p);
      } while (sc.accept(','));
      sc.expect(')');
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  return SignedPermutation::from_cycles(n, cycles);
}

SignedPermutation parse_images(Scanner& sc, std::size_t n) {
  sc.expect('[');
  std::vector<int> entries;
  std::vector<bool> seen(n, false);
  do {
    long v = sc.integer();
    std::size_t p = point(v < 0 ? -v : v, n);
    require(!seen[p - 1], ErrorCode::parse,
            "duplicate index " + std::to_string(p) + " in an image list");
    seen[p - 1] = true;
    entries.push_back(static_cast<int>(v));
  } while (sc.accept(','));
  sc.expect(']');
  require(entries.size() == n, ErrorCode::parse,
          "image list must have exactly n entries");
  return SignedPermutation::from_signed_images(entries);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts, sep);
}

Integer parse_integer(const json& j) {
  require(j.is_string(), ErrorCode::parse, "integer fields are encoded as strings");
  Integer v;
  require(v.set_str(j.get<std::string>(), 10) == 0, ErrorCode::parse,
          "malformed integer '" + j.get<std::string>() + "'");
  return v;
}

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<Integer> parse_integers(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

}  // namespace

ParsedGroup parse_group(const std::string& text) {
  Scanner sc(text);
  ParsedGroup out;
  sc.expect_word("n");
  sc.expect('=');
  long n = sc.integer();
  require(n >= 1, ErrorCode::parse, "n must be positive");
  require(static_cast<std::size_t>(n) <= kMaxRank, ErrorCode::unsupported,
          "n is limited to " + std::to_string(kMaxRank));
  out.n = static_cast<std::size_t>(n);
  sc.expect(';');
  sc.expect_word("gens");
  sc.expect('=');
  while (!sc.done()) {
    if (sc.peek() == '[')
      out.generators.push_back(parse_images(sc, out.n));
    else if (sc.peek() == '(')
      out.generators.push_back(parse_cycles(sc, out.n));
    else
      fail(ErrorCode::parse, "expected '(' or '[' to start a generator");
    if (!sc.done()) sc.expect(';');
  }
  bool is_signed = std::any_of(out.generators.begin(), out.generators.end(),
                               [](const auto& g) { return g.is_signed(); });
  require(!is_signed || out.n <= kMaxSignedRank, ErrorCode::unsupported,
          "signed groups are limited to n = " + std::to_string(kMaxSignedRank));
  return out;
}

AmbientKind default_ambient(const Group& g) {
  if (g.is_signed()) return AmbientKind::hyperoctahedral;
  return g.point_orbits().size() == 1 ? AmbientKind::symmetric
                                      : AmbientKind::young;
}

bool operator==(const SecondaryRecord& a, const SecondaryRecord& b) {
  return a.degree == b.degree && a.combination == b.combination && a.text == b.text;
}
bool operator==(const HyperplaneRecord& a, const HyperplaneRecord& b) {
  return a.label == b.label && a.count == b.count && a.exponent == b.exponent;
}
bool operator==(const VerdictRecord& a, const VerdictRecord& b) {
  return a.prime == b.prime && a.is_good == b.is_good && a.swept_to == b.swept_to &&
         a.witness_degree == b.witness_degree &&
         a.witness_exponents == b.witness_exponents && a.witness == b.witness;
}
bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  return a.n == b.n && a.group_order == b.group_order && a.ambient == b.ambient &&
         a.ambient_order == b.ambient_order && a.index == b.index &&
         a.secondary_degrees == b.secondary_degrees &&
         a.goebel_bound == b.goebel_bound &&
         a.secondaries == b.secondaries && a.deficiency == b.deficiency &&
         a.bad_primes == b.bad_primes && a.det_sign == b.det_sign &&
         a.method == b.method && a.delta_exponents == b.delta_exponents &&
         a.delta_degree == b.delta_degree &&
         a.evaluation_point == b.evaluation_point &&
         a.identities_checked == b.identities_checked &&
         a.verification == b.verification && a.timings == b.timings;
}

AnalysisReport analyze(const ParsedGroup& input, const AnalysisOptions& options) {
  std::map<std::string, double> timings;
  auto t0 = std::chrono::steady_clock::now();
  Group g = group_from_generators(input.n, input.generators);
  AmbientKind kind = options.ambient.value_or(default_ambient(g));
  AmbientFrame frame = build_frame(g, kind);
  timings["frame"] = seconds_since(t0);

  AnalysisReport r;
  r.n = input.n;
  r.group_order = static_cast<unsigned long>(g.order());
  r.ambient = kind;
  r.ambient_order = static_cast<unsigned long>(frame.sigma().order());
  r.index = frame.index();
  for (const auto& orbit : discriminant_exponents(frame))
    r.delta_exponents.push_back({orbit.label(), orbit.forms.size(), orbit.exponent});
  r.delta_degree = discriminant_degree(frame);
  DeltaDegreeCheck dc = delta_degree_check(frame);
  require(dc.holds, ErrorCode::invariant,
          "deg Delta(G) disagrees with the reflection count identity");
  require(reflection_count_from_cosets(frame) == frame.reflections_in_subgroup(),
          ErrorCode::invariant, "reflection count from cosets disagrees");
  r.identities_checked.push_back("delta_degree_reflections");

  t0 = std::chrono::steady_clock::now();
  HilbertData hilbert = secondary_degrees(frame);
  r.secondary_degrees = hilbert.degrees;
  r.goebel_bound = hilbert.goebel_bound;
  r.identities_checked.push_back("degree_sum_equals_delta_degree");
  timings["hilbert"] = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  UniversalOptions uo;
  uo.point = options.point;
  uo.max_degree = options.max_degree;
  SecondarySet set = universal_secondaries(frame, hilbert, uo);
  timings["secondaries"] = seconds_since(t0);
  std::vector<SparsePoly> polys = set.polys();
  for (const auto& theta : set.thetas) {
    SecondaryRecord rec;
    rec.degree = theta.degree;
    for (const auto& [m, c] : theta.combination)
      rec.combination.emplace_back(m.exponents(input.n), c);
    rec.text = theta.to_string(input.n);
    r.secondaries.push_back(std::move(rec));
  }
  for (const auto& gen : g.generators())
    for (const auto& p : polys)
      require(apply_group_element(gen, p) == p, ErrorCode::invariant,
              "a constructed secondary is not invariant");
  r.identities_checked.push_back("secondaries_invariant");
  r.evaluation_point = set.evaluation_point;

  t0 = std::chrono::steady_clock::now();
  DeficiencyReport ev = deficiency_evaluated(frame, polys, set.evaluation_point);
  require(set.mu == ev.deficiency * abs(ev.discriminant_value),
          ErrorCode::invariant, "mu differs from deficiency times |Delta(G)(z)|");
  r.identities_checked.push_back("mu_equals_deficiency_times_delta");
  r.deficiency = ev.deficiency;
  r.det_sign = ev.det_sign;
  r.bad_primes = bad_primes(ev.deficiency, r.group_order);
  r.method = to_string(DeficiencyMethod::evaluated);
  timings["deficiency_evaluated"] = seconds_since(t0);
  if (options.symbolic && frame.index() <= kSymbolicLimit) {
    t0 = std::chrono::steady_clock::now();
    DeficiencyReport sy = deficiency_symbolic(frame, polys);
    require(sy.deficiency == ev.deficiency && sy.det_sign == ev.det_sign,
            ErrorCode::invariant, "symbolic and evaluated deficiency disagree");
    r.method = to_string(DeficiencyMethod::symbolic);
    r.identities_checked.push_back("det_M_equals_sign_deficiency_delta");
    r.identities_checked.push_back("symbolic_equals_evaluated");
    timings["deficiency_symbolic"] = seconds_since(t0);
  }

  if (options.verify) {
    t0 = std::chrono::steady_clock::now();
    InvariantContext ctx(frame);
    std::vector<VerdictRecord> verdicts;
    for (std::uint64_t p : prime_divisors(g.order())) {
      if (p == 2 && frame.sigma().is_signed()) continue;
      ModPVerdict v = is_good_prime(ctx, polys, p);
      bool divides_mho = mpz_divisible_ui_p(r.deficiency.get_mpz_t(), p) != 0;
      require(v.is_good != divides_mho, ErrorCode::invariant,
              "mod-" + std::to_string(p) + " verdict contradicts the deficiency");
      VerdictRecord rec;
      rec.prime = p;
      rec.is_good = v.is_good;
      rec.swept_to = v.swept_to;
      if (v.witness) {
        rec.witness_degree = v.witness->degree;
        rec.witness_exponents = v.witness->rep.exponents(input.n);
        rec.witness = orbit_sum_label(v.witness->rep, input.n);
      }
      verdicts.push_back(std::move(rec));
    }
    r.verification = std::move(verdicts);
    r.identities_checked.push_back("modp_verdicts_match_deficiency");
    timings["verification"] = seconds_since(t0);
  }
  if (options.timings) r.timings = std::move(timings);
  check_consistency(r);
  return r;
}

void check_consistency(const AnalysisReport& r) {
  unsigned sum = 0;
  for (unsigned d : r.secondary_degrees) sum += d;
  require(sum == r.delta_degree, ErrorCode::invariant,
          "secondary degrees do not sum to deg Delta(G)");
  require(r.secondary_degrees.size() == r.index && r.secondaries.size() == r.index,
          ErrorCode::invariant, "number of secondaries differs from the index");
  for (std::size_t j = 0; j < r.index; ++j)
    require(r.secondaries[j].degree == r.secondary_degrees[j], ErrorCode::invariant,
            "secondary degrees are inconsistent");
  require(r.deficiency >= 1, ErrorCode::invariant, "deficiency must be positive");
  require(r.group_order.fits_ulong_p(), ErrorCode::invariant, "group order too large");
  std::vector<std::uint64_t> expect;
  for (std::uint64_t p : prime_divisors(r.group_order.get_ui()))
    if (mpz_divisible_ui_p(r.deficiency.get_mpz_t(), p)) expect.push_back(p);
  require(expect == r.bad_primes, ErrorCode::invariant,
          "bad primes are not the prime divisors of the deficiency");
  Integer rest = r.deficiency;
  for (std::uint64_t p : r.bad_primes)
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  require(rest == 1, ErrorCode::invariant,
          "deficiency has a prime factor not dividing |G|");
}

std::string to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["n"] = r.n;
  j["group_order"] = r.group_order.get_str();
  j["ambient"] = {{"kind", to_string(r.ambient)}, {"order", r.ambient_order.get_str()}};
  j["index"] = r.index;
  j["secondary_degrees"] = r.secondary_degrees;
  j["goebel_bound"] = r.goebel_bound;
  json secs = json::array();
  for (const auto& s : r.secondaries) {
    json comb = json::array();
    for (const auto& [e, c] : s.combination)
      comb.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
    secs.push_back({{"degree", s.degree}, {"combination", comb}, {"text", s.text}});
  }
  j["secondaries"] = secs;
  j["deficiency"] = r.deficiency.get_str();
  j["bad_primes"] = r.bad_primes;
  j["det_sign"] = r.det_sign;
  j["method"] = r.method;
  json hyp = json::array();
  for (const auto& h : r.delta_exponents)
    hyp.push_back({{"orbit", h.label}, {"hyperplanes", h.count}, {"exponent", h.exponent}});
  j["delta_exponents"] = hyp;
  j["delta_degree"] = r.delta_degree;
  j["evaluation_point"] = integers(r.evaluation_point);
  j["identities_checked"] = r.identities_checked;
  if (r.verification) {
    json v = json::array();
    for (const auto& rec : *r.verification) {
      json e = {{"prime", rec.prime}, {"is_good", rec.is_good}, {"swept_to", rec.swept_to}};
      if (rec.witness_degree)
        e["witness"] = {{"degree", *rec.witness_degree},
                        {"exponents", rec.witness_exponents},
                        {"orbit_sum", rec.witness}};
      v.push_back(std::move(e));
    }
    j["verification"] = v;
  }
  if (r.timings) j["timings"] = *r.timings;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
  try {
    require(j.at("schema").get<int>() == kReportSchema, ErrorCode::parse,
            "unsupported report schema");
    AnalysisReport r;
    r.n = j.at("n").get<std::size_t>();
    r.group_order = parse_integer(j.at("group_order"));
    r.ambient = ambient_from_string(j.at("ambient").at("kind").get<std::string>());
    r.ambient_order = parse_integer(j.at("ambient").at("order"));
    r.index = j.at("index").get<std::size_t>();
    r.secondary_degrees = j.at("secondary_degrees").get<std::vector<unsigned>>();
    r.goebel_bound = j.at("goebel_bound").get<unsigned>();
    for (const auto& s : j.at("secondaries")) {
      SecondaryRecord rec;
      rec.degree = s.at("degree").get<unsigned>();
      for (const auto& c : s.at("combination"))
        rec.combination.emplace_back(c.at("exponents").get<std::vector<unsigned>>(),
                                     parse_integer(c.at("coefficient")));
      rec.text = s.at("text").get<std::string>();
      r.secondaries.push_back(std::move(rec));
    }
    r.deficiency = parse_integer(j.at("deficiency"));
    r.bad_primes = j.at("bad_primes").get<std::vector<std::uint64_t>>();
    r.det_sign = j.at("det_sign").get<int>();
    r.method = j.at("method").get<std::string>();
    for (const auto& h : j.at("delta_exponents"))
      r.delta_exponents.push_back({h.at("orbit").get<std::string>(),
                                   h.at("hyperplanes").get<std::size_t>(),
                                   h.at("exponent").get<unsigned>()});
    r.delta_degree = j.at("delta_degree").get<unsigned>();
    r.evaluation_point = parse_integers(j.at("evaluation_point"));
    r.identities_checked = j.at("identities_checked").get<std::vector<std::string>>();
    if (j.contains("verification")) {
      std::vector<VerdictRecord> v;
      for (const auto& e : j.at("verification")) {
        VerdictRecord rec;
        rec.prime = e.at("prime").get<std::uint64_t>();
        rec.is_good = e.at("is_good").get<bool>();
        rec.swept_to = e.at("swept_to").get<unsigned>();
        if (e.contains("witness")) {
          const auto& w = e.at("witness");
          rec.witness_degree = w.at("degree").get<unsigned>();
          rec.witness_exponents = w.at("exponents").get<std::vector<unsigned>>();
          rec.witness = w.at("orbit_sum").get<std::string>();
        }
        v.push_back(std::move(rec));
      }
      r.verification = std::move(v);
    }
    if (j.contains("timings"))
      r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group: n = " << r.n << ", |G| = " << r.group_order << "\n";
  os << "ambient: " << to_string(r.ambient) << " (order " << r.ambient_order
     << "), index " << r.index << "\n";
  os << "secondary degrees: " << join_numbers(r.secondary_degrees, " ") << "\n";
  os << "secondaries:\n";
  for (std::size_t j = 0; j < r.secondaries.size(); ++j)
    os << "  theta" << j + 1 << " [deg " << r.secondaries[j].degree
       << "] = " << r.secondaries[j].text << "\n";
  os << "Delta(G): deg " << r.delta_degree;
  for (const auto& h : r.delta_exponents)
    os << "; " << h.count << " forms " << h.label << ", exponent " << h.exponent;
  os << "\n";
  os << "deficiency: " << r.deficiency << "\n";
  os << "bad primes: "
     << (r.bad_primes.empty() ? std::string("none") : join_numbers(r.bad_primes, " "))
     << "\n";
  if (r.method == to_string(DeficiencyMethod::symbolic))
    os << "det M = " << (r.det_sign < 0 ? "-1" : "+1") << " · " << r.deficiency
       << " · Δ(G)  (verified symbolically)\n";
  else
    os << "det M(z) = " << (r.det_sign < 0 ? "-1" : "+1") << " · " << r.deficiency
       << " · Δ(G)(z) at z = (" << join_numbers(r.evaluation_point, ",") << ")\n";
  os << "identities checked: " << join(r.identities_checked, ", ") << "\n";
  if (r.verification) {
    os << "mod-p verification:\n";
    for (const auto& v : *r.verification) {
      os << "  p = " << v.prime << ": " << (v.is_good ? "good" : "bad")
         << " (degrees 0.." << v.swept_to << ")";
      if (v.witness_degree)
        os << ", witness " << v.witness << " in degree " << *v.witness_degree;
      os << "\n";
    }
  }
  if (r.timings) {
    os << "timings:";
    for (const auto& [k, v] : *r.timings) os << " " << k << "=" << v << "s";
    os << "\n";
  }
  return os.str();
}

}  // namespace cmprime
