#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmprime {

struct ParsedGroup {
  std::size_t n = 0;
  std::vector<SignedPermutation> generators;
};

/// "n=5; gens=(1,5,4,2,3);(2,3,4,5)". Generators are separated by ';' and
/// written either as products of cycles with 1-based points, e.g.
/// "(1,3,4,6)(2,5)", or as signed image lists, e.g. "[-1,2,3]".
ParsedGroup parse_group(const std::string& text);

/// Hyperoctahedral for signed groups, symmetric for transitive ones, the
/// Young subgroup of the point orbits otherwise.
AmbientKind default_ambient(const Group& g);

struct AnalysisOptions {
  std::optional<AmbientKind> ambient;  ///< nullopt: default_ambient
  std::optional<std::vector<Integer>> point;
  unsigned max_degree = 0;  ///< 0: no cap
  bool verify = false;      ///< mod-p check of every prime dividing |G|
  bool symbolic = true;     ///< expand det M when the index allows it
  bool timings = false;
};

struct SecondaryRecord {
  unsigned degree = 0;
  /// (exponent vector of the orbit representative, coefficient)
  std::vector<std::pair<std::vector<unsigned>, Integer>> combination;
  std::string text;
};

struct HyperplaneRecord {
  std::string label;
  std::size_t count = 0;
  unsigned exponent = 0;
};

struct VerdictRecord {
  std::uint64_t prime = 0;
  bool is_good = true;
  unsigned swept_to = 0;
  std::optional<unsigned> witness_degree;
  std::vector<unsigned> witness_exponents;
  std::string witness;
};

struct AnalysisReport {
  std::size_t n = 0;
  Integer group_order;
  AmbientKind ambient = AmbientKind::symmetric;
  Integer ambient_order;
  std::size_t index = 0;
  std::vector<unsigned> secondary_degrees;
  unsigned goebel_bound = 0;
  std::vector<SecondaryRecord> secondaries;
  Integer deficiency;
  std::vector<std::uint64_t> bad_primes;
  int det_sign = 1;
  std::string method;
  std::vector<HyperplaneRecord> delta_exponents;
  unsigned delta_degree = 0;
  std::vector<Integer> evaluation_point;
  std::vector<std::string> identities_checked;
  std::optional<std::vector<VerdictRecord>> verification;
  std::optional<std::map<std::string, double>> timings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&);
};

bool operator==(const SecondaryRecord&, const SecondaryRecord&);
bool operator==(const HyperplaneRecord&, const HyperplaneRecord&);
bool operator==(const VerdictRecord&, const VerdictRecord&);

/// frame -> Hilbert data -> universal secondaries -> deficiency, with the
/// symbolic identity check for small index and optional mod-p verification.
AnalysisReport analyze(const ParsedGroup& input, const AnalysisOptions& options);

/// Throws an invariant error when the report contradicts itself.
void check_consistency(const AnalysisReport& report);

inline constexpr int kReportSchema = 1;

/// Pretty-printed JSON with sorted keys; integers of any size as strings.
std::string to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

std::string to_text(const AnalysisReport& report);

}  // namespace cmprime
