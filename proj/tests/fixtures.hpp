#pragma once

#include "cmprime/error.hpp"
#include "cmprime/frame.hpp"
#include "cmprime/perm.hpp"
#include "cmprime/poly.hpp"
#include "cmprime/report.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace cmprime;

struct NamedGroup {
  std::string name;
  std::string text;
};

inline const std::string kOrder20 = "n=5; gens=(1,5,4,2,3);(2,3,4,5)";
inline const std::string kOrder36 =
    "n=6; gens=(2,3,6);(1,3,4,6)(2,5);(1,4)(3,6);(1,5,4)(2,3,6)";
inline const std::string kA3 = "n=3; gens=(1,2,3)";
inline const std::string kA4 = "n=4; gens=(1,2,3);(2,3,4)";
inline const std::string kA5 = "n=5; gens=(1,2,3);(1,2,3,4,5)";
inline const std::string kG225 = "n=5; gens=[-1,-2,3,4,5];[2,1,3,4,5];[2,3,4,5,1]";
/// rho(S_3) inside S_3 x S_2: odd permutations paired with (4,5)
inline const std::string kYoungAlt5 = "n=5; gens=(1,2,3);(1,2)(4,5)";

/// Groups whose index in the default ambient is at most 8.
inline std::vector<NamedGroup> small_index_groups() {
  return {
      {"A3", kA3},
      {"A4", kA4},
      {"A5", kA5},
      {"S4", "n=4; gens=(1,2);(1,2,3,4)"},
      {"D4", "n=4; gens=(1,2,3,4);(1,3)"},
      {"C4", "n=4; gens=(1,2,3,4)"},
      {"V4", "n=4; gens=(1,2)(3,4);(1,3)(2,4)"},
      {"order20", kOrder20},
      {"young-alt5", kYoungAlt5},
      {"C3 fixing 4", "n=4; gens=(1,2,3)"},
      {"double swap", "n=4; gens=(1,2)(3,4)"},
      {"G(2,2,3)", "n=3; gens=[-1,-2,3];[2,1,3];[2,3,1]"},
      {"G(2,2,4)", "n=4; gens=[-1,-2,3,4];[2,1,3,4];[2,3,4,1]"},
      {"G(2,2,5)", kG225},
      {"B2 rotation", "n=2; gens=[2,-1]"},
  };
}

inline Group group_of(const std::string& text) {
  ParsedGroup p = parse_group(text);
  return group_from_generators(p.n, p.generators);
}

inline AmbientFrame frame_of(const std::string& text) {
  Group g = group_of(text);
  return build_frame(g, default_ambient(g));
}

inline Monomial mono(std::vector<unsigned> e) { return Monomial(e); }

inline SparsePoly vandermonde(std::size_t n) {
  SparsePoly d = SparsePoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d = d * (SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
  return d;
}

}  // namespace fixtures
