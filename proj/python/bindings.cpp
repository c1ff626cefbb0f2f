#include "cmprime/deficiency.hpp"
#include "cmprime/error.hpp"
#include "cmprime/hilbert.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/modp.hpp"
#include "cmprime/report.hpp"
#include "cmprime/secondary.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace cmprime;

namespace {

struct Loaded {
  ParsedGroup parsed;
  Group group;
  AmbientFrame frame;
};

Loaded load(const std::string& text, const std::optional<std::string>& ambient) {
  Loaded l;
  l.parsed = parse_group(text);
  l.group = group_from_generators(l.parsed.n, l.parsed.generators);
  AmbientKind kind = ambient && *ambient != "auto" ? ambient_from_string(*ambient)
                                                    : default_ambient(l.group);
  l.frame = build_frame(l.group, kind);
  return l;
}

std::optional<std::vector<Integer>> to_point(
    const std::optional<std::vector<long>>& point) {
  if (!point) return std::nullopt;
  return std::vector<Integer>(point->begin(), point->end());
}

std::string analyze_json(const std::string& text, const std::optional<std::string>& ambient,
                         const std::optional<std::vector<long>>& point, bool verify,
                         unsigned max_degree) {
  AnalysisOptions o;
  if (ambient && *ambient != "auto") o.ambient = ambient_from_string(*ambient);
  o.point = to_point(point);
  o.verify = verify;
  o.max_degree = max_degree;
  return to_json(analyze(parse_group(text), o));
}

std::vector<unsigned> secondary_degree_list(const std::string& text,
                                            const std::optional<std::string>& ambient) {
  Loaded l = load(text, ambient);
  return secondary_degrees(l.frame).degrees;
}

std::string verify_json(const std::string& text, std::uint64_t p,
                        const std::optional<std::string>& ambient) {
  Loaded l = load(text, ambient);
  HilbertData h = secondary_degrees(l.frame);
  SecondarySet set = universal_secondaries(l.frame, h);
  std::vector<SparsePoly> polys = set.polys();
  InvariantContext ctx(l.frame);
  ModPVerdict v = is_good_prime(ctx, polys, p);
  nlohmann::json j = {{"prime", p}, {"is_good", v.is_good}, {"swept_to", v.swept_to}};
  if (v.witness)
    j["witness"] = {{"degree", v.witness->degree},
                    {"orbit_sum", orbit_sum_label(v.witness->rep, l.parsed.n)}};
  return j.dump();
}

std::string oracle_json(const std::string& text, const std::optional<std::string>& ambient) {
  Loaded l = load(text, ambient);
  HilbertData h = secondary_degrees(l.frame);
  SecondarySet set = universal_secondaries(l.frame, h);
  std::vector<SparsePoly> polys = set.polys();
  DeficiencyReport ev = deficiency_evaluated(l.frame, polys, set.evaluation_point);
  DeficiencyReport sy = deficiency_symbolic(l.frame, polys);
  nlohmann::json j = {{"evaluated", ev.deficiency.get_str()},
                      {"symbolic", sy.deficiency.get_str()},
                      {"det_sign", sy.det_sign},
                      {"identity_checked", sy.identity_checked}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deficiency and bad primes of permutation group invariants";
  py::register_exception<Error>(m, "CmprimeError");
  m.def("analyze_json", &analyze_json, py::arg("group"), py::arg("ambient") = py::none(),
        py::arg("point") = py::none(), py::arg("verify") = false,
        py::arg("max_degree") = 0u);
  m.def("secondary_degrees", &secondary_degree_list, py::arg("group"),
        py::arg("ambient") = py::none());
  m.def("verify_json", &verify_json, py::arg("group"), py::arg("prime"),
        py::arg("ambient") = py::none());
  m.def("oracle_json", &oracle_json, py::arg("group"), py::arg("ambient") = py::none());
  m.def("roundtrip_json", [](const std::string& s) { return to_json(report_from_json(s)); },
        py::arg("report"));
}
