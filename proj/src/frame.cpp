#include "cmprime/frame.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cmprime {

std::string to_string(AmbientKind kind) {
  switch (kind) {
    case AmbientKind::symmetric: return "sym";
    case AmbientKind::young: return "young";
    case AmbientKind::hyperoctahedral: return "hyperoctahedral";
  }
  return "?";
}

AmbientKind ambient_from_string(const std::string& s) {
  if (s == "sym" || s == "symmetric") return AmbientKind::symmetric;
  if (s == "young") return AmbientKind::young;
  if (s == "hyperoctahedral" || s == "B") return AmbientKind::hyperoctahedral;
  fail(ErrorCode::parse, "unknown ambient '" + s + "'");
}

Integer LinearForm::evaluate(std::span<const Integer> z) const {
  Integer v = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i]) v += coefficients[i] * z[i];
  return v;
}

SparsePoly LinearForm::to_poly() const {
  const std::size_t n = coefficients.size();
  SparsePoly p(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coefficients[i]) p += SparsePoly::variable(n, i) * Integer(coefficients[i]);
  return p;
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    int c = coefficients[i];
    if (!c) continue;
    if (!first || c < 0) os << (c < 0 ? '-' : '+');
    if (std::abs(c) != 1) os << std::abs(c) << '*';
    os << 'x' << i + 1;
    first = false;
  }
  return os.str();
}

LinearForm LinearForm::transformed(const SignedPermutation& sigma) const {
  LinearForm out;
  out.coefficients.assign(coefficients.size(), 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.coefficients[sigma.image(i)] += coefficients[i] * sigma.sign(i);
  auto lead = std::find_if(out.coefficients.begin(), out.coefficients.end(),
                           [](int c) { return c != 0; });
  if (lead != out.coefficients.end() && *lead < 0)
    for (int& c : out.coefficients) c = -c;
  return out;
}

std::string HyperplaneOrbit::label() const {
  std::string base;
  switch (kind) {
    case ReflectionKind::transposition: base = "x_i-x_j"; break;
    case ReflectionKind::signed_transposition: base = "x_i+x_j"; break;
    case ReflectionKind::diagonal: base = "x_i"; break;
    case ReflectionKind::none: base = "?"; break;
  }
  return block == 0 ? base : base + "@block" + std::to_string(block + 1);
}

std::size_t AmbientFrame::coset_of(const SignedPermutation& s) const {
  auto it = coset_index_.find(s.key());
  require(it != coset_index_.end(), ErrorCode::domain,
          "element " + s.to_string() + " is not in the ambient group");
  return it->second;
}

std::vector<std::size_t> AmbientFrame::coset_action(
    const SignedPermutation& s) const {
  std::vector<std::size_t> act(coset_reps_.size());
  for (std::size_t i = 0; i < coset_reps_.size(); ++i)
    act[i] = coset_of(s * coset_reps_[i]);
  return act;
}

std::vector<unsigned> AmbientFrame::primary_degrees() const {
  std::vector<unsigned> d;
  for (const auto& p : primaries_) d.push_back(p.degree());
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

LinearForm hyperplane_of(const SignedPermutation& r) {
  const std::size_t n = r.rank();
  LinearForm f;
  f.coefficients.assign(n, 0);
  switch (r.reflection_kind()) {
    case ReflectionKind::diagonal:
      for (std::size_t i = 0; i < n; ++i)
        if (r.sign(i) < 0) f.coefficients[i] = 1;
      break;
    case ReflectionKind::transposition:
    case ReflectionKind::signed_transposition: {
      std::size_t i = 0;
      while (r.image(i) == i) ++i;
      std::size_t j = r.image(i);
      f.coefficients[i] = 1;
      f.coefficients[j] =
          r.reflection_kind() == ReflectionKind::transposition ? -1 : 1;
      break;
    }
    case ReflectionKind::none:
      fail(ErrorCode::invariant, "not a reflection: " + r.to_string());
  }
  return f;
}

unsigned exponent_for(const AmbientFrame& frame, const SignedPermutation& g,
                      std::size_t c) {
  auto type = cycle_type_on_set(frame.coset_action(g));
  unsigned twice = 0;
  for (auto [len, count] : type)
    if (len >= 2) twice += static_cast<unsigned>(c * count * (len - 1));
  require(twice % 2 == 0, ErrorCode::invariant, "non-integral exponent");
  return twice / 2;
}

}  // namespace

AmbientFrame build_frame(const Group& g, AmbientKind kind) {
  const std::size_t n = g.rank();
  AmbientFrame f;
  f.kind_ = kind;
  f.subgroup_ = g;
  switch (kind) {
    case AmbientKind::symmetric: {
      require(!g.is_signed(), ErrorCode::domain,
              "a signed group is not contained in the symmetric group");
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      f.blocks_ = {all};
      f.sigma_ = symmetric_group(n);
      break;
    }
    case AmbientKind::young:
      require(!g.is_signed(), ErrorCode::domain,
              "a signed group is not contained in a Young subgroup");
      f.blocks_ = g.point_orbits();
      f.sigma_ = young_group(n, f.blocks_);
      break;
    case AmbientKind::hyperoctahedral: {
      require(n <= kMaxSignedRank, ErrorCode::unsupported,
              "hyperoctahedral ambient supported up to rank " +
                  std::to_string(kMaxSignedRank));
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      f.blocks_ = {all};
      f.sigma_ = hyperoctahedral_group(n);
      break;
    }
  }
  for (const auto& s : g.generators())
    require(f.sigma_.contains(s), ErrorCode::domain,
            "generator " + s.to_string() + " is not in the ambient group");
  require(f.sigma_.order() % g.order() == 0, ErrorCode::invariant,
          "subgroup order does not divide the ambient order");

  // Elements are visited in canonical order, so the first unassigned one is
  // the minimal member of its coset and the identity comes first.
  for (const auto& s : f.sigma_.elements()) {
    if (f.coset_index_.count(s.key())) continue;
    std::size_t idx = f.coset_reps_.size();
    f.coset_reps_.push_back(s);
    for (const auto& h : g.elements()) f.coset_index_.emplace((s * h).key(), idx);
  }
  require(f.coset_reps_.size() * g.order() == f.sigma_.order(),
          ErrorCode::invariant, "cosets do not partition the ambient group");
  require(f.coset_reps_.front().is_identity(), ErrorCode::invariant,
          "first coset representative is not the identity");

  // Hyperplanes: one per reflection of Sigma (all stabilizers have order 2).
  std::vector<LinearForm> forms;
  std::vector<SignedPermutation> gens;
  for (const auto& s : f.sigma_.elements()) {
    if (s.reflection_kind() == ReflectionKind::none) continue;
    require((s * s).is_identity(), ErrorCode::invariant,
            "reflection of order other than 2");
    forms.push_back(hyperplane_of(s));
    gens.push_back(s);
  }
  // Sigma-orbits on hyperplanes via union-find over generator images.
  std::vector<std::size_t> root(forms.size());
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& sg : f.sigma_.generators())
    for (std::size_t i = 0; i < forms.size(); ++i) {
      LinearForm image = forms[i].transformed(sg);
      auto it = std::find(forms.begin(), forms.end(), image);
      require(it != forms.end(), ErrorCode::invariant,
              "ambient group does not permute its hyperplanes");
      std::size_t a = find(i), b = find(static_cast<std::size_t>(it - forms.begin()));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::pair<std::size_t, int>, std::size_t> slot;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto key = std::make_pair(find(i), static_cast<int>(gens[i].reflection_kind()));
    auto [it, inserted] = slot.emplace(key, f.hyperplanes_.size());
    if (inserted) {
      HyperplaneOrbit h;
      h.kind = gens[i].reflection_kind();
      std::size_t point = 0;
      while (forms[i].coefficients[point] == 0) ++point;
      for (std::size_t b = 0; b < f.blocks_.size(); ++b)
        if (std::find(f.blocks_[b].begin(), f.blocks_[b].end(), point) !=
            f.blocks_[b].end())
          h.block = kind == AmbientKind::young ? b : 0;
      f.hyperplanes_.push_back(std::move(h));
    }
    f.hyperplanes_[it->second].forms.push_back(forms[i]);
    f.hyperplanes_[it->second].generators.push_back(gens[i]);
  }
  for (auto& h : f.hyperplanes_) {
    h.exponent = exponent_for(f, h.generators.front(), h.cyclic_order);
    for (const auto& gp : h.generators)
      require(exponent_for(f, gp, h.cyclic_order) == h.exponent,
              ErrorCode::invariant,
              "discriminant exponent differs within a hyperplane orbit");
  }
  std::stable_sort(f.hyperplanes_.begin(), f.hyperplanes_.end(),
                   [](const HyperplaneOrbit& a, const HyperplaneOrbit& b) {
                     if (a.block != b.block) return a.block < b.block;
                     return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                   });

  for (std::size_t b = 0; b < f.blocks_.size(); ++b)
    for (std::size_t k = 1; k <= f.blocks_[b].size(); ++k)
      f.primaries_.push_back({b, k, kind == AmbientKind::hyperoctahedral});

  f.refl_sigma_ = count_reflections(f.sigma_);
  f.refl_g_ = count_reflections(g);
  return f;
}

const std::vector<HyperplaneOrbit>& discriminant_exponents(
    const AmbientFrame& frame) {
  return frame.hyperplane_orbits();
}

unsigned discriminant_degree(const AmbientFrame& frame) {
  unsigned d = 0;
  for (const auto& h : frame.hyperplane_orbits())
    d += h.exponent * static_cast<unsigned>(h.forms.size());
  return d;
}

SparsePoly g_discriminant(const AmbientFrame& frame) {
  const std::size_t n = frame.rank();
  const unsigned deg = discriminant_degree(frame);
  // bound on the number of monomials of that degree
  Integer monomials;
  mpz_bin_uiui(monomials.get_mpz_t(), deg + n - 1, n - 1);
  require(monomials <= 2000000, ErrorCode::unsupported,
          "discriminant of degree " + std::to_string(deg) +
              " is too large to expand");
  SparsePoly delta = SparsePoly::constant(n, 1);
  for (const auto& h : frame.hyperplane_orbits()) {
    if (h.exponent == 0) continue;
    SparsePoly lambda = SparsePoly::constant(n, 1);
    for (const auto& form : h.forms) lambda = lambda * form.to_poly();
    delta = delta * lambda.pow(h.exponent);
  }
  return delta;
}

Integer discriminant_value(const AmbientFrame& frame,
                           std::span<const Integer> z) {
  require(z.size() == frame.rank(), ErrorCode::domain,
          "evaluation point has the wrong length");
  Integer v = 1, p;
  for (const auto& h : frame.hyperplane_orbits()) {
    if (h.exponent == 0) continue;
    for (const auto& form : h.forms) {
      Integer l = form.evaluate(z);
      mpz_pow_ui(p.get_mpz_t(), l.get_mpz_t(), h.exponent);
      v *= p;
    }
  }
  return v;
}

std::string discriminant_to_string(const AmbientFrame& frame) {
  std::ostringstream os;
  bool first = true;
  for (const auto& h : frame.hyperplane_orbits()) {
    if (h.exponent == 0) continue;
    for (const auto& form : h.forms) {
      if (!first) os << '*';
      bool simple = std::count_if(form.coefficients.begin(),
                                  form.coefficients.end(),
                                  [](int c) { return c != 0; }) == 1;
      if (simple)
        os << form.to_string();
      else
        os << '(' << form.to_string() << ')';
      if (h.exponent > 1) os << '^' << h.exponent;
      first = false;
    }
  }
  if (first) os << '1';
  return os.str();
}

std::vector<Integer> act_inverse(const SignedPermutation& g,
                                 std::span<const Integer> z) {
  std::vector<Integer> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    w[i] = z[g.image(i)];
    if (g.sign(i) < 0) w[i] = -w[i];
  }
  return w;
}

std::vector<std::vector<Integer>> coset_points(const AmbientFrame& frame,
                                               std::span<const Integer> z) {
  std::vector<std::vector<Integer>> w;
  for (const auto& gamma : frame.coset_reps()) w.push_back(act_inverse(gamma, z));
  return w;
}

DeltaDegreeCheck delta_degree_check(const AmbientFrame& frame) {
  DeltaDegreeCheck c;
  c.degree = discriminant_degree(frame);
  c.index = frame.index();
  c.reflections_sigma = frame.reflections_in_sigma();
  c.reflections_subgroup = frame.reflections_in_subgroup();
  c.holds = 2 * static_cast<std::size_t>(c.degree) ==
            c.index * (c.reflections_sigma - c.reflections_subgroup);
  return c;
}

std::size_t reflection_count_from_cosets(const AmbientFrame& frame) {
  const std::size_t ell = frame.index();
  long long scaled = 0;  // ell * |R(G)|
  for (const auto& h : frame.hyperplane_orbits())
    for (const auto& gp : h.generators) {
      std::size_t cycles = 0;
      for (auto [len, count] : cycle_type_on_set(frame.coset_action(gp)))
        cycles += count;
      scaled += static_cast<long long>(h.cyclic_order * cycles) -
                static_cast<long long>(ell);
    }
  require(scaled % static_cast<long long>(ell) == 0, ErrorCode::invariant,
          "coset reflection count is not integral");
  return static_cast<std::size_t>(scaled / static_cast<long long>(ell));
}

}  // namespace cmprime
