#include "cmprime/secondary.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <sstream>

namespace cmprime {

std::string Secondary::to_string(std::size_t n) const {
  if (combination.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rep, c] : combination) {
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag << '*';
    if (rep == Monomial{} && combination.size() == 1 && mag == 1)
      os << '1';
    else
      os << orbit_sum_label(rep, n);
    first = false;
  }
  return os.str();
}

Secondary secondary_from_orbit_sums(
    const Group& group, std::vector<std::pair<Monomial, Integer>> combination) {
  const std::size_t n = group.rank();
  std::map<Monomial, Integer> merged;
  std::optional<unsigned> degree;
  for (auto& [m, c] : combination) {
    if (c == 0) continue;
    require(!degree || *degree == m.degree(), ErrorCode::domain,
            "orbit sums of mixed degree");
    degree = m.degree();
    MonomialOrbit orbit = monomial_orbit(group, m);
    if (orbit.vanishes) continue;
    // Z(m) = s * Z(rep) where rep = s' g.m with sign s relative to m
    int sign = 1;
    for (const auto& t : orbit.members)
      if (t.monomial == orbit.representative) sign = t.sign;
    merged[orbit.representative] += sign > 0 ? c : Integer(-c);
  }
  Secondary s;
  s.degree = degree.value_or(0);
  s.poly = SparsePoly(n);
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second == 0) continue;
    s.combination.emplace_back(it->first, it->second);
    SparsePoly z = orbit_sum(group, it->first);
    s.poly += z * it->second;
  }
  return s;
}

Secondary orbit_sum_secondary(const Group& group, Monomial m) {
  return secondary_from_orbit_sums(group, {{m, Integer(1)}});
}

Secondary unit_secondary(std::size_t n) {
  Secondary s;
  s.degree = 0;
  s.combination.emplace_back(Monomial{}, Integer(1));
  s.poly = SparsePoly::constant(n, 1);
  return s;
}

std::vector<unsigned> SecondarySet::degrees() const {
  std::vector<unsigned> d;
  for (const auto& t : thetas) d.push_back(t.degree);
  return d;
}

std::vector<SparsePoly> SecondarySet::polys() const {
  std::vector<SparsePoly> p;
  for (const auto& t : thetas) p.push_back(t.poly);
  return p;
}

std::vector<std::vector<Integer>> default_evaluation_points(std::size_t n) {
  std::vector<std::vector<Integer>> pts(3);
  Integer candidate = 2;
  for (std::size_t i = 0; i < n; ++i) {
    pts[0].emplace_back(static_cast<unsigned long>(i + 1));
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, i);
    pts[1].push_back(pow2);
    pts[2].push_back(candidate);
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
  }
  return pts;
}

bool is_regular_point(const AmbientFrame& frame, std::span<const Integer> z) {
  if (z.size() != frame.rank()) return false;
  for (const auto& h : frame.hyperplane_orbits())
    for (const auto& form : h.forms)
      if (form.evaluate(z) == 0) return false;
  return true;
}

IntMatrix evaluate_matrix(const AmbientFrame& frame,
                          std::span<const SparsePoly> polys,
                          std::span<const Integer> z) {
  auto w = coset_points(frame, z);
  IntMatrix a(w.size(), polys.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j) a(i, j) = evaluate(polys[j], w[i]);
  return a;
}

IntMatrix module_span_at_degree(InvariantContext& ctx,
                                std::span<const SparsePoly> partial,
                                unsigned d) {
  return ctx.span_matrix(partial, d);
}

std::vector<Monomial> candidate_complement(InvariantContext& ctx,
                                           const HilbertData& hilbert,
                                           std::span<const SparsePoly> partial,
                                           unsigned d) {
  IntMatrix s = ctx.span_matrix(partial, d);
  const auto& reps = ctx.basis(d);
  std::size_t at_degree = 0;
  for (const auto& f : partial)
    if (f.degree() == d && !f.is_zero()) ++at_degree;
  auto tau = hilbert.tau.count(d) ? hilbert.tau.at(d) : std::size_t{0};
  require(at_degree <= tau, ErrorCode::domain,
          "more partial secondaries in degree " + std::to_string(d) +
              " than the Hilbert series allows");
  // The partial set is part of a free basis, so its products are independent.
  auto rows = complement_rows(s, s.cols());
  require(rows.size() == tau - at_degree, ErrorCode::invariant,
          "complement in degree " + std::to_string(d) + " has size " +
              std::to_string(rows.size()) + ", expected " +
              std::to_string(tau - at_degree));
  std::vector<Monomial> out;
  for (std::size_t r : rows) out.push_back(reps[r]);
  return out;
}

std::optional<ExtensionStep> extension_step(const IntMatrix& a,
                                            const IntMatrix& psi) {
  const std::size_t ell = a.rows(), k = a.cols();
  require(psi.rows() == ell && psi.cols() >= 1, ErrorCode::domain,
          "candidate matrix has the wrong shape");
  require(k < ell, ErrorCode::domain, "evaluated matrix is already square");
  SNFResult snf = smith_normal_form(a);
  ExtensionStep step;
  step.mu_before = 1;
  for (std::size_t i = 0; i < k; ++i) {
    require(snf.divisors[i] != 0, ErrorCode::invariant,
            "evaluated matrix lost column rank");
    step.mu_before *= snf.divisors[i];
  }
  IntMatrix v = (snf.P * psi).row_block(k, ell - k);
  bool zero = true;
  for (std::size_t i = 0; i < v.rows() && zero; ++i)
    for (std::size_t j = 0; j < v.cols() && zero; ++j) zero = v(i, j) == 0;
  if (zero) return std::nullopt;
  SNFResult inner = smith_normal_form(v);
  step.gain = inner.divisors[0];
  for (std::size_t s = 0; s < psi.cols(); ++s) step.q.push_back(inner.Q(s, 0));
  return step;
}

Secondary extend_secondaries(const AmbientFrame& frame,
                             const SecondarySet& partial,
                             const std::vector<Monomial>& candidates) {
  const Group& g = frame.subgroup();
  std::vector<SparsePoly> cand;
  for (Monomial m : candidates) cand.push_back(orbit_sum(g, m));
  IntMatrix psi = evaluate_matrix(frame, cand, partial.evaluation_point);
  auto step = extension_step(partial.evaluated_matrix, psi);
  require(step.has_value(), ErrorCode::invariant,
          "candidates vanish modulo the evaluated span; degenerate point");
  std::vector<std::pair<Monomial, Integer>> comb;
  for (std::size_t s = 0; s < candidates.size(); ++s)
    comb.emplace_back(candidates[s], step->q[s]);
  return secondary_from_orbit_sums(g, std::move(comb));
}

SecondaryBuilder::SecondaryBuilder(const AmbientFrame& frame,
                                   HilbertData hilbert)
    : frame_(frame), hilbert_(std::move(hilbert)), ctx_(frame) {}

const std::vector<Monomial>& SecondaryBuilder::quotient_basis(
    unsigned d, std::span<const SparsePoly> lower) {
  auto it = quotient_.find(d);
  if (it != quotient_.end()) return it->second;
  for (const auto& f : lower)
    require(f.degree() < d, ErrorCode::domain,
            "lower secondaries must have degree below " + std::to_string(d));
  IntMatrix s = ctx_.span_matrix(lower, d);
  const auto& reps = ctx_.basis(d);
  const std::size_t tau = hilbert_.tau.count(d) ? hilbert_.tau.at(d) : 0;
  require(s.cols() + tau == reps.size(), ErrorCode::invariant,
          "module span in degree " + std::to_string(d) +
              " has the wrong number of generators");
  auto rows = complement_rows(s, s.cols());
  require(rows.size() == tau, ErrorCode::invariant,
          "quotient in degree " + std::to_string(d) + " has the wrong size");
  std::vector<Monomial> out;
  for (std::size_t r : rows) out.push_back(reps[r]);
  lower_span_.emplace(d, std::move(s));
  return quotient_[d] = std::move(out);
}

bool SecondaryBuilder::independent_modulo_lower(
    unsigned d, std::span<const SparsePoly> lower,
    const std::vector<Monomial>& reps) {
  quotient_basis(d, lower);
  const IntMatrix& s = lower_span_.at(d);
  IntMatrix extra(s.rows(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    std::size_t r = ctx_.row_of(d, reps[j]);
    require(r != InvariantContext::npos, ErrorCode::domain,
            "not an orbit-sum representative of degree " + std::to_string(d));
    extra(r, j) = 1;
  }
  IntMatrix both = s.cols() ? s.hconcat(extra) : extra;
  const std::size_t want = s.cols() + reps.size();
  if (modular_rank(both, kLargePrime) == want) return true;
  return rational_rank(to_rational(both)) == want;
}

void SecondaryBuilder::set_point(const std::vector<Integer>& z) {
  if (z == point_) return;
  require(is_regular_point(frame_, z), ErrorCode::domain,
          "evaluation point lies on a reflecting hyperplane");
  point_ = z;
  coset_points_ = coset_points(frame_, z);
  values_.clear();
}

const std::vector<Integer>& SecondaryBuilder::values(Monomial rep) {
  auto it = values_.find(rep.bits());
  if (it != values_.end()) return it->second;
  SparsePoly z = orbit_sum(frame_.subgroup(), rep);
  std::vector<Integer> v;
  for (const auto& w : coset_points_) v.push_back(evaluate(z, w));
  return values_[rep.bits()] = std::move(v);
}

std::optional<SecondarySet> SecondaryBuilder::complete(
    std::vector<Secondary> prefix, const std::vector<Integer>& z,
    CandidatePool pool) {
  set_point(z);
  const std::size_t ell = frame_.index();
  require(!prefix.empty() && prefix.front().degree == 0, ErrorCode::domain,
          "prefix must start with the constant secondary");
  std::map<unsigned, std::size_t> count;
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    require(j == 0 || prefix[j - 1].degree <= prefix[j].degree,
            ErrorCode::domain, "prefix degrees must be nondecreasing");
    ++count[prefix[j].degree];
  }
  const unsigned last = prefix.back().degree;
  for (const auto& [d, t] : hilbert_.tau)
    if (d <= last)
      require(count[d] == t, ErrorCode::domain,
              "prefix must hold all secondaries of degree " + std::to_string(d));

  SecondarySet out;
  out.evaluation_point = z;
  std::vector<SparsePoly> polys;
  for (const auto& t : prefix) polys.push_back(t.poly);
  IntMatrix a = evaluate_matrix(frame_, polys, z);
  out.thetas = std::move(prefix);
  std::optional<Integer> expected_mu;

  for (const auto& [d, tau] : hilbert_.tau) {
    if (d <= last) continue;
    const bool full = pool == CandidatePool::full;
    const std::vector<Monomial> psi =
        full ? ctx_.basis(d) : quotient_basis(d, polys);
    // complement pool: chosen secondaries of this degree over psi
    std::vector<std::vector<Integer>> chosen;
    for (std::size_t step = 0; step < tau; ++step) {
      std::vector<std::size_t> cand;
      if (full || chosen.empty()) {
        for (std::size_t s = 0; s < psi.size(); ++s) cand.push_back(s);
      } else {
        RatMatrix c(tau, chosen.size() + tau);
        for (std::size_t j = 0; j < chosen.size(); ++j)
          for (std::size_t s = 0; s < tau; ++s) c(s, j) = chosen[j][s];
        for (std::size_t s = 0; s < tau; ++s) c(s, chosen.size() + s) = 1;
        for (std::size_t col : rational_column_select(c, tau))
          if (col >= chosen.size()) cand.push_back(col - chosen.size());
        require(cand.size() == tau - step, ErrorCode::invariant,
                "candidate count mismatch in degree " + std::to_string(d));
      }
      IntMatrix vals(ell, cand.size());
      for (std::size_t s = 0; s < cand.size(); ++s) {
        const auto& v = values(psi[cand[s]]);
        for (std::size_t i = 0; i < ell; ++i) vals(i, s) = v[i];
      }
      auto ext = extension_step(a, vals);
      if (!ext) return std::nullopt;
      if (expected_mu)
        require(*expected_mu == ext->mu_before, ErrorCode::invariant,
                "greedy step changed mu unexpectedly");
      expected_mu = ext->mu_before * ext->gain;

      std::vector<Integer> coords(psi.size(), 0);
      std::vector<std::pair<Monomial, Integer>> comb;
      IntMatrix column(ell, 1);
      for (std::size_t s = 0; s < cand.size(); ++s) {
        coords[cand[s]] = ext->q[s];
        comb.emplace_back(psi[cand[s]], ext->q[s]);
        for (std::size_t i = 0; i < ell; ++i) column(i, 0) += vals(i, s) * ext->q[s];
      }
      chosen.push_back(std::move(coords));
      Secondary theta = secondary_from_orbit_sums(frame_.subgroup(), std::move(comb));
      theta.degree = d;
      polys.push_back(theta.poly);
      out.thetas.push_back(std::move(theta));
      a = a.hconcat(column);
    }
  }
  require(out.thetas.size() == ell, ErrorCode::invariant,
          "constructed the wrong number of secondaries");
  out.mu = abs(fraction_free_determinant(a));
  require(out.mu != 0, ErrorCode::invariant, "evaluated matrix is singular");
  if (expected_mu)
    require(out.mu == *expected_mu, ErrorCode::invariant,
            "final determinant disagrees with the greedy bookkeeping");
  out.evaluated_matrix = std::move(a);
  return out;
}

SecondarySet SecondaryBuilder::universal(const UniversalOptions& options) {
  if (options.max_degree)
    require(hilbert_.degrees.back() <= options.max_degree,
            ErrorCode::unsupported,
            "secondaries up to degree " +
                std::to_string(hilbert_.degrees.back()) +
                " exceed the degree cap");
  std::vector<std::vector<Integer>> points =
      options.point ? std::vector<std::vector<Integer>>{*options.point}
                    : default_evaluation_points(frame_.rank());
  for (const auto& z : points) {
    require(z.size() == frame_.rank(), ErrorCode::domain,
            "evaluation point has the wrong length");
    if (!is_regular_point(frame_, z)) {
      require(!options.point.has_value(), ErrorCode::domain,
              "evaluation point lies on a reflecting hyperplane");
      continue;
    }
    auto set = complete({unit_secondary(frame_.rank())}, z, options.pool);
    if (set) return std::move(*set);
  }
  fail(ErrorCode::invariant,
       "every evaluation point was degenerate for the greedy construction");
}

SecondarySet universal_secondaries(const AmbientFrame& frame,
                                   const HilbertData& hilbert,
                                   const UniversalOptions& options) {
  SecondaryBuilder builder(frame, hilbert);
  return builder.universal(options);
}

}  // namespace cmprime
