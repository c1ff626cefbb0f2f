#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/hilbert.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/linalg.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cmprime {

/// A homogeneous invariant given as an integer combination of orbit sums.
struct Secondary {
  unsigned degree = 0;
  /// (canonical representative, coefficient), nonzero coefficients only
  std::vector<std::pair<Monomial, Integer>> combination;
  SparsePoly poly;

  /// "Z(x1^2*x2)", "2*Z(x1^3) - Z(x1^2*x2)", or "1".
  std::string to_string(std::size_t n) const;
};

/// Builds sum c * Z(m); representatives are canonicalized.
Secondary secondary_from_orbit_sums(
    const Group& group, std::vector<std::pair<Monomial, Integer>> combination);
Secondary orbit_sum_secondary(const Group& group, Monomial m);
Secondary unit_secondary(std::size_t n);

struct SecondarySet {
  std::vector<Secondary> thetas;
  std::vector<Integer> evaluation_point;
  /// [theta_j(w_i)] with w_i = gamma_i^{-1} z
  IntMatrix evaluated_matrix;
  /// |det evaluated_matrix|
  Integer mu;

  std::vector<unsigned> degrees() const;
  std::vector<SparsePoly> polys() const;
};

/// The fixed sequence (1..n), (1,2,4,..), (first n primes).
std::vector<std::vector<Integer>> default_evaluation_points(std::size_t n);

/// True when z lies on no reflecting hyperplane of the ambient group.
bool is_regular_point(const AmbientFrame& frame, std::span<const Integer> z);

/// [f_j(w_i)] for the given polynomials.
IntMatrix evaluate_matrix(const AmbientFrame& frame,
                          std::span<const SparsePoly> polys,
                          std::span<const Integer> z);

/// Orbit-sum coordinates of (primary monomial) * theta_j in degree d.
IntMatrix module_span_at_degree(InvariantContext& ctx,
                                std::span<const SparsePoly> partial,
                                unsigned d);

/// Orbit sums of degree d completing the module span of `partial` to the
/// whole degree-d invariants, chosen by leftmost pivots.
std::vector<Monomial> candidate_complement(InvariantContext& ctx,
                                           const HilbertData& hilbert,
                                           std::span<const SparsePoly> partial,
                                           unsigned d);

/// One greedy step on evaluated data: A is l x k of full column rank,
/// psi is l x r (candidate values).
struct ExtensionStep {
  std::vector<Integer> q;  ///< combination coefficients
  Integer gain;            ///< gcd of V; mu grows by this factor
  Integer mu_before;       ///< mu(A)
};

/// Empty when every candidate lies in the rational column space of A.
std::optional<ExtensionStep> extension_step(const IntMatrix& a,
                                            const IntMatrix& psi);

/// Next secondary in the integer span of the candidates minimizing mu.
Secondary extend_secondaries(const AmbientFrame& frame,
                             const SecondarySet& partial,
                             const std::vector<Monomial>& candidates);

/// Which orbit sums of degree d a new secondary may combine.
/// complement: the tau(d) sums completing the lower module span.
/// full: every orbit sum of degree d, i.e. an integral basis of the
/// degree-d invariants.
enum class CandidatePool { complement, full };

struct UniversalOptions {
  /// Use only this evaluation point instead of the default sequence.
  std::optional<std::vector<Integer>> point;
  /// Refuse groups needing secondaries above this degree (0 = no cap).
  unsigned max_degree = 0;
  CandidatePool pool = CandidatePool::full;
};

/// Greedy construction with caches shared across runs for the same frame.
class SecondaryBuilder {
public:
  SecondaryBuilder(const AmbientFrame& frame, HilbertData hilbert);

  const AmbientFrame& frame() const noexcept { return frame_; }
  const HilbertData& hilbert() const noexcept { return hilbert_; }
  InvariantContext& context() noexcept { return ctx_; }

  /// Orbit sums whose classes form a basis of the degree-d invariants
  /// modulo the part generated in lower degrees. `lower` must be a full set
  /// of secondaries of all degrees below d; the result does not depend on
  /// which such set is used.
  const std::vector<Monomial>& quotient_basis(
      unsigned d, std::span<const SparsePoly> lower);

  /// Whether the given orbit sums of degree d are independent modulo the
  /// part generated in lower degrees.
  bool independent_modulo_lower(unsigned d, std::span<const SparsePoly> lower,
                                const std::vector<Monomial>& reps);

  /// Greedy completion of a prefix holding all secondaries of its degrees;
  /// empty when the point is degenerate for this run.
  std::optional<SecondarySet> complete(
      std::vector<Secondary> prefix, const std::vector<Integer>& z,
      CandidatePool pool = CandidatePool::full);

  /// Universal secondaries, restarting along the point sequence if needed.
  SecondarySet universal(const UniversalOptions& options = {});

private:
  const std::vector<Integer>& values(Monomial rep);
  void set_point(const std::vector<Integer>& z);

  const AmbientFrame& frame_;
  HilbertData hilbert_;
  InvariantContext ctx_;
  std::map<unsigned, std::vector<Monomial>> quotient_;
  std::map<unsigned, IntMatrix> lower_span_;
  std::vector<Integer> point_;
  std::vector<std::vector<Integer>> coset_points_;
  std::unordered_map<std::uint64_t, std::vector<Integer>> values_;
};

SecondarySet universal_secondaries(const AmbientFrame& frame,
                                   const HilbertData& hilbert,
                                   const UniversalOptions& options = {});

}  // namespace cmprime
