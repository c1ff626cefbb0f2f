#pragma once

#include "cmprime/integer.hpp"
#include "cmprime/perm.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmprime {

enum class AmbientKind { symmetric, young, hyperoctahedral };

std::string to_string(AmbientKind kind);
AmbientKind ambient_from_string(const std::string& s);

/// Primitive integer linear form, first nonzero coefficient positive.
struct LinearForm {
  std::vector<int> coefficients;

  Integer evaluate(std::span<const Integer> z) const;
  SparsePoly to_poly() const;
  std::string to_string() const;
  /// sigma . L, renormalized to the sign convention.
  LinearForm transformed(const SignedPermutation& sigma) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Reflecting hyperplanes of one kind inside one ambient orbit, together
/// with the discriminant exponent e(G, orbit).
struct HyperplaneOrbit {
  ReflectionKind kind = ReflectionKind::transposition;
  /// Index of the Young block holding these hyperplanes (0 otherwise).
  std::size_t block = 0;
  std::vector<LinearForm> forms;
  /// Reflections g_P generating the pointwise stabilizers, aligned with forms.
  std::vector<SignedPermutation> generators;
  std::size_t cyclic_order = 2;
  unsigned exponent = 0;

  std::string label() const;
};

/// One algebra generator of the ambient invariants: e_k on a block of
/// variables, in x_i or in x_i^2.
struct PrimaryGenerator {
  std::size_t block = 0;
  std::size_t k = 1;
  bool squared = false;
  unsigned degree() const { return squared ? 2 * static_cast<unsigned>(k)
                                           : static_cast<unsigned>(k); }
};

/// The ambient reflection group Sigma, the subgroup G, left coset
/// representatives and hyperplane data. Immutable after construction.
class AmbientFrame {
public:
  AmbientKind kind() const noexcept { return kind_; }
  const Group& sigma() const noexcept { return sigma_; }
  const Group& subgroup() const noexcept { return subgroup_; }
  std::size_t rank() const noexcept { return subgroup_.rank(); }
  /// Blocks of variables permuted by Sigma; one block unless Young.
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }
  bool squared_primaries() const noexcept {
    return kind_ == AmbientKind::hyperoctahedral;
  }

  /// gamma_1 = identity, each the canonical-minimal member of its coset.
  const std::vector<SignedPermutation>& coset_reps() const noexcept {
    return coset_reps_;
  }
  std::size_t index() const noexcept { return coset_reps_.size(); }
  /// Which left coset gamma_i G contains s.
  std::size_t coset_of(const SignedPermutation& s) const;
  /// Permutation of the cosets induced by left multiplication.
  std::vector<std::size_t> coset_action(const SignedPermutation& s) const;

  const std::vector<HyperplaneOrbit>& hyperplane_orbits() const noexcept {
    return hyperplanes_;
  }
  const std::vector<PrimaryGenerator>& primary_generators() const noexcept {
    return primaries_;
  }
  /// Degrees of the primary generators, ascending.
  std::vector<unsigned> primary_degrees() const;

  std::size_t reflections_in_sigma() const noexcept { return refl_sigma_; }
  std::size_t reflections_in_subgroup() const noexcept { return refl_g_; }

  friend AmbientFrame build_frame(const Group& g, AmbientKind kind);

private:
  AmbientKind kind_ = AmbientKind::symmetric;
  Group sigma_;
  Group subgroup_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<SignedPermutation> coset_reps_;
  std::unordered_map<std::uint64_t, std::size_t> coset_index_;
  std::vector<HyperplaneOrbit> hyperplanes_;
  std::vector<PrimaryGenerator> primaries_;
  std::size_t refl_sigma_ = 0;
  std::size_t refl_g_ = 0;
};

/// Builds the frame of G inside the requested ambient. For `young`, Sigma is
/// the stabilizer of the orbit partition of G on points.
AmbientFrame build_frame(const Group& g, AmbientKind kind);

/// Hyperplane orbits with their exponents e(G, orbit).
const std::vector<HyperplaneOrbit>& discriminant_exponents(
    const AmbientFrame& frame);

/// deg Delta(G) = sum over hyperplanes of e(G, P).
unsigned discriminant_degree(const AmbientFrame& frame);

/// Delta(G) = prod_P L_P^{e(G,P)} expanded; refuses very large expansions.
SparsePoly g_discriminant(const AmbientFrame& frame);

/// Delta(G)(z) computed from the factored form.
Integer discriminant_value(const AmbientFrame& frame,
                           std::span<const Integer> z);

/// Factored rendering, e.g. "(x1-x2)^3*(x1-x3)^3*...".
std::string discriminant_to_string(const AmbientFrame& frame);

/// g^{-1} z, using (g^{-1} z)_i = sign(i) * z_{g(i)}.
std::vector<Integer> act_inverse(const SignedPermutation& g,
                                 std::span<const Integer> z);

/// w_i = gamma_i^{-1} z for each coset representative.
std::vector<std::vector<Integer>> coset_points(const AmbientFrame& frame,
                                               std::span<const Integer> z);

struct DeltaDegreeCheck {
  unsigned degree = 0;  ///< from the exponents
  std::size_t index = 0;
  std::size_t reflections_sigma = 0;
  std::size_t reflections_subgroup = 0;
  bool holds = false;  ///< 2 deg = index * (|R(Sigma)| - |R(G)|)
};

DeltaDegreeCheck delta_degree_check(const AmbientFrame& frame);

/// |R(G)| recomputed from coset cycle counts of the hyperplane generators:
/// sum_P (|C_P| * #cycles(g_P) / index - 1).
std::size_t reflection_count_from_cosets(const AmbientFrame& frame);

}  // namespace cmprime
