#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/linalg.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmprime {

/// Largest index for which det M is expanded symbolically.
inline constexpr std::size_t kSymbolicLimit = 8;

enum class DeficiencyMethod { evaluated, symbolic };

std::string to_string(DeficiencyMethod method);

struct DeficiencyReport {
  Integer deficiency;                     ///< absolute content of det M
  /// primes dividing |G| and the deficiency, ascending; for a universal set
  /// these are the bad primes
  std::vector<std::uint64_t> bad_primes;
  int det_sign = 1;  ///< det M = det_sign * deficiency * Delta(G)
  DeficiencyMethod method = DeficiencyMethod::evaluated;
  bool identity_checked = false;  ///< primitive part compared with Delta(G)
  /// evaluated: det M(z) and Delta(G)(z)
  Integer determinant_value;
  Integer discriminant_value;
  /// symbolic: the expanded determinant
  std::optional<SparsePoly> determinant;
};

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// M(theta) = [gamma_i . theta_j].
PolyMatrix build_matrix_M(const AmbientFrame& frame,
                          std::span<const SparsePoly> thetas);

/// M(theta) evaluated at z: entries theta_j(gamma_i^{-1} z).
IntMatrix build_matrix_M(const AmbientFrame& frame,
                         std::span<const SparsePoly> thetas,
                         std::span<const Integer> z);

/// Laplace expansion along rows with memoized minors over column subsets.
SparsePoly symbolic_determinant(const PolyMatrix& m);

/// det M(z) / Delta(G)(z); the division must be exact.
DeficiencyReport deficiency_evaluated(const AmbientFrame& frame,
                                      std::span<const SparsePoly> thetas,
                                      std::span<const Integer> z);

/// |det M(z) / Delta(G)(z)| for any set of secondaries, universal or not;
/// no bad-prime check.
Integer set_deficiency(const AmbientFrame& frame,
                       std::span<const SparsePoly> thetas,
                       std::span<const Integer> z);

/// Content of the expanded det M; checks primitive part = +-Delta(G).
DeficiencyReport deficiency_symbolic(const AmbientFrame& frame,
                                     std::span<const SparsePoly> thetas);

/// Prime divisors of the deficiency; each must divide the group order.
std::vector<std::uint64_t> bad_primes(const Integer& deficiency,
                                      const Integer& group_order);

/// Prime divisors of a positive integer by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace cmprime
