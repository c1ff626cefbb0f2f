#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/linalg.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmprime {

/// Product of ambient primary generators: for each block a partition whose
/// parts k stand for e_k on that block (in the squares for B_n).
struct PrimaryMonomial {
  std::vector<std::vector<unsigned>> parts;  ///< per block, descending
  unsigned degree = 0;

  std::string to_string() const;  ///< e.g. "e1^2*e3" or "e2[1]*e1[2]"
};

/// Per-frame caches for degree-wise linear algebra on invariants: the
/// orbit-sum basis of each degree, the primary monomials of each degree and
/// their coefficient tables. The frame must outlive the context. Not safe
/// for concurrent mutation; use one context per thread.
class InvariantContext {
public:
  explicit InvariantContext(const AmbientFrame& frame);

  const AmbientFrame& frame() const noexcept { return frame_; }

  /// Orbit-sum representatives of degree d, descending.
  const std::vector<Monomial>& basis(unsigned d);
  /// Row of `rep` in basis(d), or npos when it is not a representative.
  std::size_t row_of(unsigned d, Monomial rep);

  const std::vector<PrimaryMonomial>& primary_monomials(unsigned d);
  /// Coefficient of the monomial u in the expanded primary monomial.
  Integer primary_coefficient(const PrimaryMonomial& e, Monomial u);
  /// Expanded primary monomial (slow path, for checks).
  SparsePoly primary_polynomial(const PrimaryMonomial& e) const;

  /// Orbit-sum coordinates of products (primary monomial) * theta_j of
  /// degree d: one column per theta of degree <= d and per primary monomial
  /// of the complementary degree, thetas in the given order.
  IntMatrix span_matrix(std::span<const SparsePoly> thetas, unsigned d);

  /// Orbit-sum coordinates of a homogeneous invariant of degree d.
  std::vector<Integer> coordinates(const SparsePoly& f, unsigned d);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  struct Resolved {
    PrimaryMonomial monomial;
    std::vector<const std::vector<std::uint64_t>*> tables;  // per block
    std::vector<unsigned> block_degrees;  // unsquared degree per block
  };

  const std::vector<std::uint64_t>& table(std::size_t k,
                                          const std::vector<unsigned>& parts);
  const std::vector<Resolved>& resolved(unsigned d);
  /// Per-block composition ranks of u (exponents halved when squared);
  /// false when u cannot occur in any primary monomial.
  bool block_ranks(Monomial u, std::vector<unsigned>& degrees,
                   std::vector<std::uint64_t>& ranks) const;

  const AmbientFrame& frame_;
  std::map<unsigned, std::vector<Monomial>> bases_;
  std::map<unsigned, std::unordered_map<std::uint64_t, std::size_t>> rows_;
  std::map<unsigned, std::vector<Resolved>> resolved_;
  std::map<unsigned, std::vector<PrimaryMonomial>> primaries_;
  std::map<std::pair<std::size_t, std::vector<unsigned>>,
           std::vector<std::uint64_t>>
      tables_;
};

/// Leftmost pivot columns among the identity block of [S | I], i.e. the
/// orbit-sum rows completing the column space of S to everything. Selection
/// runs modulo large primes and is accepted once the pivots of S reach
/// `span_rank`, which certifies the same independence over Q; otherwise
/// exact rational elimination decides.
std::vector<std::size_t> complement_rows(const IntMatrix& s,
                                         std::size_t span_rank);

/// Partitions of d into parts <= k, each descending, in reverse lex order.
std::vector<std::vector<unsigned>> partitions(unsigned d, unsigned max_part);

}  // namespace cmprime
