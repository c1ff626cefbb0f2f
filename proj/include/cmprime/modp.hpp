#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cmprime {

/// An orbit sum of the given degree whose class is outside the module image.
struct ModPWitness {
  unsigned degree = 0;
  Monomial rep;
};

struct Surjectivity {
  bool surjective = true;
  std::size_t rank = 0;       ///< rank of the image over F_p
  std::size_t dimension = 0;  ///< dim of the degree-d invariants
  std::optional<Monomial> witness;
};

struct ModPVerdict {
  std::uint64_t prime = 0;
  bool is_good = true;
  unsigned swept_to = 0;  ///< degrees 0..swept_to were checked
  std::optional<ModPWitness> witness;
};

bool is_prime(std::uint64_t p);

/// Largest degree the good-prime sweep must cover: sum of (d_i - 1) over the
/// primary degrees, which bounds the module generators of the invariants
/// over the primary invariants in every characteristic. Equals C(n,2) for
/// S_n. Never below the top secondary degree of `thetas`.
unsigned sweep_bound(const AmbientFrame& frame,
                     std::span<const SparsePoly> thetas);

/// Whether the products (primary monomial) * theta_j, reduced mod p, span the
/// degree-d invariants over F_p. The witness is the first orbit sum, in basis
/// order, outside the span.
Surjectivity rho_surjective(InvariantContext& ctx,
                            std::span<const SparsePoly> thetas,
                            std::uint64_t p, unsigned d);

/// Sweeps degrees 0..sweep_bound; good iff every degree is surjective.
ModPVerdict is_good_prime(InvariantContext& ctx,
                          std::span<const SparsePoly> thetas, std::uint64_t p);

/// f homogeneous invariant; membership of its reduction in the F_p-span of
/// the degree-matched products.
bool module_membership(InvariantContext& ctx, const SparsePoly& f,
                       std::span<const SparsePoly> thetas, std::uint64_t p);

/// Membership in the module over the integral primary invariants, i.e. an
/// integer combination of the products.
bool module_membership_integral(InvariantContext& ctx, const SparsePoly& f,
                                std::span<const SparsePoly> thetas);

/// Membership over the rationals.
bool module_membership_rational(InvariantContext& ctx, const SparsePoly& f,
                                std::span<const SparsePoly> thetas);

}  // namespace cmprime
