#pragma once

#include "cmprime/frame.hpp"
#include "cmprime/integer.hpp"
#include "cmprime/perm.hpp"
#include "cmprime/poly.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace cmprime {

/// Canonical representatives of the monomial orbits of degree d whose
/// (signed) orbit sums are nonzero, in descending graded-lex order. The
/// orbit sums of these form a basis of the degree-d invariants.
std::vector<Monomial> orbit_basis(const Group& group, unsigned d);

/// dim of the degree-d invariants. Burnside for permutation groups, direct
/// orbit enumeration for signed groups.
std::size_t invariant_dimension(const Group& group, unsigned d);

/// Average over G of the trace on degree-d monomials, from cycle types.
std::size_t invariant_dimension_burnside(const Group& group, unsigned d);

/// Number of orbits with nonvanishing orbit sum, by enumeration.
std::size_t invariant_dimension_direct(const Group& group, unsigned d);

/// Dimensions for all degrees 0..max_degree in one pass (Burnside).
std::vector<Integer> hilbert_coefficients(const Group& group,
                                          unsigned max_degree);

struct HilbertData {
  std::map<unsigned, std::size_t> tau;  ///< degree -> number of secondaries
  std::vector<unsigned> degrees;        ///< a_1 <= ... <= a_ell
  unsigned goebel_bound = 0;
  /// dim of the invariants in degrees 0..degrees.back()
  std::vector<std::size_t> dimensions;

  std::size_t count() const { return degrees.size(); }
  unsigned degree_sum() const;
};

/// Numerator of the Hilbert series over the ambient primary invariants,
/// read off degree by degree until its coefficients sum to the index.
HilbertData secondary_degrees(const AmbientFrame& frame);

/// max(n, C(n,2)).
unsigned goebel_bound(std::size_t n);
/// C(n,2): bound on secondary degrees for subgroups of S_n.
unsigned secondary_degree_bound(std::size_t n);

}  // namespace cmprime
