#pragma once

#include "cmprime/integer.hpp"
#include "cmprime/perm.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cmprime {

/// Monomial in up to kMaxRank variables, one byte per exponent with x1 in
/// the most significant byte. Comparing packed words of equal degree is
/// lexicographic comparison of exponent vectors.
class Monomial {
public:
  constexpr Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }

  std::uint64_t bits() const noexcept { return bits_; }
  unsigned exponent(std::size_t i) const noexcept {
    return static_cast<unsigned>((bits_ >> (8 * (kMaxRank - 1 - i))) & 0xffu);
  }
  unsigned degree() const noexcept;
  std::vector<unsigned> exponents(std::size_t n) const;

  bool divides(Monomial other) const noexcept;
  Monomial operator*(Monomial other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(Monomial other) const noexcept {
    return from_bits(other.bits_ - bits_);
  }

  /// Signed image under g: returns (sign, g.m).
  std::pair<int, Monomial> act(const SignedPermutation& g) const;

  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(Monomial a, Monomial b) noexcept = default;

  /// "x1^2*x3", or "1" for the unit monomial.
  std::string to_string(std::size_t n) const;

private:
  std::uint64_t bits_ = 0;
};

/// Sparse polynomial with exact integer coefficients in variables x1..xn.
class SparsePoly {
public:
  using Terms = std::map<Monomial, Integer>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t n) : n_(n) {}
  SparsePoly(std::size_t n, Monomial m, Integer c = 1);
  static SparsePoly constant(std::size_t n, const Integer& c);
  static SparsePoly variable(std::size_t n, std::size_t i);

  std::size_t rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(Monomial m) const;
  /// Highest total degree; 0 for constants and the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  void add_term(Monomial m, const Integer& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Integer& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Integer(-1); }
  friend SparsePoly operator*(SparsePoly a, const Integer& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

  SparsePoly pow(unsigned e) const;
  /// Exact division by an integer that divides every coefficient.
  SparsePoly divexact(const Integer& c) const;

  std::string to_string() const;

private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// g.f with (g.f)(v) = f(g^{-1} v); on variables g.x_i = s_i x_{g(i)}.
SparsePoly apply_group_element(const SignedPermutation& g, const SparsePoly& f);

/// Exact value of f at an integer point.
Integer evaluate(const SparsePoly& f, std::span<const Integer> z);

/// gcd of the coefficients; 0 for the zero polynomial.
Integer content(const SparsePoly& f);
SparsePoly primitive_part(const SparsePoly& f);

/// e_k(x1..xn), or e_k(x1^2..xn^2) when `squared`.
SparsePoly elementary_symmetric(std::size_t n, std::size_t k, bool squared = false);

/// One term of an orbit sum: the signed monomial g.m.
struct SignedMonomial {
  Monomial monomial;
  int sign = 1;
};

/// The G-orbit of a monomial with sign bookkeeping. `vanishes` is set when
/// some stabilizer element acts on the monomial with sign -1, in which case
/// the signed orbit sum is zero.
struct MonomialOrbit {
  Monomial representative;  ///< graded-lex maximal member
  std::vector<SignedMonomial> members;  ///< sorted, sign relative to the start
  bool vanishes = false;
};

/// Orbit of m under G; members carry the sign of g.m relative to m.
MonomialOrbit monomial_orbit(const Group& group, Monomial m);

/// Z(m): the sum over the distinct signed images g.m, coefficient +1 at m.
SparsePoly orbit_sum(const Group& group, Monomial m);

/// "Z(x1^2*x2)" using the canonical representative.
std::string orbit_sum_name(const Group& group, Monomial m);
std::string orbit_sum_label(Monomial representative, std::size_t n);

/// All exponent vectors of degree d in n variables, graded-lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace cmprime
