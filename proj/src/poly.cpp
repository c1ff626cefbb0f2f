#include "cmprime/poly.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cmprime {

namespace {

constexpr unsigned shift_of(std::size_t i) {
  return static_cast<unsigned>(8 * (kMaxRank - 1 - i));
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  require(exponents.size() <= kMaxRank, ErrorCode::unsupported,
          "too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    require(exponents[i] <= 0xffu, ErrorCode::unsupported,
            "exponent exceeds 255");
    bits_ |= std::uint64_t{exponents[i]} << shift_of(i);
  }
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (std::uint64_t b = bits_; b; b >>= 8) d += static_cast<unsigned>(b & 0xffu);
  return d;
}

std::vector<unsigned> Monomial::exponents(std::size_t n) const {
  std::vector<unsigned> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = exponent(i);
  return e;
}

bool Monomial::divides(Monomial other) const noexcept {
  for (std::size_t i = 0; i < kMaxRank; ++i)
    if (exponent(i) > other.exponent(i)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  for (std::size_t i = 0; i < kMaxRank; ++i)
    require(exponent(i) + other.exponent(i) <= 0xffu, ErrorCode::unsupported,
            "exponent overflow");
  return from_bits(bits_ + other.bits_);
}

std::pair<int, Monomial> Monomial::act(const SignedPermutation& g) const {
  int sign = 1;
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::uint64_t e = exponent(i);
    if (!e) continue;
    if ((e & 1u) && g.sign(i) < 0) sign = -sign;
    out |= e << shift_of(g.image(i));
  }
  return {sign, from_bits(out)};
}

std::string Monomial::to_string(std::size_t n) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned e = exponent(i);
    if (!e) continue;
    if (!first) os << '*';
    os << 'x' << i + 1;
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

SparsePoly::SparsePoly(std::size_t n, Monomial m, Integer c) : n_(n) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

SparsePoly SparsePoly::constant(std::size_t n, const Integer& c) {
  return SparsePoly(n, Monomial{}, c);
}

SparsePoly SparsePoly::variable(std::size_t n, std::size_t i) {
  require(i < n, ErrorCode::domain, "variable index out of range");
  std::vector<unsigned> e(n, 0);
  e[i] = 1;
  return SparsePoly(n, Monomial(e));
}

Integer SparsePoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned SparsePoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

void SparsePoly::add_term(Monomial m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require(n_ == o.n_ || o.terms_.empty() || terms_.empty(), ErrorCode::domain,
          "rank mismatch in polynomial sum");
  if (terms_.empty()) n_ = std::max(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require(n_ == o.n_ || o.terms_.empty() || terms_.empty(), ErrorCode::domain,
          "rank mismatch in polynomial difference");
  if (terms_.empty()) n_ = std::max(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require(a.n_ == b.n_, ErrorCode::domain, "rank mismatch in polynomial product");
  SparsePoly r(a.n_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::unordered_map<std::uint64_t, Integer> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Integer t;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      mpz_mul(t.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[m.bits()] += t;
    }
  for (auto& [bits, c] : acc)
    if (c != 0) r.terms_.emplace(Monomial::from_bits(bits), std::move(c));
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(n_, 1);
  SparsePoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::divexact(const Integer& c) const {
  require(c != 0, ErrorCode::domain, "division by zero");
  SparsePoly r = *this;
  for (auto& [m, v] : r.terms_) {
    require(cmprime::divides(c, v), ErrorCode::domain, "inexact division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = m == Monomial{};
    if (unit) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << m.to_string(n_);
    }
    first = false;
  }
  return os.str();
}

SparsePoly apply_group_element(const SignedPermutation& g, const SparsePoly& f) {
  require(f.is_zero() || g.rank() == f.rank(), ErrorCode::domain,
          "rank mismatch between group element and polynomial");
  SparsePoly r(f.rank());
  for (const auto& [m, c] : f.terms()) {
    auto [s, image] = m.act(g);
    r.add_term(image, s > 0 ? c : Integer(-c));
  }
  return r;
}

Integer evaluate(const SparsePoly& f, std::span<const Integer> z) {
  require(f.is_zero() || z.size() == f.rank(), ErrorCode::domain,
          "evaluation point has the wrong length");
  Integer total = 0;
  Integer term, power;
  for (const auto& [m, c] : f.terms()) {
    term = c;
    for (std::size_t i = 0; i < z.size(); ++i) {
      unsigned e = m.exponent(i);
      if (!e) continue;
      mpz_pow_ui(power.get_mpz_t(), z[i].get_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

Integer content(const SparsePoly& f) {
  Integer g = 0;
  for (const auto& [_, c] : f.terms()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

SparsePoly primitive_part(const SparsePoly& f) {
  if (f.is_zero()) return f;
  return f.divexact(content(f));
}

SparsePoly elementary_symmetric(std::size_t n, std::size_t k, bool squared) {
  require(k <= n, ErrorCode::domain, "elementary symmetric index exceeds rank");
  SparsePoly r(n);
  std::vector<unsigned> e(n, 0);
  // iterate k-subsets via a selection mask
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    for (std::size_t i = 0; i < n; ++i) e[i] = mask[i] ? (squared ? 2u : 1u) : 0u;
    r.add_term(Monomial(e), 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return r;
}

MonomialOrbit monomial_orbit(const Group& group, Monomial m) {
  std::unordered_map<std::uint64_t, int> seen;
  MonomialOrbit orbit;
  for (const auto& g : group.elements()) {
    auto [s, image] = m.act(g);
    auto [it, inserted] = seen.emplace(image.bits(), s);
    if (!inserted && it->second != s) orbit.vanishes = true;
  }
  orbit.members.reserve(seen.size());
  for (const auto& [bits, s] : seen)
    orbit.members.push_back({Monomial::from_bits(bits), s});
  std::sort(orbit.members.begin(), orbit.members.end(),
            [](const SignedMonomial& a, const SignedMonomial& b) {
              return a.monomial > b.monomial;
            });
  orbit.representative = orbit.members.front().monomial;
  return orbit;
}

SparsePoly orbit_sum(const Group& group, Monomial m) {
  MonomialOrbit orbit = monomial_orbit(group, m);
  SparsePoly r(group.rank());
  if (orbit.vanishes) return r;
  for (const auto& t : orbit.members) r.add_term(t.monomial, t.sign);
  return r;
}

std::string orbit_sum_label(Monomial representative, std::size_t n) {
  return "Z(" + representative.to_string(n) + ")";
}

std::string orbit_sum_name(const Group& group, Monomial m) {
  return orbit_sum_label(monomial_orbit(group, m).representative, group.rank());
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  // lexicographically descending exponent vectors
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

}  // namespace cmprime
