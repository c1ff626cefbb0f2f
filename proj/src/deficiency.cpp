#include "cmprime/deficiency.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cmprime {

std::string to_string(DeficiencyMethod method) {
  return method == DeficiencyMethod::symbolic ? "symbolic" : "evaluated";
}

PolyMatrix build_matrix_M(const AmbientFrame& frame,
                          std::span<const SparsePoly> thetas) {
  require(thetas.size() == frame.index(), ErrorCode::domain,
          "need exactly one secondary per coset");
  PolyMatrix m;
  for (const auto& gamma : frame.coset_reps()) {
    std::vector<SparsePoly> row;
    for (const auto& theta : thetas) row.push_back(apply_group_element(gamma, theta));
    m.push_back(std::move(row));
  }
  return m;
}

IntMatrix build_matrix_M(const AmbientFrame& frame,
                         std::span<const SparsePoly> thetas,
                         std::span<const Integer> z) {
  require(thetas.size() == frame.index(), ErrorCode::domain,
          "need exactly one secondary per coset");
  require(z.size() == frame.rank(), ErrorCode::domain,
          "evaluation point has the wrong length");
  IntMatrix m(frame.index(), thetas.size());
  for (std::size_t i = 0; i < frame.index(); ++i) {
    std::vector<Integer> w = act_inverse(frame.coset_reps()[i], z);
    for (std::size_t j = 0; j < thetas.size(); ++j) m(i, j) = evaluate(thetas[j], w);
  }
  return m;
}

SparsePoly symbolic_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  require(n >= 1 && n <= 20, ErrorCode::unsupported,
          "symbolic determinant size out of range");
  for (const auto& row : m)
    require(row.size() == n, ErrorCode::domain, "matrix is not square");
  const std::size_t rank = m[0][0].rank();
  unsigned total = 0;
  for (const auto& row : m) {
    unsigned top = 0;
    for (const auto& f : row) top = std::max(top, f.degree());
    total += top;
  }
  require(total <= 0xffu, ErrorCode::unsupported,
          "symbolic determinant degree exceeds the exponent range");
  using Terms = std::vector<std::pair<std::uint64_t, Integer>>;
  std::vector<std::vector<Terms>> entries(n, std::vector<Terms>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [mono, c] : m[i][j].terms())
        entries[i][j].emplace_back(mono.bits(), c);

  // minors[mask] = det of rows 0..popcount(mask)-1 and the columns in mask
  std::unordered_map<std::uint32_t, Terms> prev;
  prev[0u] = {{Monomial{}.bits(), Integer(1)}};
  Integer t;
  for (std::size_t k = 1; k <= n; ++k) {
    std::unordered_map<std::uint32_t, std::unordered_map<std::uint64_t, Integer>> acc;
    for (const auto& [mask, minor] : prev) {
      if (minor.empty()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const Terms& entry = entries[k - 1][c];
        if (entry.empty()) continue;
        // column c sits at position pos inside mask | c; expanding along the
        // last row gives sign (-1)^{(k-1) + pos}
        std::size_t pos = static_cast<std::size_t>(
            std::popcount(mask & ((1u << c) - 1u)));
        const bool negate = (k - 1 + pos) % 2;
        auto& target = acc[mask | (1u << c)];
        for (const auto& [ea, ca] : entry)
          for (const auto& [eb, cb] : minor) {
            mpz_mul(t.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            // packed exponent bytes add without carries at these degrees
            Integer& slot = target[ea + eb];
            if (negate)
              slot -= t;
            else
              slot += t;
          }
      }
    }
    prev.clear();
    for (auto& [mask, terms] : acc) {
      Terms& out = prev[mask];
      for (auto& [bits, c] : terms)
        if (c != 0) out.emplace_back(bits, std::move(c));
    }
  }
  SparsePoly det(rank);
  auto it = prev.find((1u << n) - 1u);
  if (it != prev.end())
    for (const auto& [bits, c] : it->second) det.add_term(Monomial::from_bits(bits), c);
  return det;
}

namespace {

// Primes dividing both |G| and the deficiency; no assertion, since a
// non-universal set may have other prime factors.
std::vector<std::uint64_t> order_primes_dividing(const Integer& deficiency,
                                                 const Integer& group_order) {
  std::vector<std::uint64_t> out;
  if (!group_order.fits_ulong_p()) return out;
  for (std::uint64_t p : prime_divisors(group_order.get_ui()))
    if (mpz_divisible_ui_p(deficiency.get_mpz_t(), p)) out.push_back(p);
  return out;
}

}  // namespace

DeficiencyReport deficiency_evaluated(const AmbientFrame& frame,
                                      std::span<const SparsePoly> thetas,
                                      std::span<const Integer> z) {
  DeficiencyReport r;
  r.method = DeficiencyMethod::evaluated;
  IntMatrix m = build_matrix_M(frame, thetas, z);
  r.determinant_value = fraction_free_determinant(m);
  r.discriminant_value = discriminant_value(frame, z);
  require(r.discriminant_value != 0, ErrorCode::domain,
          "evaluation point lies on a reflecting hyperplane");
  require(r.determinant_value != 0, ErrorCode::domain,
          "det M vanishes; the thetas are not secondary invariants");
  require(divides(r.discriminant_value, r.determinant_value),
          ErrorCode::invariant, "Delta(G)(z) does not divide det M(z)");
  Integer q;
  mpz_divexact(q.get_mpz_t(), r.determinant_value.get_mpz_t(),
               r.discriminant_value.get_mpz_t());
  r.det_sign = q < 0 ? -1 : 1;
  r.deficiency = abs(q);
  r.bad_primes = order_primes_dividing(r.deficiency, frame.subgroup().order());
  return r;
}

Integer set_deficiency(const AmbientFrame& frame,
                       std::span<const SparsePoly> thetas,
                       std::span<const Integer> z) {
  Integer det = fraction_free_determinant(build_matrix_M(frame, thetas, z));
  Integer delta = discriminant_value(frame, z);
  require(delta != 0, ErrorCode::domain,
          "evaluation point lies on a reflecting hyperplane");
  require(det != 0, ErrorCode::domain,
          "det M vanishes; the thetas are not secondary invariants");
  require(divides(delta, det), ErrorCode::invariant,
          "Delta(G)(z) does not divide det M(z)");
  Integer q;
  mpz_divexact(q.get_mpz_t(), det.get_mpz_t(), delta.get_mpz_t());
  return abs(q);
}

DeficiencyReport deficiency_symbolic(const AmbientFrame& frame,
                                     std::span<const SparsePoly> thetas) {
  require(frame.index() <= kSymbolicLimit, ErrorCode::unsupported,
          "symbolic determinant limited to index " +
              std::to_string(kSymbolicLimit));
  DeficiencyReport r;
  r.method = DeficiencyMethod::symbolic;
  SparsePoly det = symbolic_determinant(build_matrix_M(frame, thetas));
  require(!det.is_zero(), ErrorCode::domain,
          "det M vanishes; the thetas are not secondary invariants");
  r.deficiency = content(det);
  SparsePoly primitive = det.divexact(r.deficiency);
  SparsePoly delta = g_discriminant(frame);
  if (primitive == delta)
    r.det_sign = 1;
  else if (primitive == -delta)
    r.det_sign = -1;
  else
    fail(ErrorCode::invariant,
         "primitive part of det M is not +-Delta(G)");
  r.identity_checked = true;
  r.determinant = std::move(det);
  r.bad_primes = order_primes_dividing(r.deficiency, frame.subgroup().order());
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> bad_primes(const Integer& deficiency,
                                      const Integer& group_order) {
  require(deficiency >= 1, ErrorCode::domain, "deficiency must be positive");
  require(group_order >= 1 && group_order.fits_ulong_p(), ErrorCode::domain,
          "group order out of range");
  std::vector<std::uint64_t> out;
  Integer rest = deficiency;
  for (std::uint64_t p : prime_divisors(group_order.get_ui())) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    out.push_back(p);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  if (rest != 1) {
    // Identify the offending factor for the message.
    Integer factor = rest;
    for (unsigned long p = 2; p < 1000000; ++p)
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        factor = p;
        break;
      }
    fail(ErrorCode::invariant, "bad prime " + factor.get_str() +
                                   " does not divide the group order");
  }
  return out;
}

}  // namespace cmprime
