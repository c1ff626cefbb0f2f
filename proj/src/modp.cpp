#include "cmprime/modp.hpp"

#include "cmprime/error.hpp"
#include "cmprime/linalg.hpp"

#include <algorithm>

namespace cmprime {

namespace {

void check_prime(const AmbientFrame& frame, std::uint64_t p) {
  require(is_prime(p), ErrorCode::domain,
          std::to_string(p) + " is not a prime");
  // Over F_2 sign changes act trivially, so the signed theory does not
  // reduce to characteristic 2.
  require(!(p == 2 && frame.sigma().is_signed()), ErrorCode::domain,
          "p = 2 is not supported for the hyperoctahedral ambient");
}

unsigned homogeneous_degree(const SparsePoly& f) {
  require(!f.is_zero(), ErrorCode::domain, "polynomial is zero");
  require(f.is_homogeneous(), ErrorCode::domain,
          "polynomial is not homogeneous");
  return f.degree();
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

unsigned sweep_bound(const AmbientFrame& frame,
                     std::span<const SparsePoly> thetas) {
  unsigned bound = 0;
  for (unsigned d : frame.primary_degrees()) bound += d - 1;
  for (const auto& t : thetas) bound = std::max(bound, t.degree());
  return bound;
}

Surjectivity rho_surjective(InvariantContext& ctx,
                            std::span<const SparsePoly> thetas,
                            std::uint64_t p, unsigned d) {
  check_prime(ctx.frame(), p);
  Surjectivity out;
  out.dimension = ctx.basis(d).size();
  if (out.dimension == 0) return out;
  IntMatrix s = ctx.span_matrix(thetas, d);
  IntMatrix both = s.cols() ? s.hconcat(IntMatrix::identity(out.dimension))
                            : IntMatrix::identity(out.dimension);
  auto pivots = modular_pivot_columns(both, p);
  for (std::size_t c : pivots) {
    if (c < s.cols()) {
      ++out.rank;
    } else {
      out.surjective = false;
      out.witness = ctx.basis(d)[c - s.cols()];
      break;
    }
  }
  return out;
}

ModPVerdict is_good_prime(InvariantContext& ctx,
                          std::span<const SparsePoly> thetas,
                          std::uint64_t p) {
  check_prime(ctx.frame(), p);
  ModPVerdict v;
  v.prime = p;
  v.swept_to = sweep_bound(ctx.frame(), thetas);
  for (unsigned d = 0; d <= v.swept_to; ++d) {
    Surjectivity s = rho_surjective(ctx, thetas, p, d);
    if (!s.surjective) {
      v.is_good = false;
      v.witness = ModPWitness{d, *s.witness};
      return v;
    }
  }
  return v;
}

bool module_membership(InvariantContext& ctx, const SparsePoly& f,
                       std::span<const SparsePoly> thetas, std::uint64_t p) {
  check_prime(ctx.frame(), p);
  if (f.is_zero()) return true;
  const unsigned d = homogeneous_degree(f);
  IntMatrix s = ctx.span_matrix(thetas, d);
  std::vector<Integer> c = ctx.coordinates(f, d);
  IntMatrix col(c.size(), 1);
  for (std::size_t i = 0; i < c.size(); ++i) col(i, 0) = c[i];
  if (s.cols() == 0) return modular_rank(col, p) == 0;
  return modular_rank(s.hconcat(col), p) == modular_rank(s, p);
}

bool module_membership_integral(InvariantContext& ctx, const SparsePoly& f,
                                std::span<const SparsePoly> thetas) {
  if (f.is_zero()) return true;
  const unsigned d = homogeneous_degree(f);
  IntMatrix s = ctx.span_matrix(thetas, d);
  std::vector<Integer> c = ctx.coordinates(f, d);
  if (s.cols() == 0)
    return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
  // s x = c over Z iff P c has D_i | (P c)_i and zeros past the rank.
  SNFResult snf = smith_normal_form(s);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    Integer y = 0;
    for (std::size_t j = 0; j < s.rows(); ++j) y += snf.P(i, j) * c[j];
    const Integer dvs = i < snf.divisors.size() ? snf.divisors[i] : Integer(0);
    if (dvs == 0) {
      if (y != 0) return false;
    } else if (!divides(dvs, y)) {
      return false;
    }
  }
  return true;
}

bool module_membership_rational(InvariantContext& ctx, const SparsePoly& f,
                                std::span<const SparsePoly> thetas) {
  if (f.is_zero()) return true;
  const unsigned d = homogeneous_degree(f);
  IntMatrix s = ctx.span_matrix(thetas, d);
  std::vector<Integer> c = ctx.coordinates(f, d);
  std::vector<Rational> b(c.begin(), c.end());
  if (s.cols() == 0)
    return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
  return rational_solve(to_rational(s), b).has_value();
}

}  // namespace cmprime
