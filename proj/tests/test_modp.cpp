#include "fixtures.hpp"

#include "cmprime/deficiency.hpp"
#include "cmprime/hilbert.hpp"
#include "cmprime/invariants.hpp"
#include "cmprime/linalg.hpp"
#include "cmprime/modp.hpp"
#include "cmprime/secondary.hpp"

#include <doctest.h>

using namespace cmprime;
using namespace fixtures;

namespace {

struct Setup {
  AmbientFrame frame;
  SecondarySet set;
  std::vector<SparsePoly> polys;
};

Setup universal(const std::string& text) {
  Setup s{frame_of(text), {}, {}};
  s.set = universal_secondaries(s.frame, secondary_degrees(s.frame));
  s.polys = s.set.polys();
  return s;
}

std::vector<SparsePoly> order20_published(const AmbientFrame& f) {
  const Group& g = f.subgroup();
  return {SparsePoly::constant(5, 1),          orbit_sum(g, mono({2, 1, 1, 0, 0})),
          orbit_sum(g, mono({2, 2, 1, 0, 0})), orbit_sum(g, mono({3, 2, 1, 0, 0})),
          orbit_sum(g, mono({3, 2, 1, 0, 1})), orbit_sum(g, mono({4, 3, 0, 1, 0}))};
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(2305843009213693951ull));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("sweep bound") {
  Setup s4 = universal("n=4; gens=(1,2);(1,2,3,4)");
  CHECK(sweep_bound(s4.frame, s4.polys) == 6);
  Setup g = universal(kG225);
  CHECK(sweep_bound(g.frame, g.polys) == 25);
  Setup a5 = universal(kA5);
  CHECK(sweep_bound(a5.frame, a5.polys) == 10);
}

TEST_CASE("order-20 group: 2 is bad, 5 is good") {
  Setup s = universal(kOrder20);
  InvariantContext ctx(s.frame);
  ModPVerdict two = is_good_prime(ctx, s.polys, 2);
  CHECK_FALSE(two.is_good);
  REQUIRE(two.witness.has_value());
  ModPVerdict five = is_good_prime(ctx, s.polys, 5);
  CHECK(five.is_good);
  CHECK(five.swept_to == 10);
  CHECK_FALSE(five.witness.has_value());
}

TEST_CASE("published order-20 secondaries: the membership example") {
  AmbientFrame f = frame_of(kOrder20);
  InvariantContext ctx(f);
  auto th = order20_published(f);
  CHECK_FALSE(is_good_prime(ctx, th, 2).is_good);
  CHECK(is_good_prime(ctx, th, 5).is_good);
  // Z(x1^4 x2^3 x3^2 x4) lies in the module over Q and mod 3, not mod 2
  SparsePoly fz = orbit_sum(f.subgroup(), mono({4, 3, 2, 1, 0}));
  CHECK(module_membership_rational(ctx, fz, th));
  CHECK_FALSE(module_membership_integral(ctx, fz, th));
  CHECK(module_membership_integral(ctx, fz * Integer(2), th));
  CHECK_FALSE(module_membership(ctx, fz, th, 2));
  CHECK(module_membership(ctx, fz, th, 3));
}

TEST_CASE("primes not dividing the group order are good") {
  for (std::string text : {kA4, kOrder20, std::string("n=4; gens=(1,2,3,4)")}) {
    CAPTURE(text);
    Setup s = universal(text);
    InvariantContext ctx(s.frame);
    for (std::uint64_t p : {7ull, 11ull}) CHECK(is_good_prime(ctx, s.polys, p).is_good);
  }
}

TEST_CASE("verdicts match the deficiency over small index groups") {
  for (const auto& [name, text] : small_index_groups()) {
    CAPTURE(name);
    Setup s = universal(text);
    InvariantContext ctx(s.frame);
    Integer mu = deficiency_evaluated(s.frame, s.polys, s.set.evaluation_point).deficiency;
    for (std::uint64_t p : prime_divisors(s.frame.subgroup().order())) {
      if (p == 2 && s.frame.sigma().is_signed()) continue;
      CAPTURE(p);
      ModPVerdict v = is_good_prime(ctx, s.polys, p);
      CHECK(v.is_good == !divides(Integer(static_cast<unsigned long>(p)), mu));
    }
  }
}

TEST_CASE("A5 at p = 2 and the order-36 group at p = 3 are good") {
  Setup a5 = universal(kA5);
  InvariantContext c5(a5.frame);
  CHECK(is_good_prime(c5, a5.polys, 2).is_good);
  Setup s36 = universal(kOrder36);
  InvariantContext c36(s36.frame);
  CHECK(is_good_prime(c36, s36.polys, 3).is_good);
}

TEST_CASE("witnesses are outside the span by an independent rank count") {
  Setup s = universal(kOrder20);
  InvariantContext ctx(s.frame);
  ModPVerdict v = is_good_prime(ctx, s.polys, 2);
  REQUIRE(v.witness.has_value());
  unsigned d = v.witness->degree;
  IntMatrix span = ctx.span_matrix(s.polys, d);
  const auto& basis = ctx.basis(d);
  std::size_t row = ctx.row_of(d, v.witness->rep);
  REQUIRE(row != InvariantContext::npos);
  IntMatrix unit(basis.size(), 1);
  unit(row, 0) = 1;
  CHECK(modular_rank(span.hconcat(unit), 2) == modular_rank(span, 2) + 1);
  Surjectivity sj = rho_surjective(ctx, s.polys, 2, d);
  CHECK_FALSE(sj.surjective);
  CHECK(sj.dimension == basis.size());
  CHECK(sj.rank < sj.dimension);
  CHECK(sj.witness == v.witness->rep);
}

TEST_CASE("F_p dimensions of the invariants equal the characteristic-zero ones") {
  // the orbit sums are a Z-basis, so rho is onto for a good prime in every degree
  Setup s = universal(kOrder20);
  InvariantContext ctx(s.frame);
  for (unsigned d = 0; d <= 10; ++d) {
    Surjectivity sj = rho_surjective(ctx, s.polys, 5, d);
    CHECK(sj.surjective);
    CHECK(sj.rank == invariant_dimension(s.frame.subgroup(), d));
    CHECK(sj.dimension == invariant_dimension(s.frame.subgroup(), d));
  }
}

TEST_CASE("module members") {
  Setup s = universal(kA4);
  InvariantContext ctx(s.frame);
  SparsePoly f = elementary_symmetric(4, 1) * s.polys[1];
  CHECK(module_membership(ctx, f, s.polys, 2));
  CHECK(module_membership(ctx, f, s.polys, 3));
  CHECK(module_membership_integral(ctx, f, s.polys));
  CHECK(module_membership(ctx, SparsePoly::constant(4, 0), s.polys, 3));
}

TEST_CASE("argument errors") {
  Setup g = universal(kG225);
  InvariantContext ctx(g.frame);
  CHECK_THROWS_AS(is_good_prime(ctx, g.polys, 2), Error);
  CHECK_THROWS_AS(is_good_prime(ctx, g.polys, 4), Error);
  CHECK_THROWS_AS(rho_surjective(ctx, g.polys, 9, 3), Error);
  try {
    is_good_prime(ctx, g.polys, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("G(2,2,5) is good at 3 and 5") {
  Setup g = universal(kG225);
  InvariantContext ctx(g.frame);
  for (std::uint64_t p : {3ull, 5ull}) {
    ModPVerdict v = is_good_prime(ctx, g.polys, p);
    CHECK(v.is_good);
    CHECK(v.swept_to == 25);
  }
}
