#include "fixtures.hpp"

#include "cmprime/poly.hpp"

#include <doctest.h>

#include <random>

using namespace cmprime;
using namespace fixtures;

namespace {

SparsePoly x(std::size_t n, std::size_t i) { return SparsePoly::variable(n, i); }

SparsePoly poly(std::size_t n, std::vector<std::pair<std::vector<unsigned>, long>> terms) {
  SparsePoly f(n);
  for (auto& [e, c] : terms) f.add_term(Monomial(e), c);
  return f;
}

}  // namespace

TEST_CASE("orbit sums") {
  CHECK(orbit_sum(symmetric_group(3), mono({2, 0, 0})) ==
        poly(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
  CHECK(orbit_sum(group_of(kA3), mono({2, 1, 0})) ==
        poly(3, {{{2, 1, 0}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 1}}));
  Group g223 = group_of("n=3; gens=[-1,-2,3];[2,1,3];[2,3,1]");
  CHECK(orbit_sum(g223, mono({2, 1, 0})).is_zero());
  CHECK(monomial_orbit(g223, mono({2, 1, 0})).vanishes);
  // all exponents odd: survives with coefficient +-1
  SparsePoly s3 = orbit_sum(g223, mono({1, 1, 1}));
  CHECK(s3 == poly(3, {{{1, 1, 1}, 1}}));
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary_symmetric(3, 1) == x(3, 0) + x(3, 1) + x(3, 2));
  CHECK(elementary_symmetric(3, 3) == x(3, 0) * x(3, 1) * x(3, 2));
  CHECK(elementary_symmetric(3, 2, true) ==
        poly(3, {{{2, 2, 0}, 1}, {{2, 0, 2}, 1}, {{0, 2, 2}, 1}}));
  CHECK(elementary_symmetric(6, 3).size() == 20);
}

TEST_CASE("group action on polynomials") {
  auto t12 = SignedPermutation::from_cycles(3, {{1, 2}});
  CHECK(apply_group_element(t12, x(3, 0)) == x(3, 1));
  for (std::size_t n : {3u, 4u, 5u}) {
    SparsePoly disc = vandermonde(n);
    auto odd = SignedPermutation::from_cycles(n, {{1, 2}});
    CHECK(apply_group_element(odd, disc) == -disc);
  }
  std::vector<int> rho = {-1, 2};
  auto r1 = SignedPermutation::from_signed_images(rho);
  CHECK(apply_group_element(r1, x(2, 0) * x(2, 1)) == -(x(2, 0) * x(2, 1)));
}

TEST_CASE("evaluation") {
  std::vector<Integer> z123 = {1, 2, 3};
  CHECK(evaluate(vandermonde(3), z123) == -2);
  CHECK(evaluate(elementary_symmetric(3, 2), z123) == 11);
  std::vector<Integer> z5 = {1, 2, 3, 4, 5};
  CHECK(evaluate(elementary_symmetric(5, 5), z5) == 120);
}

TEST_CASE("content and primitive part") {
  SparsePoly f = poly(2, {{{2, 0}, 6}, {{0, 1}, 9}});
  CHECK(content(f) == 3);
  CHECK(primitive_part(f) == poly(2, {{{2, 0}, 2}, {{0, 1}, 3}}));
  CHECK(content(vandermonde(3) * Integer(-2)) == 2);
  CHECK(content(SparsePoly(3)) == 0);
  CHECK(content(orbit_sum(group_of(kOrder20), mono({4, 3, 2, 1, 0}))) == 1);
}

TEST_CASE("orbit sums are invariant and evaluation respects the action") {
  std::mt19937 rng(23);
  for (const auto& [name, text] : small_index_groups()) {
    CAPTURE(name);
    Group g = group_of(text);
    const std::size_t n = g.rank();
    for (int t = 0; t < 6; ++t) {
      std::vector<unsigned> e(n);
      for (auto& v : e) v = rng() % 4;
      SparsePoly z = orbit_sum(g, Monomial(e));
      const auto& h = g.elements()[rng() % g.order()];
      CHECK(apply_group_element(h, z) == z);
      std::vector<Integer> p(n);
      for (auto& v : p) v = static_cast<long>(rng() % 19) - 9;
      SparsePoly f = z + SparsePoly(n, Monomial(e), 3);
      CHECK(evaluate(apply_group_element(h, f), p) == evaluate(f, act_inverse(h, p)));
    }
  }
}

TEST_CASE("products: evaluation homomorphism and Gauss lemma") {
  std::mt19937 rng(29);
  for (int t = 0; t < 25; ++t) {
    SparsePoly f(3), g(3);
    for (int k = 0; k < 4; ++k) {
      f.add_term(Monomial(std::vector<unsigned>{unsigned(rng() % 3), unsigned(rng() % 3), unsigned(rng() % 3)}),
                 static_cast<long>(rng() % 11) - 5);
      g.add_term(Monomial(std::vector<unsigned>{unsigned(rng() % 3), unsigned(rng() % 3), unsigned(rng() % 3)}),
                 static_cast<long>(rng() % 11) - 5);
    }
    std::vector<Integer> z = {static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3, 2};
    CHECK(evaluate(f * g, z) == evaluate(f, z) * evaluate(g, z));
    if (f.is_zero() || g.is_zero()) continue;
    SparsePoly pf = primitive_part(f) * Integer(6), pg = primitive_part(g) * Integer(10);
    CHECK(content(pf * pg) == 60);
  }
}

TEST_CASE("graded lex order and monomial enumeration") {
  CHECK(mono({0, 0, 2}) > mono({1, 0, 0}));
  CHECK(mono({2, 0, 0}) > mono({1, 1, 0}));
  CHECK(mono({1, 1, 0}) > mono({1, 0, 1}));
  auto ms = monomials_of_degree(3, 3);
  CHECK(ms.size() == 10);
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i] > ms[i + 1]);
  CHECK(ms.front() == mono({3, 0, 0}));
  CHECK(monomial_orbit(group_of(kA3), mono({0, 1, 2})).representative == mono({2, 0, 1}));
}

TEST_CASE("rendering") {
  CHECK(mono({2, 1, 0}).to_string(3) == "x1^2*x2");
  CHECK(Monomial{}.to_string(3) == "1");
  CHECK(orbit_sum_name(group_of(kA3), mono({0, 1, 2})) == "Z(x1^2*x3)");
}
