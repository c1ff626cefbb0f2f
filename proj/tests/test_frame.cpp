#include "fixtures.hpp"

#include "cmprime/frame.hpp"

#include <doctest.h>

#include <set>

using namespace cmprime;
using namespace fixtures;

namespace {

std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("frame examples") {
  AmbientFrame a4 = frame_of(kA4);
  CHECK(a4.index() == 2);
  CHECK(a4.primary_degrees() == std::vector<unsigned>{1, 2, 3, 4});
  CHECK(frame_of(kOrder20).index() == 6);
  AmbientFrame ya = frame_of(kYoungAlt5);
  CHECK(ya.kind() == AmbientKind::young);
  CHECK(ya.index() == 2);
  CHECK(ya.primary_degrees() == std::vector<unsigned>{1, 1, 2, 2, 3});
  AmbientFrame g = frame_of(kG225);
  CHECK(g.kind() == AmbientKind::hyperoctahedral);
  CHECK(g.primary_degrees() == std::vector<unsigned>{2, 4, 6, 8, 10});
}

TEST_CASE("subgroup outside the requested ambient is rejected") {
  Group signed_group = group_of(kG225);
  CHECK_THROWS_AS(build_frame(signed_group, AmbientKind::symmetric), Error);
}

TEST_CASE("discriminant exponents") {
  AmbientFrame s4 = frame_of("n=4; gens=(1,2);(1,2,3,4)");
  for (const auto& o : discriminant_exponents(s4)) CHECK(o.exponent == 0);
  for (std::string t : {kA3, kA4, kA5}) {
    AmbientFrame f = frame_of(t);
    REQUIRE(discriminant_exponents(f).size() == 1);
    CHECK(discriminant_exponents(f)[0].exponent == 1);
  }
  AmbientFrame g = frame_of(kG225);
  for (const auto& o : discriminant_exponents(g)) {
    CAPTURE(o.label());
    CHECK(o.cyclic_order == 2);
    CHECK(o.exponent == (o.kind == ReflectionKind::diagonal ? 1u : 0u));
  }
  CHECK(discriminant_exponents(frame_of(kOrder20))[0].exponent == 3);
}

TEST_CASE("G-discriminants") {
  SparsePoly prod = SparsePoly::constant(5, 1);
  for (std::size_t i = 0; i < 5; ++i) prod = prod * SparsePoly::variable(5, i);
  CHECK(g_discriminant(frame_of(kG225)) == prod);
  CHECK(g_discriminant(frame_of("n=3; gens=(1,2);(1,2,3)")) == SparsePoly::constant(3, 1));
  CHECK(g_discriminant(frame_of(kA3)) == vandermonde(3));
  CHECK(g_discriminant(frame_of(kOrder20)) == vandermonde(5).pow(3));
}

TEST_CASE("degree of the discriminant against the reflection count") {
  DeltaDegreeCheck c = delta_degree_check(frame_of(kOrder20));
  CHECK(c.degree == 30);
  CHECK(c.holds);
  for (std::size_t n : {3u, 4u, 5u}) {
    std::string text = n == 3 ? kA3 : n == 4 ? kA4 : kA5;
    CHECK(delta_degree_check(frame_of(text)).degree == binom2(n));
  }
  CHECK(delta_degree_check(frame_of("n=4; gens=(1,2);(1,2,3,4)")).degree == 0);
}

TEST_CASE("frame invariants over all fixture groups") {
  for (const auto& [name, text] : small_index_groups()) {
    CAPTURE(name);
    AmbientFrame f = frame_of(text);
    const Group& sigma = f.sigma();
    const Group& g = f.subgroup();
    CHECK(f.coset_reps().front().is_identity());
    CHECK(f.index() * g.order() == sigma.order());
    // cosets cover Sigma and are disjoint
    std::vector<std::size_t> sizes(f.index(), 0);
    for (const auto& s : sigma.elements()) ++sizes[f.coset_of(s)];
    for (std::size_t sz : sizes) CHECK(sz == g.order());
    for (std::size_t i = 0; i < f.index(); ++i) CHECK(f.coset_of(f.coset_reps()[i]) == i);
    // product of primary degrees = |Sigma|
    std::size_t prod = 1;
    for (unsigned d : f.primary_degrees()) prod *= d;
    CHECK(prod == sigma.order());
    DeltaDegreeCheck c = delta_degree_check(f);
    CHECK(c.holds);
    CHECK(2 * c.degree == f.index() * (f.reflections_in_sigma() - f.reflections_in_subgroup()));
    CHECK(reflection_count_from_cosets(f) == count_reflections(g));
    // exponent independent of the chosen hyperplane generator
    for (const auto& o : discriminant_exponents(f)) {
      std::set<unsigned> seen;
      for (const auto& gp : o.generators) {
        unsigned e = 0;
        for (const auto& [len, cnt] : cycle_type_on_set(f.coset_action(gp)))
          e += static_cast<unsigned>(cnt * (len - 1));
        seen.insert(e);
      }
      CHECK(seen.size() == 1);
      CHECK(*seen.begin() == o.exponent);
    }
    // unsigned single-orbit restatement: |R(G)| = C(n,2) (1 - 2e/l)
    if (f.kind() == AmbientKind::symmetric) {
      unsigned e = discriminant_exponents(f)[0].exponent;
      CHECK(count_reflections(g) * f.index() == binom2(f.rank()) * (f.index() - 2 * e));
    }
  }
}

TEST_CASE("discriminant value matches expansion") {
  AmbientFrame f = frame_of(kOrder20);
  std::vector<Integer> z = {3, -1, 4, 10, 5};
  CHECK(discriminant_value(f, z) == evaluate(g_discriminant(f), z));
  CHECK(discriminant_value(f, std::vector<Integer>{1, 1, 2, 3, 4}) == 0);
}
