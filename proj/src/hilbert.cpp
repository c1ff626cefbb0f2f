#include "cmprime/hilbert.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace cmprime {

std::vector<Monomial> orbit_basis(const Group& group, unsigned d) {
  const std::size_t n = group.rank();
  std::vector<Monomial> reps;
  std::unordered_map<std::uint64_t, int> sign_of;
  std::deque<Monomial> queue;
  // Monomials come in descending order, so the first unvisited member of an
  // orbit is its graded-lex maximum. Orbits are closed under the generators,
  // and a stabilizer acting by -1 shows up as a sign clash along some edge.
  for (Monomial m : monomials_of_degree(n, d)) {
    if (sign_of.count(m.bits())) continue;
    bool vanishes = false;
    sign_of.emplace(m.bits(), 1);
    queue.push_back(m);
    while (!queue.empty()) {
      Monomial cur = queue.front();
      queue.pop_front();
      int s = sign_of.at(cur.bits());
      for (const auto& g : group.generators()) {
        auto [t, image] = cur.act(g);
        auto [it, inserted] = sign_of.emplace(image.bits(), s * t);
        if (inserted)
          queue.push_back(image);
        else if (it->second != s * t)
          vanishes = true;
      }
    }
    if (!vanishes) reps.push_back(m);
  }
  return reps;
}

std::size_t invariant_dimension_direct(const Group& group, unsigned d) {
  return orbit_basis(group, d).size();
}

std::vector<Integer> hilbert_coefficients(const Group& group,
                                          unsigned max_degree) {
  const std::size_t n = group.rank();
  const std::size_t len = max_degree + 1;
  // Elements sharing a signed cycle type contribute the same series.
  std::map<std::vector<int>, std::size_t> types;
  for (const auto& g : group.elements()) {
    std::vector<int> type;  // cycle length, negated when the sign product is -1
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int length = 0, sign = 1;
      for (std::size_t j = i; !seen[j]; j = g.image(j)) {
        seen[j] = true;
        sign *= g.sign(j);
        ++length;
      }
      type.push_back(sign * length);
    }
    std::sort(type.begin(), type.end());
    ++types[type];
  }
  std::vector<Integer> total(len, 0);
  for (const auto& [type, count] : types) {
    std::vector<Integer> series(len, 0);
    series[0] = 1;
    for (int c : type) {
      // multiply by 1 / (1 - eps * lambda^L)
      const std::size_t step = static_cast<std::size_t>(std::abs(c));
      for (std::size_t k = step; k < len; ++k) {
        if (c > 0)
          series[k] += series[k - step];
        else
          series[k] -= series[k - step];
      }
    }
    for (std::size_t k = 0; k < len; ++k) total[k] += series[k] * count;
  }
  const Integer order = group.order();
  for (auto& v : total) {
    require(divides(order, v), ErrorCode::invariant,
            "Burnside average is not an integer");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), order.get_mpz_t());
  }
  return total;
}

std::size_t invariant_dimension_burnside(const Group& group, unsigned d) {
  return hilbert_coefficients(group, d).back().get_ui();
}

std::size_t invariant_dimension(const Group& group, unsigned d) {
  return group.is_signed() ? invariant_dimension_direct(group, d)
                           : invariant_dimension_burnside(group, d);
}

unsigned HilbertData::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0u);
}

unsigned goebel_bound(std::size_t n) {
  require(n >= 1, ErrorCode::domain, "rank must be positive");
  return static_cast<unsigned>(std::max(n, n * (n - 1) / 2));
}

unsigned secondary_degree_bound(std::size_t n) {
  return static_cast<unsigned>(n * (n - 1) / 2);
}

HilbertData secondary_degrees(const AmbientFrame& frame) {
  const Group& g = frame.subgroup();
  const std::size_t ell = frame.index();
  const unsigned cap = discriminant_degree(frame);

  // prod (1 - lambda^{d_i}) over the primary degrees
  std::vector<Integer> denom{1};
  for (unsigned di : frame.primary_degrees()) {
    std::vector<Integer> next(denom.size() + di, 0);
    for (std::size_t k = 0; k < denom.size(); ++k) {
      next[k] += denom[k];
      next[k + di] -= denom[k];
    }
    denom = std::move(next);
  }

  HilbertData h;
  h.goebel_bound = goebel_bound(frame.rank());
  std::vector<Integer> dims;
  auto dims_through = [&](unsigned d) {
    if (dims.size() > d) return;
    if (g.is_signed()) {
      while (dims.size() <= d)
        dims.emplace_back(invariant_dimension_direct(
            g, static_cast<unsigned>(dims.size())));
    } else {
      unsigned target = std::max(d, std::min(cap, 2 * d + 16));
      dims = hilbert_coefficients(g, target);
    }
  };

  std::size_t found = 0;
  for (unsigned d = 0; d <= cap && found < ell; ++d) {
    dims_through(d);
    Integer coef = 0;
    for (std::size_t k = 0; k < denom.size() && k <= d; ++k)
      coef += denom[k] * dims[d - k];
    require(coef >= 0, ErrorCode::invariant,
            "negative Hilbert numerator coefficient in degree " +
                std::to_string(d));
    if (coef > 0) {
      std::size_t c = coef.get_ui();
      h.tau[d] = c;
      h.degrees.insert(h.degrees.end(), c, d);
      found += c;
    }
  }
  require(found == ell, ErrorCode::invariant,
          "Hilbert numerator does not sum to the index by degree " +
              std::to_string(cap));
  require(h.tau.count(0) && h.tau.at(0) == 1, ErrorCode::invariant,
          "expected exactly one secondary of degree 0");
  require(h.degree_sum() == cap, ErrorCode::invariant,
          "sum of secondary degrees differs from the discriminant degree");
  for (unsigned d = 0; d <= h.degrees.back(); ++d)
    h.dimensions.push_back(dims.at(d).get_ui());
  return h;
}

}  // namespace cmprime
