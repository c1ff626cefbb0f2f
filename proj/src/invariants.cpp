#include "cmprime/invariants.hpp"

#include "cmprime/error.hpp"
#include "cmprime/hilbert.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace cmprime {

namespace {

constexpr std::size_t kBinomRows = 320;

// C(a, b) for a < kBinomRows, b <= kMaxRank.
std::uint64_t binom(std::size_t a, std::size_t b) {
  static const auto table = [] {
    std::vector<std::array<std::uint64_t, kMaxRank + 1>> t(kBinomRows);
    for (std::size_t i = 0; i < kBinomRows; ++i) {
      t[i].fill(0);
      t[i][0] = 1;
      for (std::size_t j = 1; j <= std::min(i, kMaxRank); ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  require(a < kBinomRows, ErrorCode::unsupported, "degree too large");
  return b > a ? 0 : table[a][b];
}

// Index of a composition among all compositions of the same total into the
// same number of parts (stars and bars in the combinatorial number system).
std::uint64_t composition_rank(const unsigned* c, std::size_t k) {
  std::uint64_t rank = 0;
  std::size_t prefix = 0;
  for (std::size_t i = 1; i < k; ++i) {
    prefix += c[i - 1];
    rank += binom(prefix + i - 1, i);
  }
  return rank;
}

std::uint64_t composition_count(unsigned total, std::size_t k) {
  return binom(total + k - 1, k - 1);
}

template <typename F>
void for_each_composition(unsigned total, std::size_t k, F&& f) {
  std::vector<unsigned> c(k, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == k) {
      c[i] = left;
      f(c);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      c[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

void add_checked(std::uint64_t& acc, std::uint64_t v) {
  require(!__builtin_add_overflow(acc, v, &acc), ErrorCode::unsupported,
          "primary coefficient overflow");
}

}  // namespace

std::vector<std::vector<unsigned>> partitions(unsigned d, unsigned max_part) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, max_part);
  return out;
}

std::string PrimaryMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& p = parts[b];
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (!first) os << '*';
      os << 'e' << p[i];
      if (parts.size() > 1) os << '[' << b + 1 << ']';
      if (j - i > 1) os << '^' << j - i;
      first = false;
      i = j;
    }
  }
  if (first) os << '1';
  return os.str();
}

InvariantContext::InvariantContext(const AmbientFrame& frame) : frame_(frame) {}

const std::vector<Monomial>& InvariantContext::basis(unsigned d) {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  auto& reps = bases_[d] = orbit_basis(frame_.subgroup(), d);
  auto& rows = rows_[d];
  for (std::size_t i = 0; i < reps.size(); ++i) rows.emplace(reps[i].bits(), i);
  return reps;
}

std::size_t InvariantContext::row_of(unsigned d, Monomial rep) {
  basis(d);
  const auto& rows = rows_.at(d);
  auto it = rows.find(rep.bits());
  return it == rows.end() ? npos : it->second;
}

const std::vector<PrimaryMonomial>& InvariantContext::primary_monomials(
    unsigned d) {
  auto it = primaries_.find(d);
  if (it != primaries_.end()) return it->second;
  const auto& blocks = frame_.blocks();
  const unsigned scale = frame_.squared_primaries() ? 2 : 1;
  std::vector<PrimaryMonomial> out;
  PrimaryMonomial cur;
  cur.parts.resize(blocks.size());
  auto rec = [&](auto&& self, std::size_t b, unsigned left) -> void {
    if (b == blocks.size()) {
      if (left == 0) {
        cur.degree = d;
        out.push_back(cur);
      }
      return;
    }
    for (unsigned s = left / scale + 1; s-- > 0;) {
      if (b + 1 == blocks.size() && s * scale != left) continue;
      for (auto& p : partitions(s, static_cast<unsigned>(blocks[b].size()))) {
        cur.parts[b] = p;
        self(self, b + 1, left - s * scale);
      }
    }
  };
  rec(rec, 0, d);
  return primaries_[d] = std::move(out);
}

const std::vector<std::uint64_t>& InvariantContext::table(
    std::size_t k, const std::vector<unsigned>& parts) {
  auto key = std::make_pair(k, parts);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  std::vector<std::uint64_t> t(composition_count(total, k), 0);
  if (parts.empty()) {
    t[0] = 1;
  } else {
    // e_lambda = e_{lambda'} * e_last, with last the smallest part
    const unsigned last = parts.back();
    std::vector<unsigned> rest(parts.begin(), parts.end() - 1);
    const auto& prev = table(k, rest);
    std::vector<unsigned> smaller(k);
    for_each_composition(total, k, [&](const std::vector<unsigned>& c) {
      unsigned support = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (c[i]) support |= 1u << i;
      std::uint64_t value = 0;
      for (unsigned s = support;; s = (s - 1) & support) {
        if (static_cast<unsigned>(std::popcount(s)) == last) {
          for (std::size_t i = 0; i < k; ++i)
            smaller[i] = c[i] - ((s >> i) & 1u);
          add_checked(value, prev[composition_rank(smaller.data(), k)]);
        }
        if (s == 0) break;
      }
      t[composition_rank(c.data(), k)] = value;
    });
  }
  return tables_.emplace(std::move(key), std::move(t)).first->second;
}

const std::vector<InvariantContext::Resolved>& InvariantContext::resolved(
    unsigned d) {
  auto it = resolved_.find(d);
  if (it != resolved_.end()) return it->second;
  std::vector<Resolved> out;
  for (const auto& e : primary_monomials(d)) {
    Resolved r;
    r.monomial = e;
    for (std::size_t b = 0; b < e.parts.size(); ++b) {
      r.tables.push_back(&table(frame_.blocks()[b].size(), e.parts[b]));
      r.block_degrees.push_back(
          std::accumulate(e.parts[b].begin(), e.parts[b].end(), 0u));
    }
    out.push_back(std::move(r));
  }
  return resolved_[d] = std::move(out);
}

bool InvariantContext::block_ranks(Monomial u, std::vector<unsigned>& degrees,
                                   std::vector<std::uint64_t>& ranks) const {
  const auto& blocks = frame_.blocks();
  const bool squared = frame_.squared_primaries();
  degrees.resize(blocks.size());
  ranks.resize(blocks.size());
  std::array<unsigned, kMaxRank> c{};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    unsigned total = 0;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      unsigned e = u.exponent(blocks[b][i]);
      if (squared) {
        if (e & 1u) return false;
        e /= 2;
      }
      c[i] = e;
      total += e;
    }
    degrees[b] = total;
    ranks[b] = composition_rank(c.data(), blocks[b].size());
  }
  return true;
}

Integer InvariantContext::primary_coefficient(const PrimaryMonomial& e,
                                              Monomial u) {
  if (u.degree() != e.degree) return 0;
  std::vector<unsigned> degrees;
  std::vector<std::uint64_t> ranks;
  if (!block_ranks(u, degrees, ranks)) return 0;
  Integer value = 1;
  for (std::size_t b = 0; b < e.parts.size(); ++b) {
    unsigned want = std::accumulate(e.parts[b].begin(), e.parts[b].end(), 0u);
    if (degrees[b] != want) return 0;
    const auto& t = table(frame_.blocks()[b].size(), e.parts[b]);
    mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), t[ranks[b]]);
  }
  return value;
}

SparsePoly InvariantContext::primary_polynomial(const PrimaryMonomial& e) const {
  const std::size_t n = frame_.rank();
  SparsePoly result = SparsePoly::constant(n, 1);
  for (std::size_t b = 0; b < e.parts.size(); ++b) {
    const auto& block = frame_.blocks()[b];
    for (unsigned k : e.parts[b]) {
      SparsePoly local = elementary_symmetric(block.size(), k,
                                              frame_.squared_primaries());
      // relabel block-local variables
      SparsePoly factor(n);
      for (const auto& [m, c] : local.terms()) {
        std::vector<unsigned> exps(n, 0);
        for (std::size_t i = 0; i < block.size(); ++i) exps[block[i]] = m.exponent(i);
        factor.add_term(Monomial(exps), c);
      }
      result = result * factor;
    }
  }
  return result;
}

IntMatrix InvariantContext::span_matrix(std::span<const SparsePoly> thetas,
                                        unsigned d) {
  const auto& reps = basis(d);
  std::vector<unsigned> degs;
  std::size_t cols = 0;
  for (const auto& theta : thetas) {
    require(theta.is_homogeneous(), ErrorCode::domain,
            "secondary invariants must be homogeneous");
    unsigned a = theta.degree();
    degs.push_back(a);
    if (a <= d) cols += primary_monomials(d - a).size();
  }
  IntMatrix s(reps.size(), cols);
  std::vector<unsigned> block_deg;
  std::vector<std::uint64_t> ranks;
  std::size_t col0 = 0;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    if (degs[j] > d) continue;
    const auto& prim = resolved(d - degs[j]);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const Monomial m = reps[r];
      for (const auto& [t, c] : thetas[j].terms()) {
        if (!t.divides(m)) continue;
        if (!block_ranks(t.cofactor_in(m), block_deg, ranks)) continue;
        for (std::size_t e = 0; e < prim.size(); ++e) {
          const auto& pe = prim[e];
          if (pe.block_degrees != block_deg) continue;
          bool zero = false;
          for (std::size_t b = 0; b < ranks.size() && !zero; ++b)
            zero = (*pe.tables[b])[ranks[b]] == 0;
          if (zero) continue;
          std::uint64_t coef = 1;
          bool wide = false;
          for (std::size_t b = 0; b < ranks.size() && !wide; ++b)
            wide = __builtin_mul_overflow(coef, (*pe.tables[b])[ranks[b]], &coef);
          Integer big;
          if (wide) {
            big = 1;
            for (std::size_t b = 0; b < ranks.size(); ++b)
              mpz_mul_ui(big.get_mpz_t(), big.get_mpz_t(), (*pe.tables[b])[ranks[b]]);
          }
          Integer& cell = s(r, col0 + e);
          if (wide)
            cell += c * big;
          else
            mpz_addmul_ui(cell.get_mpz_t(), c.get_mpz_t(), coef);
        }
      }
    }
    col0 += prim.size();
  }
  return s;
}

std::vector<Integer> InvariantContext::coordinates(const SparsePoly& f,
                                                   unsigned d) {
  require(f.is_zero() || (f.is_homogeneous() && f.degree() == d),
          ErrorCode::domain, "expected a homogeneous invariant of degree " +
                                 std::to_string(d));
  const auto& reps = basis(d);
  std::vector<Integer> coords(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) coords[i] = f.coefficient(reps[i]);
  return coords;
}

std::vector<std::size_t> complement_rows(const IntMatrix& s,
                                         std::size_t span_rank) {
  const std::size_t n = s.rows();
  if (n == 0) return {};
  IntMatrix aug = s.cols() ? s.hconcat(IntMatrix::identity(n))
                           : IntMatrix::identity(n);
  const std::size_t offset = s.cols();
  auto split = [&](const std::vector<std::size_t>& pivots,
                   std::size_t& in_span) {
    std::vector<std::size_t> rows;
    in_span = 0;
    for (std::size_t c : pivots) {
      if (c < offset)
        ++in_span;
      else
        rows.push_back(c - offset);
    }
    return rows;
  };
  constexpr std::uint64_t primes[] = {kLargePrime, 4294967291ull, 2147483647ull,
                                      1000000007ull};
  for (std::uint64_t p : primes) {
    std::size_t in_span = 0;
    auto rows = split(modular_pivot_columns(aug, p), in_span);
    if (in_span == span_rank) return rows;
  }
  std::size_t in_span = 0;
  auto rows = split(rational_column_select(to_rational(aug), n), in_span);
  require(in_span == span_rank, ErrorCode::invariant,
          "module span has rank " + std::to_string(in_span) + ", expected " +
              std::to_string(span_rank));
  return rows;
}

}  // namespace cmprime
