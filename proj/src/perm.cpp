#include "cmprime/perm.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace cmprime {

SignedPermutation::SignedPermutation(std::size_t n) {
  require(n >= 1 && n <= kMaxRank, ErrorCode::unsupported,
          "rank " + std::to_string(n) + " outside supported range 1.." +
              std::to_string(kMaxRank));
  n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

SignedPermutation::SignedPermutation(std::span<const std::size_t> images,
                                     std::span<const bool> negative)
    : SignedPermutation(images.size()) {
  require(negative.empty() || negative.size() == images.size(),
          ErrorCode::domain, "sign vector length differs from rank");
  std::array<bool, kMaxRank> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    require(images[i] < images.size(), ErrorCode::domain,
            "image index out of range");
    require(!seen[images[i]], ErrorCode::domain, "images are not a bijection");
    seen[images[i]] = true;
    images_[i] = static_cast<std::uint8_t>(images[i]);
    if (!negative.empty() && negative[i])
      negative_mask_ |= static_cast<std::uint8_t>(1u << i);
  }
}

SignedPermutation SignedPermutation::from_cycles(
    std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  SignedPermutation result(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    std::vector<bool> in_cycle(n, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t a = cycle[k];
      require(a >= 1 && a <= n, ErrorCode::domain,
              "cycle point " + std::to_string(a) + " out of range 1.." +
                  std::to_string(n));
      require(!in_cycle[a - 1], ErrorCode::domain,
              "point " + std::to_string(a) + " repeated within a cycle");
      in_cycle[a - 1] = true;
      map[a - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
    result = SignedPermutation(map) * result;
  }
  return result;
}

SignedPermutation SignedPermutation::from_signed_images(
    std::span<const int> entries) {
  require(!entries.empty() && entries.size() <= kMaxRank,
          ErrorCode::unsupported, "signed image list has unsupported length");
  std::vector<std::size_t> images;
  std::array<bool, kMaxRank> negative{};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int e = entries[i];
    require(e != 0, ErrorCode::domain, "signed image 0 is not allowed");
    images.push_back(static_cast<std::size_t>(std::abs(e)) - 1);
    negative[i] = e < 0;
  }
  return SignedPermutation(
      images, std::span<const bool>(negative.data(), images.size()));
}

bool SignedPermutation::is_identity() const noexcept {
  if (negative_mask_ != 0) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (images_[i] != i) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv = *this;
  inv.negative_mask_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
    // g.x_i = s_i x_{g(i)}  =>  g^{-1}.x_{g(i)} = s_i x_i
    if (sign(i) < 0)
      inv.negative_mask_ |= static_cast<std::uint8_t>(1u << images_[i]);
  }
  return inv;
}

SignedPermutation operator*(const SignedPermutation& a,
                            const SignedPermutation& b) {
  require(a.n_ == b.n_, ErrorCode::domain, "rank mismatch in composition");
  SignedPermutation c = b;
  c.negative_mask_ = 0;
  for (std::size_t i = 0; i < b.n_; ++i) {
    std::size_t mid = b.images_[i];
    c.images_[i] = a.images_[mid];
    if (b.sign(i) * a.sign(mid) < 0)
      c.negative_mask_ |= static_cast<std::uint8_t>(1u << i);
  }
  return c;
}

std::strong_ordering operator<=>(const SignedPermutation& a,
                                 const SignedPermutation& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i) {
    bool na = (a.negative_mask_ >> i) & 1u;
    bool nb = (b.negative_mask_ >> i) & 1u;
    if (na != nb) return na ? std::strong_ordering::greater
                            : std::strong_ordering::less;
  }
  for (std::size_t i = 0; i < a.n_; ++i)
    if (auto c = a.images_[i] <=> b.images_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::uint64_t SignedPermutation::key() const noexcept {
  std::uint64_t k = n_;
  k = (k << 8) | negative_mask_;
  for (std::size_t i = 0; i < n_; ++i) k = (k << 4) | images_[i];
  return k;
}

ReflectionKind SignedPermutation::reflection_kind() const {
  std::vector<std::size_t> moved;
  std::vector<std::size_t> flipped_fixed;
  for (std::size_t i = 0; i < n_; ++i) {
    if (images_[i] != i)
      moved.push_back(i);
    else if (sign(i) < 0)
      flipped_fixed.push_back(i);
  }
  if (moved.empty() && flipped_fixed.size() == 1) return ReflectionKind::diagonal;
  if (moved.size() == 2 && flipped_fixed.empty() &&
      images_[moved[0]] == moved[1]) {
    int s0 = sign(moved[0]);
    int s1 = sign(moved[1]);
    if (s0 == s1)
      return s0 > 0 ? ReflectionKind::transposition
                    : ReflectionKind::signed_transposition;
  }
  return ReflectionKind::none;
}

std::vector<std::size_t> SignedPermutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::array<bool, kMaxRank> seen{};
  for (std::size_t i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  if (is_signed()) {
    os << '[';
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) os << ',';
      os << sign(i) * static_cast<int>(images_[i] + 1);
    }
    os << ']';
    return os.str();
  }
  std::array<bool, kMaxRank> seen{};
  bool any = false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ',';
      os << j + 1;
      seen[j] = true;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

namespace {

std::size_t ambient_order_limit(std::size_t n, bool is_signed) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return is_signed ? f << n : f;
}

}  // namespace

Group Group::generate(std::size_t n,
                      std::vector<SignedPermutation> generators) {
  require(n >= 1 && n <= kMaxRank, ErrorCode::unsupported,
          "rank " + std::to_string(n) + " exceeds the enumeration limit " +
              std::to_string(kMaxRank));
  Group g;
  g.n_ = n;
  for (const auto& s : generators) {
    require(s.rank() == n, ErrorCode::domain,
            "generator " + s.to_string() + " has rank " +
                std::to_string(s.rank()) + ", expected " + std::to_string(n));
    g.signed_ = g.signed_ || s.is_signed();
  }
  require(!g.signed_ || n <= kMaxSignedRank, ErrorCode::unsupported,
          "signed groups are supported up to rank " +
              std::to_string(kMaxSignedRank));
  g.generators_ = std::move(generators);

  const std::size_t limit = ambient_order_limit(n, g.signed_);
  SignedPermutation id(n);
  std::vector<SignedPermutation> found{id};
  std::unordered_map<std::uint64_t, std::size_t> seen{{id.key(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    SignedPermutation x = found[queue.front()];
    queue.pop_front();
    for (const auto& s : g.generators_) {
      SignedPermutation y = s * x;
      if (seen.emplace(y.key(), found.size()).second) {
        found.push_back(y);
        queue.push_back(found.size() - 1);
        require(found.size() <= limit, ErrorCode::invariant,
                "group closure exceeded the ambient order");
      }
    }
  }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);
  g.index_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.index_.emplace(g.elements_[i].key(), i);
  return g;
}

bool Group::contains(const SignedPermutation& g) const {
  return index_.count(g.key()) != 0;
}

std::size_t Group::index_of(const SignedPermutation& g) const {
  auto it = index_.find(g.key());
  return it == index_.end() ? npos : it->second;
}

std::vector<std::vector<std::size_t>> Group::point_orbits() const {
  std::vector<std::size_t> root(n_);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& s : generators_)
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t a = find(i), b = find(s.image(i));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < n_; ++i) orbits[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [_, pts] : orbits) out.push_back(std::move(pts));
  return out;
}

Group group_from_generators(std::size_t n,
                            std::vector<SignedPermutation> generators) {
  return Group::generate(n, std::move(generators));
}

Group symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> block(1);
  for (std::size_t i = 0; i < n; ++i) block[0].push_back(i);
  return young_group(n, block);
}

Group hyperoctahedral_group(std::size_t n) {
  auto gens = symmetric_group(n).generators();
  std::array<bool, kMaxRank> flip{};
  flip[0] = true;
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  gens.emplace_back(id, std::span<const bool>(flip.data(), n));
  return Group::generate(n, std::move(gens));
}

Group young_group(std::size_t n,
                  const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<SignedPermutation> gens;
  for (const auto& b : blocks) {
    // adjacent transpositions within the block
    for (std::size_t k = 0; k + 1 < b.size(); ++k)
      gens.push_back(SignedPermutation::from_cycles(n, {{b[k] + 1, b[k + 1] + 1}}));
  }
  if (gens.empty()) gens.emplace_back(n);
  return Group::generate(n, std::move(gens));
}

std::size_t count_reflections(const Group& group) {
  return static_cast<std::size_t>(
      std::count_if(group.elements().begin(), group.elements().end(),
                    [](const SignedPermutation& g) {
                      return g.reflection_kind() != ReflectionKind::none;
                    }));
}

std::map<std::size_t, std::size_t> cycle_type_on_set(
    std::span<const std::size_t> action) {
  const std::size_t m = action.size();
  std::vector<bool> hit(m, false);
  for (std::size_t x : action) {
    require(x < m, ErrorCode::domain, "action leaves the set");
    require(!hit[x], ErrorCode::domain, "action is not a bijection");
    hit[x] = true;
  }
  std::map<std::size_t, std::size_t> type;
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = action[j]) {
      seen[j] = true;
      ++len;
    }
    ++type[len];
  }
  return type;
}

}  // namespace cmprime
