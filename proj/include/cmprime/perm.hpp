#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmprime {

/// Largest rank for which the ambient symmetric group is enumerated.
inline constexpr std::size_t kMaxRank = 8;
/// Largest rank for which the hyperoctahedral group is enumerated.
inline constexpr std::size_t kMaxSignedRank = 6;

enum class ReflectionKind {
  none,
  transposition,         ///< x_i <-> x_j, hyperplane x_i - x_j
  signed_transposition,  ///< x_i -> -x_j, x_j -> -x_i, hyperplane x_i + x_j
  diagonal,              ///< x_i -> -x_i, hyperplane x_i
};

/// A signed permutation of rank n <= kMaxRank acting on variables by
/// g.x_i = sign(i) * x_{image(i)}. Indices are 0-based internally.
/// Unsigned permutations are the elements whose signs are all +1.
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::size_t n);

  /// images[i] is the 0-based image of i; negative[i] flips the sign.
  SignedPermutation(std::span<const std::size_t> images,
                    std::span<const bool> negative = {});

  /// Product of disjoint or overlapping cycles given with 1-based points,
  /// composed right to left.
  static SignedPermutation from_cycles(
      std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  /// Image-list notation: entry i (1-based, possibly negated) is the signed
  /// image of x_{i+1}; e.g. {-2, 1, 3} sends x1 -> -x2.
  static SignedPermutation from_signed_images(std::span<const int> entries);

  std::size_t rank() const noexcept { return n_; }
  std::size_t image(std::size_t i) const noexcept { return images_[i]; }
  int sign(std::size_t i) const noexcept {
    return (negative_mask_ >> i) & 1u ? -1 : 1;
  }
  bool is_signed() const noexcept { return negative_mask_ != 0; }
  bool is_identity() const noexcept;

  SignedPermutation inverse() const;
  /// Composition: (a * b) acts as a after b.
  friend SignedPermutation operator*(const SignedPermutation& a,
                                     const SignedPermutation& b);

  /// Canonical order: lexicographic on the sign vector (+ before -), then on
  /// the image vector.
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b);
  friend bool operator==(const SignedPermutation& a,
                         const SignedPermutation& b) = default;

  std::uint64_t key() const noexcept;

  ReflectionKind reflection_kind() const;

  /// Cycle lengths of the underlying unsigned permutation on points.
  std::vector<std::size_t> cycle_lengths() const;

  /// Cycle notation for unsigned elements, image-list notation otherwise.
  std::string to_string() const;

private:
  std::array<std::uint8_t, kMaxRank> images_{};
  std::uint8_t negative_mask_ = 0;
  std::uint8_t n_ = 0;
};

/// A finite group of signed permutations given by its full element list.
class Group {
public:
  Group() = default;

  /// Closure of `generators` under composition. Elements are sorted in the
  /// canonical order, so elements().front() is the identity.
  static Group generate(std::size_t n,
                        std::vector<SignedPermutation> generators);

  std::size_t rank() const noexcept { return n_; }
  const std::vector<SignedPermutation>& generators() const noexcept {
    return generators_;
  }
  const std::vector<SignedPermutation>& elements() const noexcept {
    return elements_;
  }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_signed() const noexcept { return signed_; }

  bool contains(const SignedPermutation& g) const;
  /// Position of g in elements(), or npos.
  std::size_t index_of(const SignedPermutation& g) const;

  /// Orbits of the underlying permutation action on {0..n-1}, each sorted,
  /// listed by smallest point.
  std::vector<std::vector<std::size_t>> point_orbits() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t n_ = 0;
  bool signed_ = false;
  std::vector<SignedPermutation> generators_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

Group group_from_generators(std::size_t n,
                            std::vector<SignedPermutation> generators);

Group symmetric_group(std::size_t n);
Group hyperoctahedral_group(std::size_t n);
/// Direct product of the symmetric groups on the given blocks of points.
Group young_group(std::size_t n,
                  const std::vector<std::vector<std::size_t>>& blocks);

/// Number of elements of G that fix a hyperplane pointwise.
std::size_t count_reflections(const Group& group);

/// Cycle type of a permutation of a finite set given as an image table:
/// maps cycle length i to the number b_i of cycles of that length.
std::map<std::size_t, std::size_t> cycle_type_on_set(
    std::span<const std::size_t> action);

}  // namespace cmprime
