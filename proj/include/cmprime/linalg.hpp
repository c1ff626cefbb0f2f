#pragma once

#include "cmprime/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cmprime {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Appends the columns of `other` (same row count) on the right.
  Matrix hconcat(const Matrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// P * A * Q = D with P, Q unimodular and D diagonal with m1 | m2 | ...
struct SNFResult {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;
  /// Diagonal of D, length min(rows, cols); nonnegative, zeros last.
  std::vector<Integer> divisors;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// gcd of all maximal (cols x cols) minors; requires rows >= cols.
/// Uses minor enumeration for cols <= 3 and the Smith form otherwise.
Integer minor_gcd(const IntMatrix& a);
/// Minor-enumeration route, kept separately for cross-checking.
Integer minor_gcd_by_enumeration(const IntMatrix& a);
/// Smith-form route.
Integer minor_gcd_by_snf(const IntMatrix& a);

/// Bareiss fraction-free elimination with row pivoting.
Integer fraction_free_determinant(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
std::size_t rational_rank(const RatMatrix& a);

/// Leftmost-pivot column subset of `a` that attains its rank (0-based).
/// Throws if the rank is below `target_rank`.
std::vector<std::size_t> rational_column_select(const RatMatrix& a,
                                                std::size_t target_rank);

/// Solves a x = b exactly; nullopt when b is outside the column space.
/// Free variables, if any, are set to zero.
std::optional<std::vector<Rational>> rational_solve(
    const RatMatrix& a, const std::vector<Rational>& b);

// Arithmetic over F_p for primes p < 2^63.

/// Leftmost pivot columns of a reduced modulo p; the count is the rank.
std::vector<std::size_t> modular_pivot_columns(const IntMatrix& a,
                                               std::uint64_t p);
std::size_t modular_rank(const IntMatrix& a, std::uint64_t p);

inline constexpr std::uint64_t kLargePrime = (std::uint64_t{1} << 61) - 1;

}  // namespace cmprime
