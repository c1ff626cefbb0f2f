#include "cmprime/linalg.hpp"

#include "cmprime/error.hpp"

#include <algorithm>
#include <utility>

namespace cmprime {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorCode::domain, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
Matrix<T> Matrix<T>::row_block(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, ErrorCode::domain, "row block out of range");
  Matrix b(count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_),
            b.data_.begin());
  return b;
}

template <typename T>
Matrix<T> Matrix<T>::hconcat(const Matrix& other) const {
  require(other.rows_ == rows_, ErrorCode::domain, "row count mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template class Matrix<Integer>;
template class Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), ErrorCode::domain,
          "matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

// Row op on both the working matrix and the left transform:
// row[dst] -= q * row[src].
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

// Smallest nonzero |entry| in the block [t.., t..]; ties by row then column.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& v = a(i, j);
      if (v == 0) continue;
      if (!found || cmp_abs(v, best) < 0) {
        best = v;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& input) {
  require(!input.empty(), ErrorCode::domain, "Smith form of an empty matrix");
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  IntMatrix a = input;
  IntMatrix p = IntMatrix::identity(rows);
  IntMatrix q = IntMatrix::identity(cols);
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    p.swap_rows(t, pr);
    a.swap_cols(t, pc);
    q.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer quo;
        mpz_tdiv_q(quo.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, t, quo);
        row_axpy(p, i, t, quo);
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer quo;
        mpz_tdiv_q(quo.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(a, j, t, quo);
        col_axpy(q, j, t, quo);
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && cmp_abs(a(i, t), a(br, bc)) < 0) br = i, bc = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && cmp_abs(a(t, j), a(br, bc)) < 0) br = t, bc = j;
        a.swap_rows(t, br);
        p.swap_rows(t, br);
        a.swap_cols(t, bc);
        q.swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(a(t, t), a(i, j))) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_axpy(a, t, bad_row, Integer(-1));
      row_axpy(p, t, bad_row, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) p(t, j) = -p(t, j);
    }
  }

  SNFResult r;
  r.divisors.reserve(diag);
  for (std::size_t t = 0; t < diag; ++t) r.divisors.push_back(a(t, t));
  r.P = std::move(p);
  r.D = std::move(a);
  r.Q = std::move(q);
  return r;
}

Integer minor_gcd_by_snf(const IntMatrix& a) {
  require(a.rows() >= a.cols(), ErrorCode::domain,
          "minor gcd requires rows >= cols");
  SNFResult s = smith_normal_form(a);
  Integer prod = 1;
  for (const auto& m : s.divisors) prod *= m;
  return prod;
}

Integer minor_gcd_by_enumeration(const IntMatrix& a) {
  require(a.rows() >= a.cols(), ErrorCode::domain,
          "minor gcd requires rows >= cols");
  const std::size_t k = a.cols();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  Integer g = 0;
  for (;;) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(pick[i], j);
    g = gcd(g, fraction_free_determinant(sub));
    // next k-subset of rows in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == a.rows() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

Integer minor_gcd(const IntMatrix& a) {
  return a.cols() <= 3 ? minor_gcd_by_enumeration(a) : minor_gcd_by_snf(a);
}

Integer fraction_free_determinant(const IntMatrix& input) {
  require(input.rows() == input.cols(), ErrorCode::domain,
          "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

namespace {

// Row-echelon form in place over Q; returns pivot columns (leftmost).
std::vector<std::size_t> rational_echelon(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t r = row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(row, r);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(row, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const RatMatrix& a) {
  RatMatrix w = a;
  return rational_echelon(w).size();
}

std::vector<std::size_t> rational_column_select(const RatMatrix& a,
                                                std::size_t target_rank) {
  RatMatrix w = a;
  auto pivots = rational_echelon(w);
  require(pivots.size() >= target_rank, ErrorCode::invariant,
          "matrix rank " + std::to_string(pivots.size()) +
              " is below the target rank " + std::to_string(target_rank));
  return pivots;
}

std::optional<std::vector<Rational>> rational_solve(
    const RatMatrix& a, const std::vector<Rational>& b) {
  require(b.size() == a.rows(), ErrorCode::domain, "right-hand side length");
  RatMatrix w(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) w(i, j) = a(i, j);
    w(i, a.cols()) = b[i];
  }
  auto pivots = rational_echelon(w);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    Rational s = w(k, a.cols());
    for (std::size_t j = c + 1; j < a.cols(); ++j) s -= w(k, j) * x[j];
    x[c] = s / w(k, c);
  }
  return x;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Multiplication modulo 2^61 - 1 without a division.
struct MersenneMul {
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(t) & kLargePrime) +
                      static_cast<std::uint64_t>(t >> 61);
    return r >= kLargePrime ? r - kLargePrime : r;
  }
};

struct SmallMul {  // p < 2^32
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    return a * b % p;
  }
};

struct WideMul {
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    return mulmod(a, b, p);
  }
};

template <typename Mul>
std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& m,
                                   std::size_t rows, std::size_t cols,
                                   std::uint64_t p, Mul mul) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t r = row;
    while (r < rows && m[r * cols + c] == 0) ++r;
    if (r == rows) continue;
    if (r != row)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(m[r * cols + j], m[row * cols + j]);
    std::uint64_t inv = powmod(m[row * cols + c], p - 2, p);
    std::uint64_t* pivot_row = &m[row * cols];
    for (std::size_t j = c; j < cols; ++j) pivot_row[j] = mul(pivot_row[j], inv);
    for (std::size_t i = row + 1; i < rows; ++i) {
      std::uint64_t* target = &m[i * cols];
      std::uint64_t f = target[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (pivot_row[j] == 0) continue;
        std::uint64_t v = mul(f, pivot_row[j]);
        target[j] = target[j] >= v ? target[j] - v : target[j] + p - v;
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> modular_pivot_columns(const IntMatrix& a,
                                               std::uint64_t p) {
  require(p >= 2 && p < (std::uint64_t{1} << 63), ErrorCode::domain,
          "modulus out of range");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::uint64_t> m(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = residue(a(i, j), p);
  if (p == kLargePrime) return eliminate(m, rows, cols, p, MersenneMul{});
  if (p < (std::uint64_t{1} << 32)) return eliminate(m, rows, cols, p, SmallMul{p});
  return eliminate(m, rows, cols, p, WideMul{p});
}

std::size_t modular_rank(const IntMatrix& a, std::uint64_t p) {
  return modular_pivot_columns(a, p).size();
}

}  // namespace cmprime
