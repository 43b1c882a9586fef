#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mmx {

using Integer = mpz_class;
using Exponent = std::uint64_t;

/// Dense row-major matrix of arbitrary-precision integers. Empty shapes
/// (zero rows or zero columns) are valid.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries, std::size_t rows,
                            std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

struct PrimePower {
  Integer prime;
  Exponent exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Inputs at or above this bound cannot be certified prime by the
/// deterministic Miller-Rabin base set and are rejected.
const Integer& primality_limit();

/// Deterministic Miller-Rabin. Throws Unsupported at or above
/// primality_limit().
bool is_prime(const Integer& n);

/// Prime factorization of |n| with strictly increasing primes.
/// Throws ZeroInput for n = 0 and Unsupported when a factor cannot be
/// certified within the desk-scale limits.
std::vector<PrimePower> factorize(const Integer& n);

/// Largest e with p^e | n. Throws ZeroInput for n = 0.
Exponent valuation(const Integer& p, const Integer& n);

Integer pow(const Integer& base, Exponent e);

struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // U
  IntMatrix right;  // V
  std::size_t rank = 0;
};

/// U * A * V = D with D diagonal, d1 | d2 | ... and all d_i >= 0; U and V
/// unimodular. Pivots are chosen by least nonzero absolute value, ties to the
/// lowest (row, col) in row-major order.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace mmx
