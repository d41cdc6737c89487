#pragma once

// Exact integer matrices and lattices. Row convention throughout: a matrix
// acts on row vectors from the right, v -> v * M, and a lattice is the row
// span of its basis.

#include "pi2/bigint.hpp"

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pi2 {

using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void set_row(std::size_t r, std::span<const BigInt> v);
  void append_row(std::span<const BigInt> v);
  bool row_is_zero(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

  void swap_cols(std::size_t a, std::size_t b);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_col(std::size_t c);

  IntMatrix transpose() const;
  /// Rows [begin, end).
  IntMatrix row_block(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end).
  IntMatrix col_block(std::size_t begin, std::size_t end) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  nlohmann::ordered_json to_json() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// v * M for a row vector v.
IntVector row_times(std::span<const BigInt> v, const IntMatrix& m);
bool is_zero(std::span<const BigInt> v);

struct HnfResult {
  IntMatrix h;                      // U * m, row Hermite normal form
  IntMatrix u;                      // unimodular
  std::size_t rank = 0;             // nonzero rows of h come first
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Row Hermite normal form: pivots positive and strictly increasing to the
/// right, entries above a pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;  // U * m * V, diagonal with d_1 | d_2 | ..., non-negative
  IntMatrix u;
  IntMatrix v;
  int det_sign = 1;  // det(U) * det(V)
};

SnfResult snf(const IntMatrix& m);

/// Nonzero invariant factors of m.
std::vector<BigInt> invariant_factors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Signed determinant of a square matrix via the Smith form diagonal.
BigInt determinant(const IntMatrix& m);

/// A finitely generated subgroup of Z^n, held as its unique row HNF basis.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Zero lattice in Z^dim.
  explicit IntegerLattice(std::size_t dim) : dim_(dim), basis_(0, dim) {}
  /// Row span of the generators.
  static IntegerLattice span(const IntMatrix& generators);
  static IntegerLattice span(std::span<const IntVector> generators, std::size_t dim);
  static IntegerLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.rows() == 0; }

  bool contains(std::span<const BigInt> v) const;
  bool contains(const IntegerLattice& other) const;
  /// Coordinates c with c * basis = v, if v lies in the lattice.
  std::optional<IntVector> coordinates(std::span<const BigInt> v) const;

  bool operator==(const IntegerLattice&) const = default;

  nlohmann::ordered_json to_json() const;

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
};

/// Left kernel {v : v * m = 0}; saturated by construction.
IntegerLattice kernel_basis(const IntMatrix& m);

/// {v in Z^rows : v * m = 0 (mod modulus) componentwise}.
IntegerLattice kernel_mod(const IntMatrix& m, const BigInt& modulus);

/// Some integer x with x * m = target, or nullopt.
std::optional<IntVector> solve(const IntMatrix& m, std::span<const BigInt> target);

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);
bool lattice_contains(const IntegerLattice& a, std::span<const BigInt> v);
/// [b : a] for a subset of b; nullopt when the index is infinite.
/// Throws std::invalid_argument when a is not contained in b.
std::optional<BigInt> lattice_index(const IntegerLattice& a, const IntegerLattice& b);

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b);

/// Smallest pure sublattice containing a: (a tensor Q) intersected with Z^n.
IntegerLattice saturation(const IntegerLattice& a);

}  // namespace pi2
