// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices and canonical subspaces over GF(q).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sublrc/gf.hpp"

namespace sublrc {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);

  static Mat identity(FieldPtr field, std::size_t n);
  /// Every row must have `cols` entries.
  static Mat from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const FieldContext& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<Elem>& data() const noexcept { return data_; }

  Mat transpose() const;
  /// Columns [first, first + count).
  Mat column_block(std::size_t first, std::size_t count) const;
  /// Columns in the given order.
  Mat select_columns(std::span<const std::size_t> cols) const;
  Mat hstack(const Mat& right) const;
  Mat vstack(const Mat& below) const;
  /// Throws DimensionMismatch.
  Mat operator*(const Mat& rhs) const;
  /// v^T * this. Throws DimensionMismatch unless v.size() == rows().
  Vec left_multiply(std::span<const Elem> v) const;

  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Mat matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with unit pivots.
RrefResult rref(Mat m);
std::size_t rank(const Mat& m);

/// Solves x^T * a = target^T, i.e. expresses `target` as a combination of the
/// rows of `a`. Returns false when target is outside the row space.
bool solve_row_combination(const Mat& a, std::span<const Elem> target, Vec& coefficients);

/// A subspace of F_q^M stored as the RREF of a row basis. Two subspaces are
/// equal iff their bases are entry-wise equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F_q^ambient.
  Subspace(FieldPtr field, std::size_t ambient);

  static Subspace full(FieldPtr field, std::size_t ambient);
  static Subspace row_space(const Mat& m);
  static Subspace column_space(const Mat& m);
  static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);

  const FieldPtr& field_ptr() const noexcept { return basis_.field_ptr(); }
  const FieldContext& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// dim() x ambient() in RREF.
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec basis_vector(std::size_t i) const;

  /// Zeroes the pivot coordinates of v using the basis; the result is the
  /// lexicographically smallest member of the coset v + this.
  Vec reduce(std::span<const Elem> v) const;
  /// Throws AmbientMismatch.
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Lexicographic on (dim, RREF entries).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  Subspace(std::size_t ambient, RrefResult reduced);

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m * x = 0}, a subspace of F_q^{cols}.
Subspace null_space(const Mat& m);
/// Throws AmbientMismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_sum(std::span<const Subspace* const> parts, FieldPtr field, std::size_t ambient);
Subspace intersection(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// i-th vector of F_q^n in lexicographic order (first coordinate most significant).
Vec vector_from_index(const FieldContext& field, std::size_t n, std::uint64_t index);
std::uint64_t vector_index(const FieldContext& field, std::span<const Elem> v);

/// All q^k vectors of s, coefficient-lexicographic (which coincides with
/// lexicographic order on the vectors). Throws TooLarge above `limit`.
std::vector<Vec> enumerate_vectors(const Subspace& s, std::uint64_t limit = std::uint64_t{1} << 20);
/// One representative per coset of s, the lexicographically smallest member,
/// in lexicographic order. Throws TooLarge above `limit`.
std::vector<Vec> coset_representatives(const Subspace& s, std::uint64_t limit = std::uint64_t{1} << 20);

/// Checked q^k for counting; throws TooLarge when it exceeds `limit`.
std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t limit);

}  // namespace sublrc
