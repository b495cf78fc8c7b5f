// SPDX-License-Identifier: Apache-2.0

#include "sublrc/linalg.hpp"

#include <algorithm>
#include <string>

#include "sublrc/error.hpp"

namespace sublrc {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has wrong length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::OutOfRange, "column block out of range");
  Mat out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  return out;
}

Mat Mat::hstack(const Mat& right) const {
  if (rows_ != right.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  Mat out(field_ ? field_ : right.field_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r).begin(), row(r).end(), out.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return out;
}

Mat Mat::vstack(const Mat& below) const {
  if (cols_ != below.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Mat out(field_ ? field_ : below.field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  const auto& f = *field_;
  Mat out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
    }
  return out;
}

Vec Mat::left_multiply(std::span<const Elem> v) const {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match rows");
  const auto& f = *field_;
  Vec out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    const auto src = row(r);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = f.add(out[c], f.mul(v[r], src[c]));
  }
  return out;
}

RrefResult rref(Mat m) {
  RrefResult out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.matrix = std::move(m);
    return out;
  }
  const auto& f = m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(lead).begin());
    const Elem inv = f.inv(m(lead, c));
    for (auto& x : m.row(lead)) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Elem factor = f.neg(m(r, c));
      auto dst = m.row(r);
      auto src = m.row(lead);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (src[k] != 0) dst[k] = f.add(dst[k], f.mul(factor, src[k]));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

bool solve_row_combination(const Mat& a, std::span<const Elem> target, Vec& coefficients) {
  if (target.size() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "target length does not match columns");
  // Row-reduce [a | I] and track the combination that produced each reduced row.
  const auto& f = a.field();
  const std::size_t n = a.rows();
  Mat aug = a.hstack(Mat::identity(a.field_ptr(), n));
  auto red = rref(aug);
  Vec residual(target.begin(), target.end());
  Vec combo(n, 0);
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t p = red.pivots[i];
    if (p >= a.cols()) break;
    const Elem c = residual[p];
    if (c == 0) continue;
    const auto row = red.matrix.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) residual[k] = f.sub(residual[k], f.mul(c, row[k]));
    for (std::size_t k = 0; k < n; ++k) combo[k] = f.add(combo[k], f.mul(c, row[a.cols() + k]));
  }
  for (auto x : residual)
    if (x != 0) return false;
  coefficients = std::move(combo);
  return true;
}

Subspace::Subspace(FieldPtr field, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace::Subspace(std::size_t ambient, RrefResult reduced) : ambient_(ambient) {
  Mat b(reduced.matrix.field_ptr(), reduced.rank, ambient);
  for (std::size_t r = 0; r < reduced.rank; ++r)
    std::copy(reduced.matrix.row(r).begin(), reduced.matrix.row(r).end(), b.row(r).begin());
  basis_ = std::move(b);
  pivots_ = std::move(reduced.pivots);
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  return row_space(Mat::identity(std::move(field), ambient));
}

Subspace Subspace::row_space(const Mat& m) { return Subspace(m.cols(), rref(m)); }

Subspace Subspace::column_space(const Mat& m) { return row_space(m.transpose()); }

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Mat::from_rows(std::move(field), vectors, ambient));
}

Vec Subspace::basis_vector(std::size_t i) const {
  const auto r = basis_.row(i);
  return Vec(r.begin(), r.end());
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector length does not match ambient");
  Vec out(v.begin(), v.end());
  if (dim() == 0) return out;
  const auto& f = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = out[pivots_[i]];
    if (c == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t k = pivots_[i]; k < ambient_; ++k)
      if (row[k] != 0) out[k] = f.sub(out[k], f.mul(c, row[k]));
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& x = a.basis_.data();
  const auto& y = b.basis_.data();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

Subspace null_space(const Mat& m) {
  const std::size_t n = m.cols();
  const auto red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  const auto& f = m.field();
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.matrix(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field_ptr(), n, basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
  return Subspace::row_space(a.basis().vstack(b.basis()));
}

Subspace subspace_sum(std::span<const Subspace* const> parts, FieldPtr field, std::size_t ambient) {
  std::size_t total = 0;
  for (const auto* p : parts) {
    if (p->ambient() != ambient) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
    total += p->dim();
  }
  Mat stacked(std::move(field), total, ambient);
  std::size_t r = 0;
  for (const auto* p : parts)
    for (std::size_t i = 0; i < p->dim(); ++i, ++r)
      std::copy(p->basis().row(i).begin(), p->basis().row(i).end(), stacked.row(r).begin());
  return Subspace::row_space(stacked);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::AmbientMismatch, "ambient dimensions differ");
  // Zassenhaus: rows [a | a] over [b | 0]; rows with zero left half span a∩b.
  const std::size_t m = a.ambient();
  Mat z(a.field_ptr(), a.dim() + b.dim(), 2 * m);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < m; ++k) z(i, k) = z(i, m + k) = a.basis()(i, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t k = 0; k < m; ++k) z(a.dim() + i, k) = b.basis()(i, k);
  const auto red = rref(std::move(z));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] < m) continue;
    const auto row = red.matrix.row(i);
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return Subspace::span(a.field_ptr(), m, out);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - subspace_sum(a, b).dim();
}

Vec vector_from_index(const FieldContext& field, std::size_t n, std::uint64_t index) {
  Vec v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Elem>(index % field.order());
    index /= field.order();
  }
  return v;
}

std::uint64_t vector_index(const FieldContext& field, std::span<const Elem> v) {
  std::uint64_t out = 0;
  for (auto x : v) out = out * field.order() + x;
  return out;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > limit / q) throw Error(ErrorCode::TooLarge, "count exceeds limit " + std::to_string(limit));
    out *= q;
  }
  if (out > limit) throw Error(ErrorCode::TooLarge, "count exceeds limit " + std::to_string(limit));
  return out;
}

std::vector<Vec> enumerate_vectors(const Subspace& s, std::uint64_t limit) {
  const auto& f = s.field();
  const std::uint64_t count = checked_power(f.order(), s.dim(), limit);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vec coeff = vector_from_index(f, s.dim(), idx);
    Vec v(s.ambient(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (coeff[i] == 0) continue;
      const auto row = s.basis().row(i);
      for (std::size_t k = 0; k < s.ambient(); ++k) v[k] = f.add(v[k], f.mul(coeff[i], row[k]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> coset_representatives(const Subspace& s, std::uint64_t limit) {
  const auto& f = s.field();
  const std::size_t m = s.ambient();
  std::vector<std::size_t> free_cols;
  std::vector<bool> is_pivot(m, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < m; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::uint64_t count = checked_power(f.order(), free_cols.size(), limit);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vec digits = vector_from_index(f, free_cols.size(), idx);
    Vec v(m, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = digits[i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sublrc
