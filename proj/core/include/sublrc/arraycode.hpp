// SPDX-License-Identifier: Apache-2.0
//
// Linear array codes over GF(q) described by their associated subspaces.
//
// A [b x n, M, d] array code is generated by an M x bn matrix G made of n
// thick columns of b columns each. Thick column j spans the associated
// subspace V_j; codeword columns are the storage nodes and the weight of a
// codeword counts its nonzero columns.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sublrc/designs.hpp"
#include "sublrc/limits.hpp"
#include "sublrc/linalg.hpp"

namespace sublrc {

using Rational = boost::multiprecision::cpp_rational;

/// b x n array over GF(q).
using Codeword = Mat;

class ArrayCode {
 public:
  ArrayCode() = default;

  /// Thick column j is the transpose of the RREF basis of subspaces[j],
  /// right-padded with zero columns up to b. Throws AmbientMismatch,
  /// DimensionTooLarge, or BadParams when the subspaces do not span F_q^M.
  static ArrayCode from_subspaces(const std::vector<Subspace>& subspaces, std::size_t b, std::size_t ambient,
                                  std::string provenance);
  /// Uses G as given. Throws DimensionMismatch unless b divides its column
  /// count, BadParams unless G has full row rank.
  static ArrayCode from_generator(Mat generator, std::size_t b, std::string provenance);

  const FieldPtr& field_ptr() const noexcept { return generator_.field_ptr(); }
  const FieldContext& field() const noexcept { return generator_.field(); }
  std::size_t b() const noexcept { return b_; }
  std::size_t n() const noexcept { return n_; }
  /// M, the dimension over GF(q).
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Mat& generator() const noexcept { return generator_; }
  const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
  const Subspace& subspace(std::size_t j) const { return subspaces_.at(j); }
  const std::string& provenance() const noexcept { return provenance_; }

  Mat thick_column(std::size_t j) const { return generator_.column_block(j * b_, b_); }
  /// Column (j*b + i) of G, the generator vector of symbol (i, j).
  Vec symbol_vector(std::size_t i, std::size_t j) const { return generator_.column(j * b_ + i); }
  bool full_column_rank() const;

 private:
  Mat generator_;
  std::size_t b_ = 0;
  std::size_t n_ = 0;
  std::vector<Subspace> subspaces_;
  std::string provenance_;
};

// ---- constructions -------------------------------------------------------

/// One thick column per b-dimensional subspace of F_q^M, in Grassmannian order.
ArrayCode construction_all_subspaces(const FieldPtr& field, std::size_t ambient, std::size_t b,
                                     const Limits& limits = {});
/// One thick column per block of a b-spread of F_q^M. Throws NotDivisible.
ArrayCode construction_spread(const FieldPtr& field, std::size_t ambient, std::size_t b,
                              SpreadMethod method = SpreadMethod::GabidulinEchelon, const Limits& limits = {});
/// One thick column per given block. Throws DuplicateBlock, MixedDimensions.
ArrayCode construction_from_blocks(const std::vector<Subspace>& blocks, std::string provenance = "blocks");

enum class StdScope { Parallel, Full };

/// Codes from the resolvable STD_q(t, b, M-b): a single parallel class
/// (`Parallel`, selected by `class_index`) or all blocks (`Full`).
/// Throws BadParams unless M >= 2b and 1 <= t <= b.
ArrayCode construction_std(const FieldPtr& field, std::size_t t, std::size_t b, std::size_t ambient, StdScope scope,
                           std::size_t class_index = 0, const Limits& limits = {});

// ---- codewords -----------------------------------------------------------

/// flatten(message^T G) reshaped to b x n. Throws DimensionMismatch.
Codeword encode(const ArrayCode& code, std::span<const Elem> message);
/// Reads column by column, top to bottom.
Vec flatten(const Codeword& word);
Codeword unflatten(const FieldPtr& field, std::span<const Elem> flat, std::size_t b, std::size_t n);
/// Number of nonzero columns.
std::size_t weight(const Codeword& word);
/// Number of nonzero symbols.
std::size_t symbol_weight(const Codeword& word);

using WeightDistribution = std::map<std::size_t, std::uint64_t>;

/// Exhaustive over all q^M messages, split over `threads` disjoint message
/// ranges (0 picks the hardware concurrency). Throws TooLarge when q^M
/// exceeds limits.exhaustive.
WeightDistribution weight_distribution(const ArrayCode& code, const Limits& limits = {}, unsigned threads = 1);
/// Minimum nonzero weight by exhaustive scan, stopping early once a codeword
/// of weight `lower_bound` is seen. Returns nullopt for the zero code.
std::optional<std::size_t> min_distance(const ArrayCode& code, const Limits& limits = {},
                                        std::size_t lower_bound = 1);
/// Distance of the dual code computed on G as a parity-check matrix: the
/// fewest thick columns whose generator columns are linearly dependent.
/// Returns nullopt when the dual is the zero code.
std::optional<std::size_t> dual_distance(const ArrayCode& code, const Limits& limits = {});

/// Generator of the dual is an RREF basis of the null space of G.
ArrayCode dual(const ArrayCode& code);

/// d == n - M/b + 1. Throws NotDivisible unless b | M.
bool is_mds(const ArrayCode& code, std::size_t distance);

struct Perfectness {
  BigInt ball_size;   // 1 + n (q^b - 1)
  BigInt code_size;   // q^M
  BigInt space_size;  // q^{bn}
  Rational ratio;     // code_size * ball_size / space_size
  bool perfect = false;
};
Perfectness perfectness(const ArrayCode& code);

struct CodeReport {
  std::size_t b = 0;
  std::size_t n = 0;
  std::size_t dimension = 0;
  std::optional<std::size_t> distance;
  WeightDistribution weights;
  bool full_column_rank = false;
  std::optional<bool> mds;  // nullopt when b does not divide M
  Perfectness perfect;
  std::vector<std::string> skipped;
};

/// Exhaustive distance and weight distribution when within limits; entries
/// that exceed limits are listed in `skipped`.
CodeReport analyze_code(const ArrayCode& code, const Limits& limits = {}, unsigned threads = 1);

}  // namespace sublrc
