// SPDX-License-Identifier: Apache-2.0
//
// Subspace combinatorics: Gaussian coefficients, Grassmannians, rank-metric
// (MRD / Gabidulin) codes, spreads and resolvable subspace transversal designs.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sublrc/gf.hpp"
#include "sublrc/limits.hpp"
#include "sublrc/linalg.hpp"

namespace sublrc {

using BigInt = boost::multiprecision::cpp_int;

/// Number of k-dimensional subspaces of F_q^n. Throws OutOfRange unless k <= n.
BigInt gaussian(unsigned n, unsigned k, std::uint64_t q);
/// Same, as a machine integer; throws TooLarge when it does not fit.
std::uint64_t gaussian_u64(unsigned n, unsigned k, std::uint64_t q);

/// Number of k'-dimensional subspaces of F_q^n meeting a fixed k-dimensional
/// subspace in exactly an i-dimensional subspace:
///   q^{(k'-i)(k-i)} [n-k, k'-i]_q [k, i]_q.
/// Throws OutOfRange for inadmissible parameters.
BigInt count_intersecting(unsigned n, unsigned k, unsigned k_prime, unsigned i, std::uint64_t q);

/// All k-dimensional subspaces of F_q^M sorted by (RREF) basis entries.
std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t ambient, std::size_t k,
                                             std::uint64_t limit = std::uint64_t{1} << 20);

/// Linear rank-metric code of rows x cols matrices over GF(q).
struct MrdCode {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t min_rank_distance = 0;
  std::vector<Mat> codewords;
};

/// Dimension-one Gabidulin code: for each a in GF(q^s) (in encoding order)
/// the b x s matrix whose i-th row expands a * g_i, with g_i the i-th fixed
/// basis element of GF(q^s). Throws BadParams unless 1 <= b <= s.
MrdCode build_mrd_fullrank(const FieldPtr& field, std::size_t b, std::size_t s,
                           std::uint64_t limit = std::uint64_t{1} << 20);

/// Gabidulin code over GF(q^m): evaluations (f(g_1), ..., f(g_n)) of every
/// linearized polynomial f(x) = sum_{j<t} a_j x^{q^j}. Codeword index is
/// sum_j a_j Q^j with Q = q^m, so a_0 varies fastest. Throws BadParams unless
/// 1 <= t <= n <= m.
std::vector<Vec> build_gabidulin(const ExtensionContext& ext, std::size_t n, std::size_t t,
                                 std::uint64_t limit = std::uint64_t{1} << 20);

/// n x m matrix over the base field whose rows expand the codeword entries.
Mat expand_codeword(const ExtensionContext& ext, std::span<const Elem> codeword);

/// Wraps a Gabidulin code as matrices.
MrdCode gabidulin_as_mrd(const ExtensionContext& ext, std::size_t n, std::size_t t,
                         std::uint64_t limit = std::uint64_t{1} << 20);

enum class SpreadMethod { GabidulinEchelon, Desarguesian };

std::string to_string(SpreadMethod method);
/// Accepts "gabidulin-echelon" and "desarguesian"; throws Parse otherwise.
SpreadMethod parse_spread_method(std::string_view name);

struct SpreadDesign {
  FieldPtr field;
  std::size_t ambient = 0;
  std::size_t block_dim = 0;
  std::vector<Subspace> blocks;
  SpreadMethod method = SpreadMethod::GabidulinEchelon;
  /// Positions of the coordinate-block subspaces rowspace[0 .. I_b .. 0].
  std::vector<std::size_t> unit_blocks;
};

/// Throws NotDivisible unless b | M, BadParams for b == 0.
SpreadDesign build_spread(const FieldPtr& field, std::size_t ambient, std::size_t b,
                          SpreadMethod method = SpreadMethod::GabidulinEchelon,
                          const Limits& limits = {});

/// Resolvable STD_q(t, k, m) in F_q^{k+m}.
struct TransversalDesign {
  FieldPtr field;
  std::size_t strength = 0;    // t
  std::size_t block_dim = 0;   // k (= b)
  std::size_t group_exp = 0;   // m, groups have q^m points
  /// Canonical 1-dim subspaces whose first k coordinates are not all zero.
  std::vector<Subspace> points;
  /// Indices into `points`; one group per projective point of the first k coordinates.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Subspace> blocks;
  /// Indices into `blocks`; class c fixes the higher Gabidulin coefficients to c.
  std::vector<std::vector<std::size_t>> parallel_classes;

  std::size_t ambient() const noexcept { return block_dim + group_exp; }
};

/// Blocks are row spaces of [I_k | A] for A in the expanded Gabidulin code of
/// length k and dimension t over GF(q^m). Throws BadParams unless 1 <= t <= k <= m.
TransversalDesign build_std(const FieldPtr& field, std::size_t t, std::size_t k, std::size_t m,
                            const Limits& limits = {});

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DesignReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

DesignReport verify_spread(const SpreadDesign& design, const Limits& limits = {});
DesignReport verify_std(const TransversalDesign& design, const Limits& limits = {});
/// Checks that every t-subspace of the ambient space lies in exactly one block.
PropertyCheck verify_steiner(const std::vector<Subspace>& blocks, std::size_t t, const Limits& limits = {});

}  // namespace sublrc
