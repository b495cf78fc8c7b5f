// SPDX-License-Identifier: Apache-2.0
//
// Recovery sets, node/symbol locality and availability of array codes.
//
// S is a recovery set for column j iff V_j lies in the sum of the associated
// subspaces of S, and for symbol (i, j) iff the generator column of that
// symbol does. Searches run by increasing |S| and, within a size, over index
// sets in lexicographic order, so the first hit is minimal and deterministic.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sublrc/arraycode.hpp"

namespace sublrc {

struct RecoverySet {
  enum class Kind { Node, Symbol };

  Kind kind = Kind::Node;
  std::size_t column = 0;
  /// Symbol row; unused for node targets.
  std::size_t row = 0;
  /// Sorted helper columns, never containing `column`.
  std::vector<std::size_t> columns;
  /// One functional per reconstructed symbol (b for node targets, one for a
  /// symbol target). The coefficient of symbol (l, columns[m]) sits at
  /// index m*b + l.
  std::vector<Vec> functionals;

  std::size_t size() const noexcept { return columns.size(); }
};

bool is_symbol_recovery_set(const ArrayCode& code, std::size_t i, std::size_t j, std::span<const std::size_t> cols);
bool is_node_recovery_set(const ArrayCode& code, std::size_t j, std::span<const std::size_t> cols);

/// Fills in coefficients for a set already known to recover the target.
RecoverySet make_symbol_recovery(const ArrayCode& code, std::size_t i, std::size_t j, std::vector<std::size_t> cols);
RecoverySet make_node_recovery(const ArrayCode& code, std::size_t j, std::vector<std::size_t> cols);

/// Smallest recovery set for symbol (i, j). Throws NoRecovery.
RecoverySet min_symbol_recovery(const ArrayCode& code, std::size_t i, std::size_t j);
/// Smallest recovery set for column j. Throws NoRecovery.
RecoverySet min_node_recovery(const ArrayCode& code, std::size_t j);

/// Applies the functionals to the helper columns of `word`.
Vec reconstruct(const ArrayCode& code, const RecoverySet& set, const Codeword& word);
/// Checks the reconstruction against every one of the q^M codewords.
/// Throws TooLarge when q^M exceeds limits.exhaustive.
bool verify_recovery(const ArrayCode& code, const RecoverySet& set, const Limits& limits = {});

struct Locality {
  std::size_t value = 0;
  /// Minimal witness per target: per column for node locality, per symbol
  /// (index j*b + i) for symbol locality.
  std::vector<RecoverySet> witnesses;
};

/// Max over symbols of the minimal recovery-set size.
Locality symbol_locality(const ArrayCode& code);
/// Max over columns of the minimal recovery-set size.
Locality node_locality(const ArrayCode& code);

struct Availability {
  std::size_t count = 0;
  /// Pairwise-disjoint recovery sets realizing `count`.
  std::vector<RecoverySet> family;
  /// false when the packing came from the greedy fallback, in which case
  /// `count` is a lower bound.
  bool exact = true;
  std::size_t candidates = 0;
};

/// Maximum family of pairwise-disjoint minimal recovery sets of size <= r.
Availability symbol_availability(const ArrayCode& code, std::size_t i, std::size_t j, std::size_t r,
                                 const Limits& limits = {});
Availability node_availability(const ArrayCode& code, std::size_t j, std::size_t r, const Limits& limits = {});

struct CodeAvailability {
  std::size_t value = 0;
  bool exact = true;
  /// Target attaining the minimum (column for node, j*b + i for symbol).
  std::size_t argmin = 0;
  std::vector<Availability> per_target;
};

/// Minimum over all symbols / all columns.
CodeAvailability code_symbol_availability(const ArrayCode& code, std::size_t r, const Limits& limits = {});
CodeAvailability code_node_availability(const ArrayCode& code, std::size_t r, const Limits& limits = {});

/// Maximum set packing by branch and bound over subsets of {0..universe-1}.
/// Returns indices into `sets`.
std::vector<std::size_t> max_disjoint_packing(const std::vector<std::vector<std::size_t>>& sets, std::size_t universe);
/// Greedy packing in the given order.
std::vector<std::size_t> greedy_disjoint_packing(const std::vector<std::vector<std::size_t>>& sets,
                                                 std::size_t universe);

/// The explicit disjoint pairing of 2-subspaces U, W != V of F_q^M with
/// V ⊆ U + W: subspaces meeting V in a point are paired across distinct
/// points; subspaces missing V are grouped by U + V and paired by
/// translating their basis by (v1, v2) when q is even, or negating the
/// translation when q is odd (skipping members whose translation parts are
/// dependent).
std::vector<std::pair<Subspace, Subspace>> grassmann_pairing(const FieldPtr& field, std::size_t ambient,
                                                             const Subspace& v, const Limits& limits = {});
/// The same family expressed as node recovery sets of an all-subspaces code
/// with b = 2, for column j.
std::vector<RecoverySet> grassmann_pairing_sets(const ArrayCode& code, std::size_t j, const Limits& limits = {});

struct LocalityOptions {
  bool symbol = true;
  bool node = true;
  bool availability = false;
  /// Size bound for availability candidates; defaults to the measured locality.
  std::optional<std::size_t> symbol_radius;
  std::optional<std::size_t> node_radius;
};

struct LocalityProfile {
  std::optional<Locality> symbol;
  std::optional<Locality> node;
  std::optional<CodeAvailability> symbol_availability;
  std::optional<CodeAvailability> node_availability;
  std::vector<std::string> skipped;
};

/// Runs the requested searches; a TooLarge from any of them becomes an entry
/// in `skipped` instead of an exception.
LocalityProfile analyze_locality(const ArrayCode& code, const LocalityOptions& options, const Limits& limits = {});

struct RepairResult {
  Vec column;
  RecoverySet used;
  std::size_t contacted = 0;
};

/// Rebuilds column j of `word` from a minimal node recovery set. The content
/// of column j is ignored. Throws Inconsistent when the other columns are not
/// the restriction of a codeword.
RepairResult repair(const ArrayCode& code, const Codeword& word, std::size_t j);

}  // namespace sublrc
