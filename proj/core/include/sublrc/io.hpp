// SPDX-License-Identifier: Apache-2.0
//
// Text formats for matrices, code bundles and design dumps, plus JSON/CSV/text
// rendering of analysis reports.
//
// Matrix: a header line "q rows cols" followed by `rows` lines of
// space-separated element indices.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sublrc/arraycode.hpp"
#include "sublrc/designs.hpp"
#include "sublrc/locality.hpp"

namespace sublrc {

void write_matrix(std::ostream& out, const Mat& m);
/// Throws Parse on malformed input and on a header q that differs from the
/// field order.
Mat read_matrix(std::istream& in, const FieldPtr& field);

/// field, b, n, M and provenance lines, the generator, then one basis matrix
/// per thick column.
void write_bundle(std::ostream& out, const ArrayCode& code);
/// Throws Parse, or Inconsistent when a stored basis disagrees with the
/// generator.
ArrayCode read_bundle(std::istream& in);

struct DesignDump {
  std::string kind;    // "spread" or "std"
  std::string params;  // rest of the header line
  std::vector<Subspace> blocks;
  std::vector<std::vector<std::size_t>> parallel_classes;
};

void write_design(std::ostream& out, const SpreadDesign& design);
void write_design(std::ostream& out, const TransversalDesign& design);
DesignDump read_design(std::istream& in);

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view name);

std::string render_report(const CodeReport& report, Format format);
std::string render_locality(const LocalityProfile& profile, std::size_t b, Format format);

}  // namespace sublrc
