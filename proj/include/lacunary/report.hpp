#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lacunary/bounds.hpp"

namespace lacunary {

/// RFC 4180 quoting when the cell holds a comma, quote or newline.
std::string csv_cell(const std::string& text);

/// Columns: method, d, applicable, value, witness (JSON; holds the reason
/// for inapplicable entries).
void write_outcomes_csv(std::ostream& out, const std::vector<BoundOutcome>& outcomes);
void write_outcomes_table(std::ostream& out, const std::vector<BoundOutcome>& outcomes);
Json outcome_json(const BoundOutcome& outcome);
Json outcomes_json(const std::vector<BoundOutcome>& outcomes);

/// Columns: q, poly, count, roots (semicolon-separated).
void write_roots_csv(std::ostream& out, const SparsePoly& f, const RootReport& roots);
std::string join_roots(const Field& field, const RootReport& roots);

/// Left-aligned columns separated by two spaces.
void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows);

}  // namespace lacunary
