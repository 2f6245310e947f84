#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diskres/sweep.hpp"

/// Flat tables and their CSV/JSON serialization.
namespace diskres::io {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Column names of a sweep table, in emission order.
const std::vector<std::string>& sweep_columns();

/// Checks the resonance and classification invariants of a valid row.
/// Throws InvalidArgument on violation; rows with an error are accepted.
void validate_row(const sweep::SweepRow& row);

/// Validates every row, then flattens.
Table to_table(const std::vector<sweep::SweepRow>& rows);

/// Header plus one line per row, LF endings. Doubles use "%.12e", NaN is
/// written as "nan". Text cells have commas and newlines replaced.
std::string emit_csv(const Table& table);

/// Array of flat objects keyed by column name; NaN becomes null.
std::string emit_json(const Table& table);

/// Inverse of emit_csv for numeric and plain text cells. Cells that parse
/// fully as integers or doubles are typed accordingly.
Table parse_csv(const std::string& text);

/// Writes via a sibling temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace diskres::io
