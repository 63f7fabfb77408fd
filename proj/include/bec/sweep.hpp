#pragma once

#include <map>
#include <string>
#include <vector>

namespace bec {

/// Column of a sweep table: a name, a unit tag rendered as "name[unit]" in
/// headers, and one value per row.  Dimensionless columns use the tag "-".
struct SweepColumn {
  std::string name;
  std::string unit = "-";
};

/// Rectangular numeric result table with string metadata, sorted by its first
/// column, as produced by the sweep commands.  Tables are built fully in
/// memory before anything is written, so an evaluation failure never leaves a
/// partial output file behind.
struct SweepTable {
  std::map<std::string, std::string> metadata;  // sorted by key on output
  std::vector<SweepColumn> columns;
  std::vector<std::vector<double>> rows;  // each row has columns.size() entries
};

/// Formats a value with 12 significant digits, '.' decimal separator; used
/// for all numeric CSV output so files are byte-stable across runs.
std::string format_real(double value);

/// Renders the table as CSV: "# key=value" metadata lines (keys sorted),
/// a "name[unit]" header line, then one comma-separated line per row, all
/// with '\n' line endings.
std::string to_csv(const SweepTable& table);

/// Renders the table as a JSON object {"metadata": {...}, "columns":
/// [{"name", "unit"}...], "rows": [[...]...]}.
std::string to_json(const SweepTable& table);

/// Parses a table previously written by to_csv (metadata lines optional).
/// Throws std::runtime_error with a line number on malformed input.
SweepTable read_csv(const std::string& text);

/// Joins the overlay's columns onto the table by matching the first column
/// within an absolute tolerance.  Overlay columns are appended in order with
/// their own names; rows of the base table without a match within tolerance
/// get NaN entries.  Requires both tables to be non-empty.
SweepTable merge_overlay(const SweepTable& base, const SweepTable& overlay,
                         double tolerance = 1e-9);

}  // namespace bec
