#ifndef CYCLEPOW_REPORT_HPP
#define CYCLEPOW_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclepow/cycle.hpp"

namespace cyclepow {

struct TableRow {
  int k = 0;
  int s = 0;
  std::int64_t exact = 0;
  std::int64_t spectral = 0;          // floored spectral bound
  double spectral_raw = 0.0;          // emitted in JSON only
  std::optional<std::int64_t> turan;  // empty when the bound is undefined

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableSpec {
  int n = 0;
  std::vector<std::pair<int, int>> rows;  // (k, s) pairs, in output order
};

enum class TableFormat { plain, markdown, csv, json };

/// Parses one of "plain", "markdown", "csv", "json".
std::optional<TableFormat> parse_format(std::string_view name);

/// The built-in comparison table: n = 1000 with ten (k, s) pairs.
TableSpec builtin_table();

/// Computes exact value, floored spectral bound and Turan's bound for every
/// (k, s) pair, in input order. Rows where Turan's bound is undefined carry
/// an explicit not-applicable marker.
std::vector<TableRow> build_table(const TableSpec& ts);

/// Deterministic text output. CSV uses header "k,s,exact,spectral,turan" and
/// LF endings; markdown mirrors the column order k, s, exact, spectral,
/// Turan. JSON additionally carries the raw spectral value per row.
std::string render(const std::vector<TableRow>& rows, TableFormat format);

/// Inverse of render(rows, csv) for the five integer columns
/// (spectral_raw is not representable in CSV and is set to the floored value).
std::vector<TableRow> parse_rows_csv(std::string_view text);

/// Input description for the table command: line 1 holds n, each following
/// non-empty line holds one "k,s" pair.
TableSpec parse_table_spec_csv(std::string_view text);

}  // namespace cyclepow

#endif  // CYCLEPOW_REPORT_HPP
