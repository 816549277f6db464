#include "cyclepow/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cyclepow/bounds.hpp"
#include "cyclepow/extremal.hpp"

namespace cyclepow {

namespace {

constexpr std::string_view kCsvHeader = "k,s,exact,spectral,turan";
constexpr std::string_view kNotApplicable = "NA";

std::string cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string(kNotApplicable);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view field, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(field) + "'");
  return value;
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  for (const TableRow& r : rows) {
    out += std::to_string(r.k) + ',' + std::to_string(r.s) + ',' +
           std::to_string(r.exact) + ',' + std::to_string(r.spectral) + ',' +
           cell(r.turan) + '\n';
  }
  return out;
}

std::string render_markdown(const std::vector<TableRow>& rows) {
  std::string out =
      "| k | s | Exact maximum | Spectral bound | Turán bound |\n"
      "|--:|--:|--:|--:|--:|\n";
  for (const TableRow& r : rows) {
    out += "| " + std::to_string(r.k) + " | " + std::to_string(r.s) + " | " +
           std::to_string(r.exact) + " | " + std::to_string(r.spectral) +
           " | " + cell(r.turan) + " |\n";
  }
  return out;
}

std::string render_plain(const std::vector<TableRow>& rows) {
  const std::array<std::string, 5> header = {"k", "s", "exact", "spectral",
                                             "turan"};
  std::vector<std::array<std::string, 5>> cells;
  cells.reserve(rows.size());
  for (const TableRow& r : rows)
    cells.push_back({std::to_string(r.k), std::to_string(r.s),
                     std::to_string(r.exact), std::to_string(r.spectral),
                     cell(r.turan)});

  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 5>& row) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (c != 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["k"] = r.k;
    obj["s"] = r.s;
    obj["exact"] = r.exact;
    obj["spectral"] = r.spectral;
    obj["spectral_raw"] = r.spectral_raw;
    if (r.turan) obj["turan"] = *r.turan;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

std::optional<TableFormat> parse_format(std::string_view name) {
  if (name == "plain") return TableFormat::plain;
  if (name == "markdown") return TableFormat::markdown;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  return std::nullopt;
}

TableSpec builtin_table() {
  return TableSpec{1000,
                   {{54, 37},
                    {118, 53},
                    {359, 16},
                    {210, 115},
                    {243, 175},
                    {313, 295},
                    {433, 196},
                    {404, 372},
                    {439, 384},
                    {473, 462}}};
}

std::vector<TableRow> build_table(const TableSpec& ts) {
  std::vector<TableRow> rows;
  rows.reserve(ts.rows.size());
  for (const auto& [k, s] : ts.rows) {
    if (s >= ts.n)
      throw std::invalid_argument("table row requires s < n");
    const GraphSpec spec(ts.n, s);
    if (k < 1 || k > ts.n)
      throw std::invalid_argument("table row requires 1 <= k <= n");
    TableRow row;
    row.k = k;
    row.s = s;
    row.exact = exact_max(spec, k).value;
    const SpectralBound sb = spectral_bound(spec, k);
    row.spectral = sb.floored;
    row.spectral_raw = sb.raw;
    row.turan = turan_bound(spec, k);
    rows.push_back(row);
  }
  return rows;
}

std::string render(const std::vector<TableRow>& rows, TableFormat format) {
  if (rows.empty()) throw std::invalid_argument("no rows to render");
  switch (format) {
    case TableFormat::plain: return render_plain(rows);
    case TableFormat::markdown: return render_markdown(rows);
    case TableFormat::csv: return render_csv(rows);
    case TableFormat::json: return render_json(rows);
  }
  throw std::invalid_argument("unknown table format");
}

std::vector<TableRow> parse_rows_csv(std::string_view text) {
  std::vector<TableRow> rows;
  bool saw_header = false;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kCsvHeader)
        throw std::invalid_argument("unexpected CSV header: '" +
                                    std::string(line) + "'");
      saw_header = true;
      continue;
    }
    const std::vector<std::string_view> fields = split(line, ',');
    if (fields.size() != 5)
      throw std::invalid_argument("expected 5 CSV fields, got " +
                                  std::to_string(fields.size()));
    TableRow row;
    row.k = static_cast<int>(parse_int(fields[0], "k"));
    row.s = static_cast<int>(parse_int(fields[1], "s"));
    row.exact = parse_int(fields[2], "exact");
    row.spectral = parse_int(fields[3], "spectral");
    row.spectral_raw = static_cast<double>(row.spectral);
    if (fields[4] != kNotApplicable)
      row.turan = parse_int(fields[4], "turan");
    rows.push_back(row);
  }
  if (!saw_header) throw std::invalid_argument("empty CSV input");
  return rows;
}

TableSpec parse_table_spec_csv(std::string_view text) {
  TableSpec ts;
  bool saw_n = false;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (!saw_n) {
      ts.n = static_cast<int>(parse_int(line, "n"));
      saw_n = true;
      continue;
    }
    const std::vector<std::string_view> fields = split(line, ',');
    if (fields.size() != 2)
      throw std::invalid_argument("expected 'k,s' pair, got '" +
                                  std::string(line) + "'");
    ts.rows.emplace_back(static_cast<int>(parse_int(fields[0], "k")),
                         static_cast<int>(parse_int(fields[1], "s")));
  }
  if (!saw_n) throw std::invalid_argument("table input is empty");
  if (ts.rows.empty()) throw std::invalid_argument("table input has no rows");
  return ts;
}

}  // namespace cyclepow
