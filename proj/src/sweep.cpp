#include "bec/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bec {

namespace {

std::string column_header(const SweepColumn& column) {
  return column.name + "[" + column.unit + "]";
}

SweepColumn parse_column_header(const std::string& header) {
  SweepColumn column;
  const auto open = header.find('[');
  if (open != std::string::npos && header.back() == ']') {
    column.name = header.substr(0, open);
    column.unit = header.substr(open + 1, header.size() - open - 2);
  } else {
    column.name = header;
  }
  return column;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) {
    out += "# " + key + "=" + value + "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != 0) out += ",";
    out += column_header(table.columns[c]);
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ",";
      out += format_real(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) {
    doc["metadata"][key] = value;
  }
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& column : table.columns) {
    doc["columns"].push_back({{"name", column.name}, {"unit", column.unit}});
  }
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (double value : row) {
      if (std::isnan(value)) {
        jrow.push_back(nullptr);  // JSON has no NaN literal
      } else {
        jrow.push_back(value);
      }
    }
    doc["rows"].push_back(jrow);
  }
  return doc.dump(2) + "\n";
}

SweepTable read_csv(const std::string& text) {
  SweepTable table;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        table.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      }
      continue;
    }
    if (!have_header) {
      for (const auto& field : split(line, ',')) {
        table.columns.push_back(parse_column_header(field));
      }
      if (table.columns.empty()) fail_at(line_no, "empty header");
      have_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != table.columns.size()) {
      fail_at(line_no, "expected " + std::to_string(table.columns.size()) + " fields, got " +
                           std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(field, &used));
        if (used != field.size()) fail_at(line_no, "trailing characters in '" + field + "'");
      } catch (const std::invalid_argument&) {
        fail_at(line_no, "not a number: '" + field + "'");
      } catch (const std::out_of_range&) {
        fail_at(line_no, "out of range: '" + field + "'");
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv: no header line found");
  return table;
}

SweepTable merge_overlay(const SweepTable& base, const SweepTable& overlay, double tolerance) {
  if (base.columns.empty() || overlay.columns.empty()) {
    throw std::invalid_argument("merge_overlay: both tables need at least one column");
  }
  SweepTable merged = base;
  for (std::size_t c = 1; c < overlay.columns.size(); ++c) {
    merged.columns.push_back(overlay.columns[c]);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (auto& row : merged.rows) {
    const double key = row.front();
    const std::vector<double>* best = nullptr;
    double best_distance = tolerance;
    for (const auto& candidate : overlay.rows) {
      const double distance = std::abs(candidate.front() - key);
      if (distance <= best_distance) {
        best_distance = distance;
        best = &candidate;
      }
    }
    for (std::size_t c = 1; c < overlay.columns.size(); ++c) {
      row.push_back(best != nullptr ? (*best)[c] : nan);
    }
  }
  return merged;
}

}  // namespace bec
