#include "pubgoods/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "json.hpp"
#include "pubgoods/errors.hpp"

namespace pubgoods {

namespace {

std::string renderCell(const Cell& cell, bool full_precision) {
  switch (cell.kind) {
    case Cell::Kind::Empty:
      return "";
    case Cell::Kind::Text:
      return cell.text;
    case Cell::Kind::Number:
      return full_precision ? formatFull(cell.number)
                            : formatSig(cell.number, cell.precision);
    case Cell::Kind::Integer:
      return std::to_string(cell.integer);
    case Cell::Kind::Boolean:
      return cell.boolean ? "true" : "false";
  }
  return "";
}

std::string csvEscape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string renderTableFormat(const Report& report) {
  std::string out;
  out += "== " + report.title + " ==\n";
  if (!report.summary.empty()) {
    out += '\n';
    std::size_t key_width = 0;
    for (const auto& [key, value] : report.summary) {
      key_width = std::max(key_width, key.size());
    }
    for (const auto& [key, value] : report.summary) {
      out += key;
      out.append(key_width - key.size() + 2, ' ');
      out += renderCell(value, false);
      out += '\n';
    }
  }
  for (const ReportTable& table : report.tables) {
    out += "\n-- " + table.name + " --\n";
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns);
    for (const std::vector<Cell>& row : table.rows) {
      std::vector<std::string> rendered;
      rendered.reserve(row.size());
      for (const Cell& cell : row) {
        rendered.push_back(renderCell(cell, false));
      }
      cells.push_back(std::move(rendered));
    }
    std::vector<std::size_t> widths(table.columns.size(), 0);
    for (const std::vector<std::string>& row : cells) {
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    for (const std::vector<std::string>& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += row[c];
        if (c + 1 < row.size()) {
          out.append(widths[c] - row[c].size() + 2, ' ');
        }
      }
      out += '\n';
    }
  }
  if (!report.notes.empty()) {
    out += '\n';
    for (const std::string& note : report.notes) {
      out += "note: " + note + "\n";
    }
  }
  return out;
}

std::string renderCsvFormat(const Report& report) {
  std::string out = "section,row,column,value\n";
  auto emit = [&](const std::string& section, long long row,
                  const std::string& column, const std::string& value) {
    out += csvEscape(section) + "," + std::to_string(row) + "," +
           csvEscape(column) + "," + csvEscape(value) + "\n";
  };
  emit("report", 0, "title", report.title);
  for (std::size_t i = 0; i < report.summary.size(); ++i) {
    emit("summary", static_cast<long long>(i), report.summary[i].first,
         renderCell(report.summary[i].second, true));
  }
  for (const ReportTable& table : report.tables) {
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const Cell& cell = c < table.rows[r].size() ? table.rows[r][c] : Cell{};
        emit("table:" + table.name, static_cast<long long>(r),
             table.columns[c], renderCell(cell, true));
      }
    }
  }
  for (std::size_t i = 0; i < report.notes.size(); ++i) {
    emit("note", static_cast<long long>(i), "text", report.notes[i]);
  }
  return out;
}

nlohmann::json cellToJson(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::Empty:
      return nullptr;
    case Cell::Kind::Text:
      return cell.text;
    case Cell::Kind::Number:
      return cell.number;
    case Cell::Kind::Integer:
      return cell.integer;
    case Cell::Kind::Boolean:
      return cell.boolean;
  }
  return nullptr;
}

std::string renderJsonLinesFormat(const Report& report) {
  std::string out;
  auto emit = [&](const nlohmann::json& record) {
    out += record.dump();
    out += '\n';
  };
  emit({{"type", "title"}, {"value", report.title}});
  for (const auto& [key, value] : report.summary) {
    emit({{"type", "summary"}, {"key", key}, {"value", cellToJson(value)}});
  }
  for (const ReportTable& table : report.tables) {
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      nlohmann::json values;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const Cell& cell = c < table.rows[r].size() ? table.rows[r][c] : Cell{};
        values[table.columns[c]] = cellToJson(cell);
      }
      emit({{"type", "row"},
            {"table", table.name},
            {"index", r},
            {"values", values}});
    }
  }
  for (const std::string& note : report.notes) {
    emit({{"type", "note"}, {"text", note}});
  }
  return out;
}

}  // namespace

std::string formatFull(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buffer, end);
}

std::string formatSig(double value, int sig_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", sig_digits, value);
  return buffer;
}

OutputFormat parseOutputFormat(const std::string& name) {
  if (name == "table") {
    return OutputFormat::Table;
  }
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "jsonl") {
    return OutputFormat::JsonLines;
  }
  throw ValidationError("unknown output format: " + name);
}

std::string renderOutput(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return renderTableFormat(report);
    case OutputFormat::Csv:
      return renderCsvFormat(report);
    case OutputFormat::JsonLines:
      return renderJsonLinesFormat(report);
  }
  throw ValidationError("unknown output format");
}

}  // namespace pubgoods
