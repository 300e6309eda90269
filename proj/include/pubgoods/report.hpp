#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pubgoods {

// One typed value in a report. Numbers carry the significant-digit count
// used by the human-readable table renderer; csv and jsonl always emit full
// precision.
struct Cell {
  enum class Kind : std::uint8_t { Empty, Text, Number, Integer, Boolean };

  Kind kind = Kind::Empty;
  std::string text;
  double number = 0.0;
  long long integer = 0;
  bool boolean = false;
  int precision = 4;

  static Cell empty() { return Cell{}; }
  static Cell of(std::string value) {
    Cell c;
    c.kind = Kind::Text;
    c.text = std::move(value);
    return c;
  }
  static Cell of(const char* value) { return of(std::string(value)); }
  static Cell of(double value, int precision = 4) {
    Cell c;
    c.kind = Kind::Number;
    c.number = value;
    c.precision = precision;
    return c;
  }
  static Cell of(long long value) {
    Cell c;
    c.kind = Kind::Integer;
    c.integer = value;
    return c;
  }
  static Cell of(int value) { return of(static_cast<long long>(value)); }
  static Cell of(bool value) {
    Cell c;
    c.kind = Kind::Boolean;
    c.boolean = value;
    return c;
  }
};

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string title;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;
};

enum class OutputFormat : std::uint8_t { Table, Csv, JsonLines };

OutputFormat parseOutputFormat(const std::string& name);

// Deterministic rendering: the same report yields byte-identical output.
// Table is fixed-width human-readable text; csv is a single long-format
// stream (section,row,column,value) with LF endings and full-precision
// numbers; jsonl emits one JSON record per line.
std::string renderOutput(const Report& report, OutputFormat format);

// Shortest decimal string that parses back to exactly `value`.
std::string formatFull(double value);
// `value` at `sig_digits` significant digits, C locale.
std::string formatSig(double value, int sig_digits);

}  // namespace pubgoods
