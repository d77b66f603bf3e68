#ifndef CSTHERM_OUTPUT_HPP
#define CSTHERM_OUTPUT_HPP

#include <string>
#include <vector>

namespace cstherm {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

// Echoed input parameter. Numeric values are stored preformatted (17
// significant digits) and emitted unquoted in JSON.
struct InputField {
  std::string name;
  std::string value;
  bool numeric;
};

// Named result with unit string. Non-numeric results (branch labels,
// booleans) carry their text in `value` with numeric = false.
struct ResultField {
  std::string name;
  std::string value;
  std::string unit;
  bool numeric;
};

/*!
  One machine-readable record emitted by the CLI.

  Serialization is deterministic: fields keep their insertion order and all
  floating-point values are printed with 17 significant digits, so identical
  invocations produce byte-identical output and every record echoes the
  resolved inputs it was produced from.
*/
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::vector<InputField> inputs;
  std::vector<ResultField> results;
  std::vector<std::string> warnings;

  void add_input(const std::string& name, const std::string& value);
  void add_input(const std::string& name, double value);
  void add_result(const std::string& name, double value, const std::string& unit);
  void add_result(const std::string& name, const std::string& value,
                  const std::string& unit = "");
  void add_warning(const std::string& text);
};

enum class OutputFormat { Table, Json, Csv };

// Accepts "table", "json", "csv"; throws std::domain_error otherwise.
OutputFormat parse_output_format(const std::string& text);

// %.17g with the C locale; round-trips any finite double
std::string format_double(double v);

std::string to_json(const OutputRecord& rec);    // single line, no trailing \n
std::string to_table(const OutputRecord& rec);   // human-readable block
std::string csv_header(const OutputRecord& rec); // column names, no trailing \n
std::string to_csv_row(const OutputRecord& rec);

}  // namespace cstherm

#endif
