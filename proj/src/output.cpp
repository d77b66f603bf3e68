#include "cstherm/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cstherm {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void OutputRecord::add_input(const std::string& name, const std::string& value) {
  inputs.push_back({name, value, false});
}

void OutputRecord::add_input(const std::string& name, double value) {
  inputs.push_back({name, format_double(value), true});
}

void OutputRecord::add_result(const std::string& name, double value,
                              const std::string& unit) {
  results.push_back({name, format_double(value), unit, true});
}

void OutputRecord::add_result(const std::string& name, const std::string& value,
                              const std::string& unit) {
  results.push_back({name, value, unit, false});
}

void OutputRecord::add_warning(const std::string& text) { warnings.push_back(text); }

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::domain_error("unknown output format '" + text +
                          "' (expected table, json or csv)");
}

std::string to_json(const OutputRecord& rec) {
  std::ostringstream os;
  os << "{\"schema_version\":\"" << json_escape(rec.schema_version)
     << "\",\"command\":\"" << json_escape(rec.command) << "\",\"inputs\":{";
  for (std::size_t i = 0; i < rec.inputs.size(); ++i) {
    const InputField& in = rec.inputs[i];
    if (i) os << ',';
    os << '"' << json_escape(in.name) << "\":";
    if (in.numeric) os << in.value;
    else os << '"' << json_escape(in.value) << '"';
  }
  os << "},\"results\":[";
  for (std::size_t i = 0; i < rec.results.size(); ++i) {
    const ResultField& r = rec.results[i];
    if (i) os << ',';
    os << "{\"name\":\"" << json_escape(r.name) << "\",\"value\":";
    if (r.numeric) os << r.value;
    else os << '"' << json_escape(r.value) << '"';
    os << ",\"unit\":\"" << json_escape(r.unit) << "\"}";
  }
  os << "],\"warnings\":[";
  for (std::size_t i = 0; i < rec.warnings.size(); ++i) {
    if (i) os << ',';
    os << '"' << json_escape(rec.warnings[i]) << '"';
  }
  os << "]}";
  return os.str();
}

std::string to_table(const OutputRecord& rec) {
  std::size_t width = 0;
  for (const InputField& in : rec.inputs) width = std::max(width, in.name.size());
  for (const ResultField& r : rec.results) width = std::max(width, r.name.size());

  std::ostringstream os;
  os << rec.command << " (schema " << rec.schema_version << ")\n";
  os << "inputs:\n";
  for (const InputField& in : rec.inputs) {
    os << "  " << in.name << std::string(width - in.name.size() + 2, ' ') << in.value
       << '\n';
  }
  os << "results:\n";
  for (const ResultField& r : rec.results) {
    os << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.value;
    if (!r.unit.empty()) os << "  [" << r.unit << ']';
    os << '\n';
  }
  if (!rec.warnings.empty()) {
    os << "warnings:\n";
    for (const std::string& w : rec.warnings) os << "  - " << w << '\n';
  }
  return os.str();
}

std::string csv_header(const OutputRecord& rec) {
  std::ostringstream os;
  os << "command,schema_version";
  for (const InputField& in : rec.inputs) os << ",input." << csv_escape(in.name);
  for (const ResultField& r : rec.results) os << ",result." << csv_escape(r.name);
  os << ",warnings";
  return os.str();
}

std::string to_csv_row(const OutputRecord& rec) {
  std::ostringstream os;
  os << csv_escape(rec.command) << ',' << csv_escape(rec.schema_version);
  for (const InputField& in : rec.inputs) os << ',' << csv_escape(in.value);
  for (const ResultField& r : rec.results) os << ',' << csv_escape(r.value);
  std::string joined;
  for (std::size_t i = 0; i < rec.warnings.size(); ++i) {
    if (i) joined += "; ";
    joined += rec.warnings[i];
  }
  os << ',' << csv_escape(joined);
  return os.str();
}

}  // namespace cstherm
