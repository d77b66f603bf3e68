#ifndef CSTHERM_ERRORS_HPP
#define CSTHERM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cstherm {

// An iterative numerical routine failed to reach its tolerance
// (step-size underflow, subdivision limit, ...).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed spectrum CSV. Rows are 1-based; the header counts as row 1.
class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(std::size_t row, const std::string& detail)
      : std::runtime_error("spectrum CSV row " + std::to_string(row) + ": " + detail),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// An oracle was asked to run beyond its validated scale bound.
struct OracleScaleError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace cstherm

#endif
