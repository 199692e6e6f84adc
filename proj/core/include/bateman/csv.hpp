#pragma once

#include <string>
#include <vector>

// Deterministic CSV emission shared by the experiment modules.

namespace bateman {

/// Shortest decimal that parses back to exactly `value`.
std::string format_real(double value);
std::string format_real(long double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  /// Throws std::invalid_argument when the width differs from the header.
  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace bateman
