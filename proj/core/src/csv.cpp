#include "bateman/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace bateman {

namespace {

template <typename T>
std::string shortest(T value, const char* fmt, int max_precision, T (*parse)(const char*, char**)) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= max_precision; ++precision) {
    std::snprintf(buf, sizeof buf, fmt, precision, value);
    if (parse(buf, nullptr) == value) break;
  }
  return buf;
}

}  // namespace

std::string format_real(double value) { return shortest(value, "%.*g", 17, &std::strtod); }
std::string format_real(long double value) { return shortest(value, "%.*Lg", 21, &std::strtold); }

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  return out;
}

}  // namespace bateman
