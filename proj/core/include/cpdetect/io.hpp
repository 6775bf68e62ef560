#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cpdetect/contrast.hpp"

namespace cpdetect {

struct CsvParseError : std::runtime_error {
  std::int64_t line = 0;   // 1-based
  std::int64_t column = 0; // 1-based field index
  CsvParseError(const std::string& msg, std::int64_t l, std::int64_t c)
      : std::runtime_error(msg), line(l), column(c) {}
};

// Matrix CSV: no header, one row per line, comma-separated decimal floats.
// Ragged rows and non-numeric cells raise CsvParseError with the offending
// line and field.
ObservationMatrix read_matrix_csv(std::istream& in);
ObservationMatrix read_matrix_csv_file(const std::string& path);

// 17 significant digits, so a written matrix re-reads bit-identically.
void write_matrix_csv(std::ostream& out, const ObservationMatrix& x);
void write_matrix_csv_file(const std::string& path, const ObservationMatrix& x);

} // namespace cpdetect
