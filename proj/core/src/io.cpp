#include "cpdetect/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cpdetect {

ObservationMatrix read_matrix_csv(std::istream& in) {
  ObservationMatrix x;
  std::vector<double> values;
  std::string line;
  std::int64_t lineno = 0;
  std::int64_t ncols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == EOF) break; // trailing newline
      throw CsvParseError("empty line", lineno, 1);
    }
    std::int64_t col = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      ++col;
      const std::size_t comma = line.find(',', pos);
      const std::string field =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite");
        values.push_back(v);
      } catch (const std::exception&) {
        throw CsvParseError("non-numeric cell '" + field + "'", lineno, col);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (ncols == -1)
      ncols = col;
    else if (col != ncols)
      throw CsvParseError("ragged row: expected " + std::to_string(ncols) + " fields, got " +
                              std::to_string(col),
                          lineno, col);
  }
  if (lineno == 0 || ncols < 1) throw CsvParseError("empty input", 1, 1);
  x.p = lineno;
  x.n = ncols;
  x.values = std::move(values);
  return x;
}

ObservationMatrix read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvParseError("cannot open '" + path + "'", 0, 0);
  return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const ObservationMatrix& x) {
  char buf[64];
  for (std::int64_t j = 0; j < x.p; ++j) {
    for (std::int64_t t = 0; t < x.n; ++t) {
      std::snprintf(buf, sizeof(buf), "%.17g", x.at(j, t));
      out << buf;
      out.put(t + 1 == x.n ? '\n' : ',');
    }
  }
}

void write_matrix_csv_file(const std::string& path, const ObservationMatrix& x) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_matrix_csv(out, x);
}

} // namespace cpdetect
