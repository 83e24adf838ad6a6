#include "fracsum/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace fracsum {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(Errc::parse_error, what);
}

// strips a trailing carriage return so CRLF files fail on the header
// comparison no earlier than necessary
std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

double parse_number(const std::string& field, std::size_t line_no) {
  errno = 0;
  const char* text = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || errno == ERANGE) {
    parse_fail("line " + std::to_string(line_no) + ": bad number '" + field +
               "'");
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// header + fixed column count; returns one vector per column
std::vector<std::vector<double>> read_columns(std::istream& in,
                                              const std::string& header) {
  std::string line;
  if (!std::getline(in, line)) {
    parse_fail("empty file, expected header '" + header + "'");
  }
  if (chomp(line) != header) {
    parse_fail("expected header '" + header + "', got '" + chomp(line) + "'");
  }
  const std::size_t ncols = split_fields(header).size();
  std::vector<std::vector<double>> columns(ncols);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = chomp(line);
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != ncols) {
      parse_fail("line " + std::to_string(line_no) + ": expected " +
                 std::to_string(ncols) + " fields, got " +
                 std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      columns[c].push_back(parse_number(fields[c], line_no));
    }
  }
  return columns;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    parse_fail("cannot open '" + path + "'");
  }
  return in;
}

}  // namespace

FractionSumParams read_fraction_params_csv(std::istream& in) {
  auto cols = read_columns(in, "c,d");
  return make_params(std::move(cols[0]), std::move(cols[1]));
}

FractionSumParams read_fraction_params_csv(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_fraction_params_csv(in);
}

ExpPolyParams read_exp_poly_csv(std::istream& in) {
  auto cols = read_columns(in, "a,b,alpha");
  return make_exp_poly(std::move(cols[0]), std::move(cols[1]),
                       std::move(cols[2]));
}

ExpPolyParams read_exp_poly_csv(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_exp_poly_csv(in);
}

Spectrum read_spectrum_csv(std::istream& in) {
  auto cols = read_columns(in, "a,d");
  return Spectrum{std::move(cols[0]), std::move(cols[1])};
}

Spectrum read_spectrum_csv(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_spectrum_csv(in);
}

ComplexMatrix read_complex_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    parse_fail("empty file, expected 'N=<int>'");
  }
  line = chomp(line);
  if (line.rfind("N=", 0) != 0) {
    parse_fail("expected 'N=<int>' on line 1, got '" + line + "'");
  }
  errno = 0;
  char* end = nullptr;
  const long n = std::strtol(line.c_str() + 2, &end, 10);
  if (*end != '\0' || errno == ERANGE || n <= 0) {
    parse_fail("bad matrix size in '" + line + "'");
  }
  ComplexMatrix m(static_cast<std::size_t>(n));
  std::size_t line_no = 1;
  for (long i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      parse_fail("expected " + std::to_string(n) + " matrix rows, got " +
                 std::to_string(i));
    }
    ++line_no;
    const std::vector<std::string> fields = split_fields(chomp(line));
    if (fields.size() != static_cast<std::size_t>(2 * n)) {
      parse_fail("line " + std::to_string(line_no) + ": expected " +
                 std::to_string(2 * n) + " fields (re,im pairs)");
    }
    for (long j = 0; j < n; ++j) {
      m.at(i, j) = std::complex<double>(parse_number(fields[2 * j], line_no),
                                        parse_number(fields[2 * j + 1],
                                                     line_no));
    }
  }
  return m;
}

ComplexMatrix read_complex_matrix_csv(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_complex_matrix_csv(in);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace fracsum
