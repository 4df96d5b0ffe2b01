#include "thermalops/matrix_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace thermalops {

std::string formatDouble(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return std::string(buffer);
}

void writeMatrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << formatDouble(m(i, j).real()) << ',' << formatDouble(m(i, j).imag());
    }
    out << '\n';
  }
}

namespace {

// Next line that is neither blank nor a '#' comment; false at end of stream.
bool nextContentLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

Complex parseEntry(const std::string& token) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    throw DomainError("readMatrix: entry '" + token + "' is not a re,im pair");
  }
  try {
    const double re = std::stod(token.substr(0, comma));
    const double im = std::stod(token.substr(comma + 1));
    return Complex(re, im);
  } catch (const std::exception&) {
    throw DomainError("readMatrix: cannot parse entry '" + token + "'");
  }
}

ComplexMatrix readMatrixBody(std::istream& in, const std::string& headerLine) {
  std::istringstream header(headerLine);
  long rows = 0;
  long cols = 0;
  if (!(header >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw DomainError("readMatrix: bad dimension header '" + headerLine + "'");
  }
  ComplexMatrix m(rows, cols);
  std::string line;
  for (long i = 0; i < rows; ++i) {
    if (!nextContentLine(in, line)) {
      throw DomainError("readMatrix: stream ended before row " + std::to_string(i));
    }
    std::istringstream row(line);
    std::string token;
    for (long j = 0; j < cols; ++j) {
      if (!(row >> token)) {
        throw DomainError("readMatrix: row " + std::to_string(i) + " has fewer than " +
                          std::to_string(cols) + " entries");
      }
      m(i, j) = parseEntry(token);
    }
  }
  return m;
}

}  // namespace

ComplexMatrix readMatrix(std::istream& in) {
  std::string header;
  if (!nextContentLine(in, header)) {
    throw DomainError("readMatrix: empty stream");
  }
  return readMatrixBody(in, header);
}

void writeNamedMatrices(std::ostream& out, const NamedMatrices& matrices) {
  for (const auto& [name, m] : matrices) {
    out << "matrix " << name << '\n';
    writeMatrix(out, m);
  }
}

NamedMatrices readNamedMatrices(std::istream& in) {
  NamedMatrices out;
  std::string line;
  while (nextContentLine(in, line)) {
    std::istringstream header(line);
    std::string keyword;
    std::string name;
    if (!(header >> keyword >> name) || keyword != "matrix") {
      throw DomainError("readNamedMatrices: expected 'matrix <name>', got '" + line + "'");
    }
    std::string dims;
    if (!nextContentLine(in, dims)) {
      throw DomainError("readNamedMatrices: missing dimensions for '" + name + "'");
    }
    out.emplace_back(name, readMatrixBody(in, dims));
  }
  return out;
}

}  // namespace thermalops
