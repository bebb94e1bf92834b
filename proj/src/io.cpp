#include "harmonic_codes/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "harmonic_codes/errors.hpp"

namespace harmonic_codes::io {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  for (std::string t; ls >> t;) out.push_back(std::move(t));
  return out;
}

// Next non-blank line split into tokens; empty at end of stream.
std::vector<std::string> next_row(std::istream& is) {
  for (std::string line; std::getline(is, line);) {
    auto t = tokens(line);
    if (!t.empty()) return t;
  }
  return {};
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw IoError("expected integer, got '" + s + "'");
  return v;
}

std::size_t to_count(const std::string& s) {
  const std::int64_t v = to_int(s);
  if (v < 0) throw IoError("expected nonnegative count, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Rational to_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const ConstructionError& e) {
    throw IoError(e.what());
  }
}

LatticeCode read_code_body(std::istream& is, const std::vector<std::string>& header) {
  const std::size_t dim = to_count(header[0]);
  const std::size_t n = to_count(header[1]);
  const std::int64_t scale = to_int(header[2]);
  const std::int64_t norm = to_int(header[3]);
  std::vector<IntVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = next_row(is);
    if (row.size() != dim) {
      throw IoError("code row " + std::to_string(i + 1) + ": expected " + std::to_string(dim) + " integers");
    }
    IntVector p;
    p.reserve(dim);
    for (const auto& t : row) p.push_back(to_int(t));
    points.push_back(std::move(p));
  }
  if (!next_row(is).empty()) throw IoError("trailing data after code rows");
  try {
    LatticeCode code(dim, scale, std::move(points));
    if (code.norm_sq_scaled() != norm) throw IoError("header norm_sq_scaled does not match the points");
    return code;
  } catch (const StructureError& e) {
    throw IoError(std::string("invalid code file: ") + e.what());
  }
}

Matrix read_gram_body(std::istream& is, const std::vector<std::string>& header) {
  const std::size_t n = to_count(header[0]);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = next_row(is);
    if (row.size() != n) {
      throw IoError("Gram row " + std::to_string(i + 1) + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = to_rational(row[j]);
  }
  if (!next_row(is).empty()) throw IoError("trailing data after Gram rows");
  return m;
}

}  // namespace

void write_code(std::ostream& os, const LatticeCode& code) {
  os << code.ambient_dim() << ' ' << code.size() << ' ' << code.scale() << ' ' << code.norm_sq_scaled() << '\n';
  for (const auto& p : code.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    os << '\n';
  }
}

LatticeCode read_code(std::istream& is) {
  const auto header = next_row(is);
  if (header.size() != 4) throw IoError("code header must be `ambient_dim N scale norm_sq_scaled`");
  return read_code_body(is, header);
}

void write_gram(std::ostream& os, const Matrix& gram) {
  os << gram.rows() << '\n';
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) os << (j ? " " : "") << gram(i, j).str();
    os << '\n';
  }
}

Matrix read_gram(std::istream& is) {
  const auto header = next_row(is);
  if (header.size() != 1) throw IoError("Gram header must be a single count");
  return read_gram_body(is, header);
}

void write_float_code(std::ostream& os, const EmbeddedCode& code) {
  const std::size_t len = code.points().front().matrix.order();
  os << (len * (len + 1) / 2 - 1) << ' ' << code.size() << " float\n";
  char buf[40];
  for (const auto& p : code.points()) {
    const auto coords = flatten_coordinates(p);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", coords[i]);
      os << (i ? " " : "") << buf;
    }
    os << '\n';
  }
}

std::set<Rational> read_values(std::istream& is) {
  std::set<Rational> out;
  for (auto row = next_row(is); !row.empty(); row = next_row(is)) {
    if (row.size() != 1) throw IoError("values file: one rational per line");
    out.insert(to_rational(row[0]));
  }
  if (out.empty()) throw IoError("values file is empty");
  return out;
}

std::variant<LatticeCode, Matrix> read_code_or_gram(std::istream& is) {
  const auto header = next_row(is);
  if (header.size() == 4) return read_code_body(is, header);
  if (header.size() == 1) return read_gram_body(is, header);
  throw IoError("unrecognized file header (expected a code or an exact Gram file)");
}

}  // namespace harmonic_codes::io
