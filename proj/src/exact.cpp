#include "harmonic_codes/exact.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "harmonic_codes/errors.hpp"

namespace harmonic_codes {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ConstructionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw ConstructionError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view token) {
  const auto slash = token.find('/');
  const auto num = token.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ConstructionError("malformed rational token '" + std::string(token) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ConstructionError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational rat(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

bool exact_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = Rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
  return true;
}

SymMatrix::SymMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw DimensionError("matrix order must be positive");
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  entries_[i * order_ + j] = value;
  entries_[j * order_ + i] = value;
}

Rational SymMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

SymMatrix SymMatrix::identity(std::size_t order) {
  SymMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<Rational>& diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

Rational frobenius_inner(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) {
    throw DimensionError("frobenius_inner: order " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
  }
  // Diagonal once, strict upper triangle twice.
  const std::size_t n = a.order();
  mpq_class diag = 0;
  mpq_class off = 0;
  mpq_class term;
  for (std::size_t i = 0; i < n; ++i) {
    term = a(i, i).raw() * b(i, i).raw();
    diag += term;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = a(i, j).raw();
      const auto& y = b(i, j).raw();
      if (sgn(x) == 0 || sgn(y) == 0) continue;
      term = x * y;
      off += term;
    }
  }
  return Rational(mpq_class(diag + 2 * off));
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, col);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace harmonic_codes
