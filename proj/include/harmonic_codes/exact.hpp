#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace harmonic_codes {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(T) <= sizeof(long), "integer wider than long");
    if constexpr (std::signed_integral<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  /// Throws ConstructionError when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value);

  /// Parses `p/q` or a bare integer `p`. Throws ConstructionError on bad input.
  static Rational parse(std::string_view token);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// Canonical `p/q` rendering; integers render as `n/1`.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// num/den in canonical form. Throws ConstructionError when den == 0.
Rational rat(std::int64_t num, std::int64_t den);

Rational abs(const Rational& r);

/// Exact square root when `r` is the square of a rational, otherwise false.
bool exact_sqrt(const Rational& r, Rational& root);

/// Square matrix with symmetric storage of the full square.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t order);

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& value);

  Rational trace() const;
  bool operator==(const SymMatrix&) const = default;

  static SymMatrix identity(std::size_t order);
  static SymMatrix diagonal(const std::vector<Rational>& diag);

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

/// Sum over all i, j of a(i,j) * b(i,j). Throws DimensionError on order mismatch.
Rational frobenius_inner(const SymMatrix& a, const SymMatrix& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-based Gaussian elimination.
std::size_t rank(Matrix m);

}  // namespace harmonic_codes
