#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rado {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (q > 0 after sign normalization), ignoring
  /// surrounding whitespace. Throws std::invalid_argument naming the text.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const { return BigRational(::abs(q_)); }
  BigRational reciprocal() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational l, const BigRational& r) { return l += r; }
  friend BigRational operator-(BigRational l, const BigRational& r) { return l -= r; }
  friend BigRational operator*(BigRational l, const BigRational& r) { return l *= r; }
  friend BigRational operator/(BigRational l, const BigRational& r) { return l /= r; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& l, const BigRational& r) { return l.q_ == r.q_; }
  friend std::strong_ordering operator<=>(const BigRational& l, const BigRational& r) {
    const int c = cmp(l.q_, r.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Exact "p/q" (or "p" when q = 1).
  std::string str() const;
  /// Decimal rendering with `digits` significant digits, rounded half away
  /// from zero, computed exactly (no floating point).
  std::string decimal(int digits = 10) const;
  /// Decimal with a fixed number of digits after the point.
  std::string fixed(int places) const;
  double to_double() const { return q_.get_d(); }

  /// floor(x) and nearest integer (halves round up).
  mpz_class floor() const;
  mpz_class round_nearest() const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace rado
