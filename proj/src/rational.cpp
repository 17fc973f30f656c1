#include "rado/rational.hpp"

#include <stdexcept>

namespace rado {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// round(num/den) for num, den > 0, halves away from zero
mpz_class round_positive(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;
  return q;
}

}  // namespace

BigRational::BigRational(std::int64_t num, std::int64_t den)
    : BigRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  const std::string s = first == std::string_view::npos ? std::string() : std::string(text.substr(first, last - first + 1));
  const auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto parse_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw bad();
    std::size_t i = 0;
    if (part[0] == '-' || part[0] == '+') {
      if (!allow_sign || part.size() == 1) throw bad();
      i = 1;
    }
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s, true), mpz_class(1));
  const mpz_class num = parse_int(s.substr(0, slash), true);
  const mpz_class den = parse_int(s.substr(slash + 1), false);
  if (den == 0) throw bad();
  return BigRational(num, den);
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(q_.get_den(), q_.get_num());
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRational::str() const { return q_.get_str(10); }

mpz_class BigRational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class BigRational::round_nearest() const {
  const mpq_class shifted = q_ + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

std::string BigRational::fixed(int places) const {
  if (places < 0) throw std::invalid_argument("fixed: negative places");
  const mpz_class scale = pow10(static_cast<unsigned long>(places));
  const mpz_class num = ::abs(q_.get_num()) * scale;
  const mpz_class v = round_positive(num, q_.get_den());
  std::string digits = v.get_str(10);
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  std::string out = (sign() < 0 && v != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

std::string BigRational::decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("decimal: need at least one digit");
  if (is_zero()) return "0";
  const mpz_class num = ::abs(q_.get_num());
  const mpz_class& den = q_.get_den();
  // exponent e with 10^e <= |x| < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  const auto ge_pow = [&](long k) {  // |x| >= 10^k
    return k >= 0 ? num >= den * pow10(static_cast<unsigned long>(k))
                  : num * pow10(static_cast<unsigned long>(-k)) >= den;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;

  const long shift = digits - 1 - e;
  mpz_class v = shift >= 0 ? round_positive(num * pow10(static_cast<unsigned long>(shift)), den)
                           : round_positive(num, den * pow10(static_cast<unsigned long>(-shift)));
  long places = shift;
  if (v == pow10(static_cast<unsigned long>(digits))) {  // rounding carried into a new digit
    v /= 10;
    --places;
    ++e;
  }
  std::string s = v.get_str(10);
  std::string out = sign() < 0 ? "-" : "";
  if (e < -7 || e > 20) {
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e);
    return out;
  }
  if (places <= 0) {
    out += s + std::string(static_cast<std::size_t>(-places), '0');
  } else if (static_cast<std::size_t>(places) >= s.size()) {
    out += "0." + std::string(static_cast<std::size_t>(places) - s.size(), '0') + s;
  } else {
    out += s.substr(0, s.size() - static_cast<std::size_t>(places)) + "." +
           s.substr(s.size() - static_cast<std::size_t>(places));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace rado
