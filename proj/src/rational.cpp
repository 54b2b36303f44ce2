#include "connasym/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace connasym {

BigRat::BigRat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat::BigRat(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

BigRat BigRat::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator: " + s);
  q.canonicalize();
  BigRat r;
  r.v_ = q;
  return r;
}

BigRat BigRat::parse_decimal(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  std::string digits;
  bool neg = false;
  size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = (t[i++] == '-');
  long frac = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal: " + s);
      seen_dot = true;
    } else if (isdigit(static_cast<unsigned char>(t[i]))) {
      digits += t[i];
      seen_digit = true;
      if (seen_dot) ++frac;
    } else {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  return BigRat(mpq_class(num, den));
}

BigRat BigRat::abs() const {
  BigRat r = *this;
  r.v_ = ::abs(v_);
  return r;
}

BigRat BigRat::operator-() const {
  BigRat r = *this;
  r.v_ = -v_;
  return r;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat BigRat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return (BigRat(1) / *this).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  BigRat r;
  r.v_ = mpq_class(n, d);  // already canonical: num, den coprime
  return r;
}

std::string BigRat::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class n = v_.get_num() * scale;
  mpz_class d = v_.get_den();
  bool neg = n < 0;
  if (neg) n = -n;
  mpz_class q = n / d, r = n % d;
  if (2 * r >= d) q += 1;
  mpz_class ip = q / scale, fp = q % scale;
  std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string f = fp.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) {
  return os << r.str();
}

mpz_class factorial_z(long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class binomial_z(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

mpz_class double_factorial_z(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  mpz_class f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigRat factorial(long n) { return BigRat(factorial_z(n)); }
BigRat binomial(long n, long k) { return BigRat(binomial_z(n, k)); }
BigRat double_factorial(long n) { return BigRat(double_factorial_z(n)); }

}  // namespace connasym
