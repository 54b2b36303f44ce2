#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace connasym {

// Exact rational, always in lowest terms with positive denominator.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}
  BigRat(long num, long den);
  explicit BigRat(const mpz_class& z) : v_(z) {}
  explicit BigRat(const mpq_class& q);

  // "p" or "p/q", optional sign.
  static BigRat parse(const std::string& s);
  // Terminating decimal like "0.25" or "-1.5", converted exactly.
  static BigRat parse_decimal(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  BigRat abs() const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
  friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
  friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
  friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat pow(long e) const;

  std::string str() const { return v_.get_str(); }
  // Fixed-point rendering with the given number of fractional digits,
  // rounded to nearest (ties away from zero).
  std::string decimal(int digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

 private:
  mpq_class v_;
};

mpz_class factorial_z(long n);
mpz_class binomial_z(long n, long k);
// (-1)!! = 0!! = 1; defined for n >= -1.
mpz_class double_factorial_z(long n);

BigRat factorial(long n);
BigRat binomial(long n, long k);
BigRat double_factorial(long n);

}  // namespace connasym
