#pragma once

#include <string>
#include <vector>

#include "connasym/rational.hpp"

namespace connasym {

// Dense polynomial over BigRat; the variable prints as "rho".
// Trailing zero coefficients are trimmed, the zero polynomial is empty.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const BigRat& c);
  PolyQ(long c) : PolyQ(BigRat(c)) {}
  explicit PolyQ(std::vector<BigRat> coeffs);

  static PolyQ variable();
  static PolyQ monomial(const BigRat& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  BigRat coeff(int i) const;
  const std::vector<BigRat>& coeffs() const { return c_; }

  BigRat eval(const BigRat& x) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const BigRat& s);
  PolyQ& operator/=(const BigRat& s);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { a += b; return a; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { a -= b; return a; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { a *= b; return a; }
  friend PolyQ operator*(PolyQ a, const BigRat& s) { a *= s; return a; }
  friend PolyQ operator*(const BigRat& s, PolyQ a) { a *= s; return a; }
  friend PolyQ operator/(PolyQ a, const BigRat& s) { a /= s; return a; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  PolyQ pow(int e) const;

  // Compact display form, highest degree first: "rho^3+3rho^2", "rho-1", "2".
  std::string str(const std::string& var = "rho") const;

 private:
  std::vector<BigRat> c_;
  void trim();
};

}  // namespace connasym
