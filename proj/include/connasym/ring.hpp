#pragma once

#include <string>
#include <variant>

#include "connasym/polynomial.hpp"

namespace connasym {

enum class RingTag { Rational, PolynomialInRho };

const char* ring_name(RingTag t);
RingTag ring_from_name(const std::string& name);

// One coefficient from either supported ring. Mixed-ring arithmetic is an
// error, never a silent promotion; rational scalars act on both rings.
class RingElem {
 public:
  RingElem() : v_(BigRat(0)) {}
  RingElem(BigRat q) : v_(std::move(q)) {}
  RingElem(PolyQ p) : v_(std::move(p)) {}

  static RingElem zero(RingTag t);
  static RingElem one(RingTag t);

  RingTag ring() const {
    return std::holds_alternative<BigRat>(v_) ? RingTag::Rational
                                              : RingTag::PolynomialInRho;
  }
  bool is_zero() const;
  bool is_one() const;

  const BigRat& rat() const;
  const PolyQ& poly() const;

  // Rational value of the element: polynomials evaluated at rho,
  // rationals returned as-is.
  BigRat eval(const BigRat& rho) const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const BigRat& s);
  RingElem& operator/=(const BigRat& s);

  friend RingElem operator+(RingElem a, const RingElem& b) { a += b; return a; }
  friend RingElem operator-(RingElem a, const RingElem& b) { a -= b; return a; }
  friend RingElem operator*(RingElem a, const RingElem& b) { a *= b; return a; }
  friend RingElem operator*(RingElem a, const BigRat& s) { a *= s; return a; }
  friend RingElem operator*(const BigRat& s, RingElem a) { a *= s; return a; }
  friend RingElem operator/(RingElem a, const BigRat& s) { a /= s; return a; }

  // Multiplicative inverse of a unit (nonzero rational, nonzero constant
  // polynomial); anything else is an error.
  RingElem invert_unit() const;

  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  std::string str() const;

 private:
  std::variant<BigRat, PolyQ> v_;
};

}  // namespace connasym
