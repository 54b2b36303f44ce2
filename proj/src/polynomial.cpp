#include "connasym/polynomial.hpp"

#include <stdexcept>

namespace connasym {

PolyQ::PolyQ(const BigRat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::variable() { return monomial(BigRat(1), 1); }

PolyQ PolyQ::monomial(const BigRat& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  if (c.is_zero()) return PolyQ();
  std::vector<BigRat> v(static_cast<size_t>(deg) + 1, BigRat(0));
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRat PolyQ::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return BigRat(0);
  return c_[static_cast<size_t>(i)];
}

BigRat PolyQ::eval(const BigRat& x) const {
  BigRat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyQ& PolyQ::operator/=(const BigRat& s) {
  if (s.is_zero()) throw std::domain_error("division by zero");
  for (auto& c : c_) c /= s;
  return *this;
}

PolyQ PolyQ::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  PolyQ r(BigRat(1));
  PolyQ base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRat c = coeff(i);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    const std::string mag = c.abs().str();
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace connasym
