#include "connasym/ring.hpp"

#include <stdexcept>

namespace connasym {

const char* ring_name(RingTag t) {
  return t == RingTag::Rational ? "rational" : "poly_rho";
}

RingTag ring_from_name(const std::string& name) {
  if (name == "rational") return RingTag::Rational;
  if (name == "poly_rho") return RingTag::PolynomialInRho;
  throw std::invalid_argument("unknown ring: " + name);
}

RingElem RingElem::zero(RingTag t) {
  return t == RingTag::Rational ? RingElem(BigRat(0)) : RingElem(PolyQ());
}

RingElem RingElem::one(RingTag t) {
  return t == RingTag::Rational ? RingElem(BigRat(1)) : RingElem(PolyQ(BigRat(1)));
}

bool RingElem::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool RingElem::is_one() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return q->is_one();
  const PolyQ& p = std::get<PolyQ>(v_);
  return p.is_constant() && p.coeff(0).is_one();
}

const BigRat& RingElem::rat() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return *q;
  throw std::invalid_argument("ring mismatch: expected rational element");
}

const PolyQ& RingElem::poly() const {
  if (auto* p = std::get_if<PolyQ>(&v_)) return *p;
  throw std::invalid_argument("ring mismatch: expected polynomial element");
}

BigRat RingElem::eval(const BigRat& rho) const {
  if (auto* q = std::get_if<BigRat>(&v_)) return *q;
  return std::get<PolyQ>(v_).eval(rho);
}

RingElem RingElem::operator-() const {
  return std::visit([](const auto& x) { return RingElem(-x); }, v_);
}

namespace {
[[noreturn]] void mismatch() {
  throw std::invalid_argument("ring mismatch in arithmetic");
}
}  // namespace

RingElem& RingElem::operator+=(const RingElem& o) {
  if (ring() != o.ring()) mismatch();
  std::visit(
      [](auto& a, const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                     std::decay_t<decltype(b)>>)
          a += b;
      },
      v_, o.v_);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  if (ring() != o.ring()) mismatch();
  std::visit(
      [](auto& a, const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                     std::decay_t<decltype(b)>>)
          a -= b;
      },
      v_, o.v_);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  if (ring() != o.ring()) mismatch();
  std::visit(
      [](auto& a, const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                     std::decay_t<decltype(b)>>)
          a *= b;
      },
      v_, o.v_);
  return *this;
}

RingElem& RingElem::operator*=(const BigRat& s) {
  std::visit([&](auto& x) { x *= s; }, v_);
  return *this;
}

RingElem& RingElem::operator/=(const BigRat& s) {
  if (s.is_zero()) throw std::domain_error("division by zero");
  std::visit([&](auto& x) { x /= s; }, v_);
  return *this;
}

RingElem RingElem::invert_unit() const {
  if (auto* q = std::get_if<BigRat>(&v_)) {
    if (q->is_zero()) throw std::domain_error("zero is not a unit");
    return RingElem(BigRat(1) / *q);
  }
  const PolyQ& p = std::get<PolyQ>(v_);
  if (!p.is_constant() || p.is_zero())
    throw std::domain_error("polynomial is not a unit");
  return RingElem(PolyQ(BigRat(1) / p.coeff(0)));
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) return false;
  return a.v_ == b.v_;
}

std::string RingElem::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

}  // namespace connasym
