#pragma once

#include <string>
#include <vector>

#include "connasym/ring.hpp"

namespace connasym {

// Truncated exponential generating series. Slot k stores the power-series
// coefficient c_k, so the total weight on k atoms is c_k * k!. A series
// compressed with stride p > 1 keeps only the surviving slots: slot k then
// stores w(p*k) / (p*k)! and all operations act on the compressed variable.
enum class StdSeries { One, Z, E, EPlus, L, LPlus, C };

class Egf {
 public:
  Egf(RingTag ring, int order, int stride = 1);
  static Egf standard(StdSeries s, int order, RingTag ring = RingTag::Rational);

  RingTag ring() const { return ring_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  int stride() const { return stride_; }

  const RingElem& coeff(int k) const;
  void set_coeff(int k, RingElem v);
  // Weight of structures on stride*k atoms: coeff(k) * (stride*k)!.
  RingElem total_weight(int k) const;

  Egf truncated(int new_order) const;

  friend bool operator==(const Egf& a, const Egf& b) {
    return a.ring_ == b.ring_ && a.stride_ == b.stride_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Egf& a, const Egf& b) { return !(a == b); }

 private:
  RingTag ring_;
  int stride_;
  std::vector<RingElem> c_;
};

Egf operator+(const Egf& a, const Egf& b);
Egf operator-(const Egf& a, const Egf& b);
Egf operator-(const Egf& a);
Egf operator*(const Egf& a, const Egf& b);
Egf operator*(const Egf& a, const BigRat& s);
Egf operator/(const Egf& a, const BigRat& s);

// Substitution outer(inner); inner must have zero constant slot.
Egf compose(const Egf& outer, const Egf& inner);
// d/dz; defined for uncompressed series of positive order.
Egf derivative(const Egf& a);
// 1/a; constant slot must be a unit.
Egf mult_inverse(const Egf& a);
// Compositional inverse; a_0 = 0 and a_1 a unit, uncompressed only.
Egf comp_inverse(const Egf& a);
// log a with a_0 = 1.
Egf log(const Egf& a);
// exp a with a_0 = 0.
Egf exp(const Egf& a);
// Keep every p-th slot of an uncompressed series whose other slots all
// vanish; the result carries stride p.
Egf compress(const Egf& a, int p);
Egf pow_int(const Egf& a, int e);

}  // namespace connasym
