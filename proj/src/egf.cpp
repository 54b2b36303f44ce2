#include "connasym/egf.hpp"

#include <algorithm>
#include <stdexcept>

namespace connasym {

namespace {

void require_compatible(const Egf& a, const Egf& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  if (a.stride() != b.stride()) throw std::invalid_argument("stride mismatch");
}

}  // namespace

Egf::Egf(RingTag ring, int order, int stride) : ring_(ring), stride_(stride) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  c_.assign(static_cast<size_t>(order) + 1, RingElem::zero(ring));
}

Egf Egf::standard(StdSeries s, int order, RingTag ring) {
  Egf a(ring, order);
  const RingElem one = RingElem::one(ring);
  for (int n = 0; n <= order; ++n) {
    switch (s) {
      case StdSeries::One:
        if (n == 0) a.set_coeff(n, one);
        break;
      case StdSeries::Z:
        if (n == 1) a.set_coeff(n, one);
        break;
      case StdSeries::E:
        a.set_coeff(n, one / factorial(n));
        break;
      case StdSeries::EPlus:
        if (n > 0) a.set_coeff(n, one / factorial(n));
        break;
      case StdSeries::L:
        a.set_coeff(n, one);
        break;
      case StdSeries::LPlus:
        if (n > 0) a.set_coeff(n, one);
        break;
      case StdSeries::C:
        if (n > 0) a.set_coeff(n, one / BigRat(n));
        break;
    }
  }
  return a;
}

const RingElem& Egf::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("coefficient index");
  return c_[static_cast<size_t>(k)];
}

void Egf::set_coeff(int k, RingElem v) {
  if (k < 0 || k > order()) throw std::out_of_range("coefficient index");
  if (v.ring() != ring_) throw std::invalid_argument("ring mismatch");
  c_[static_cast<size_t>(k)] = std::move(v);
}

RingElem Egf::total_weight(int k) const {
  return coeff(k) * factorial(static_cast<long>(stride_) * k);
}

Egf Egf::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot extend truncation");
  Egf r(ring_, new_order, stride_);
  for (int k = 0; k <= new_order; ++k) r.set_coeff(k, coeff(k));
  return r;
}

Egf operator+(const Egf& a, const Egf& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  Egf r(a.ring(), n, a.stride());
  for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
  return r;
}

Egf operator-(const Egf& a, const Egf& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  Egf r(a.ring(), n, a.stride());
  for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
  return r;
}

Egf operator-(const Egf& a) {
  Egf r(a.ring(), a.order(), a.stride());
  for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, -a.coeff(k));
  return r;
}

Egf operator*(const Egf& a, const Egf& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  Egf r(a.ring(), n, a.stride());
  for (int k = 0; k <= n; ++k) {
    RingElem acc = RingElem::zero(a.ring());
    for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    r.set_coeff(k, acc);
  }
  return r;
}

Egf operator*(const Egf& a, const BigRat& s) {
  Egf r(a.ring(), a.order(), a.stride());
  for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, a.coeff(k) * s);
  return r;
}

Egf operator/(const Egf& a, const BigRat& s) {
  if (s.is_zero()) throw std::domain_error("division by zero");
  return a * (BigRat(1) / s);
}

Egf compose(const Egf& outer, const Egf& inner) {
  if (outer.ring() != inner.ring()) throw std::invalid_argument("ring mismatch");
  if (outer.stride() != inner.stride())
    throw std::invalid_argument("stride mismatch");
  if (!inner.coeff(0).is_zero())
    throw std::invalid_argument("composition requires zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const Egf in = inner.order() == n ? inner : inner.truncated(n);
  Egf r(outer.ring(), n, outer.stride());
  r.set_coeff(0, outer.coeff(n));
  for (int k = n - 1; k >= 0; --k) {
    r = r * in;
    r.set_coeff(0, r.coeff(0) + outer.coeff(k));
  }
  return r;
}

Egf derivative(const Egf& a) {
  if (a.stride() != 1)
    throw std::invalid_argument("derivative of a compressed series");
  if (a.order() == 0)
    throw std::invalid_argument("derivative at truncation order 0");
  Egf r(a.ring(), a.order() - 1, a.stride());
  for (int k = 0; k < a.order(); ++k)
    r.set_coeff(k, a.coeff(k + 1) * BigRat(k + 1));
  return r;
}

Egf mult_inverse(const Egf& a) {
  const RingElem inv0 = a.coeff(0).invert_unit();
  Egf r(a.ring(), a.order(), a.stride());
  r.set_coeff(0, inv0);
  for (int k = 1; k <= a.order(); ++k) {
    RingElem acc = RingElem::zero(a.ring());
    for (int i = 1; i <= k; ++i) acc += a.coeff(i) * r.coeff(k - i);
    r.set_coeff(k, -(inv0 * acc));
  }
  return r;
}

Egf comp_inverse(const Egf& a) {
  if (a.stride() != 1)
    throw std::invalid_argument("compositional inverse of a compressed series");
  if (!a.coeff(0).is_zero())
    throw std::invalid_argument("compositional inverse requires zero constant term");
  if (a.order() < 1) throw std::invalid_argument("truncation order too small");
  const RingElem inv1 = a.coeff(1).invert_unit();
  Egf b(a.ring(), a.order());
  b.set_coeff(1, inv1);
  for (int n = 2; n <= a.order(); ++n) {
    // With b known below slot n, [z^n](a o b) is linear in the unknown b_n.
    const Egf partial = compose(a.truncated(n), b.truncated(n));
    b.set_coeff(n, -(inv1 * partial.coeff(n)));
  }
  return b;
}

Egf log(const Egf& a) {
  if (!a.coeff(0).is_one())
    throw std::invalid_argument("log requires constant term 1");
  Egf f(a.ring(), a.order(), a.stride());
  for (int n = 1; n <= a.order(); ++n) {
    RingElem acc = RingElem::zero(a.ring());
    for (int i = 1; i < n; ++i) acc += f.coeff(i) * a.coeff(n - i) * BigRat(i);
    f.set_coeff(n, a.coeff(n) - acc / BigRat(n));
  }
  return f;
}

Egf exp(const Egf& a) {
  if (!a.coeff(0).is_zero())
    throw std::invalid_argument("exp requires zero constant term");
  Egf g(a.ring(), a.order(), a.stride());
  g.set_coeff(0, RingElem::one(a.ring()));
  for (int n = 1; n <= a.order(); ++n) {
    RingElem acc = RingElem::zero(a.ring());
    for (int i = 1; i <= n; ++i) acc += a.coeff(i) * g.coeff(n - i) * BigRat(i);
    g.set_coeff(n, acc / BigRat(n));
  }
  return g;
}

Egf compress(const Egf& a, int p) {
  if (p < 1) throw std::invalid_argument("stride must be positive");
  if (a.stride() != 1) throw std::invalid_argument("series is already compressed");
  if (p == 1) return a;
  for (int k = 0; k <= a.order(); ++k)
    if (k % p != 0 && !a.coeff(k).is_zero())
      throw std::invalid_argument("sequence is not p-periodic");
  Egf r(a.ring(), a.order() / p, p);
  for (int k = 0; k <= a.order() / p; ++k) r.set_coeff(k, a.coeff(p * k));
  return r;
}

Egf pow_int(const Egf& a, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  Egf r(a.ring(), a.order(), a.stride());
  r.set_coeff(0, RingElem::one(a.ring()));
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace connasym
