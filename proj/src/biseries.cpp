#include "rlag/series.hpp"

namespace rlag {

BiSeries::BiSeries(unsigned order) : order_(order), c_(index(0, order + 1)) {}

std::size_t BiSeries::index(unsigned i, unsigned j)
{
  const std::size_t d = i + j;
  return d * (d + 1) / 2 + i;
}

BiSeries BiSeries::zero(unsigned order) { return BiSeries(order); }

BiSeries BiSeries::constant(const Polynomial& c, unsigned order)
{
  BiSeries r(order);
  r.at(0, 0) = c;
  return r;
}

BiSeries BiSeries::s(unsigned order)
{
  BiSeries r(order);
  if (order >= 1)
    r.at(1, 0) = Polynomial(1);
  return r;
}

BiSeries BiSeries::t(unsigned order)
{
  BiSeries r(order);
  if (order >= 1)
    r.at(0, 1) = Polynomial(1);
  return r;
}

const Polynomial& BiSeries::coeff(unsigned i, unsigned j) const
{
  if (i + j > order_)
    throw TruncationError("BiSeries::coeff: s^" + std::to_string(i) + " t^" + std::to_string(j) +
                          " beyond total order " + std::to_string(order_));
  return c_[index(i, j)];
}

void BiSeries::shrink_to(unsigned order)
{
  if (order < order_) {
    order_ = order;
    c_.resize(index(0, order + 1));
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& o)
{
  shrink_to(o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    c_[k] += o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o)
{
  shrink_to(o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    c_[k] -= o.c_[k];
  return *this;
}

BiSeries operator-(const BiSeries& a)
{
  BiSeries r = a;
  for (auto& c : r.c_)
    c = -c;
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
  const unsigned n = std::min(a.order_, b.order_);
  BiSeries r(n);
  for (unsigned da = 0; da <= n; ++da)
    for (unsigned ia = 0; ia <= da; ++ia) {
      const Polynomial& ca = a.c_[BiSeries::index(ia, da - ia)];
      if (ca.is_zero())
        continue;
      for (unsigned db = 0; da + db <= n; ++db)
        for (unsigned ib = 0; ib <= db; ++ib) {
          const Polynomial& cb = b.c_[BiSeries::index(ib, db - ib)];
          if (!cb.is_zero())
            r.at(ia + ib, da - ia + db - ib) += ca * cb;
        }
    }
  return r;
}

BiSeries operator*(const Polynomial& k, BiSeries a)
{
  for (auto& c : a.c_)
    c = k * c;
  return a;
}

BiSeries BiSeries::reciprocal() const
{
  auto inv0 = try_inverse(c_[0]);
  if (!inv0)
    throw NonUnitError("BiSeries::reciprocal: constant term " + c_[0].str() + " is not a unit");
  // 1/(c0 + r) = c0^{-1} sum_i (-r/c0)^i; r has total order >= 1.
  BiSeries r = *this;
  r.c_[0] = Polynomial();
  const BiSeries q = -(*inv0 * r);
  BiSeries sum = one(order_);
  BiSeries term = one(order_);
  for (unsigned i = 1; i <= order_; ++i) {
    term = term * q;
    sum += term;
  }
  return *inv0 * sum;
}

BiSeries exp(const BiSeries& u)
{
  if (!u.constant_is_zero())
    throw NonUnitError("exp: BiSeries argument has nonzero constant term");
  BiSeries sum = BiSeries::one(u.order());
  BiSeries term = BiSeries::one(u.order());
  for (unsigned i = 1; i <= u.order(); ++i) {
    term = Polynomial(Rational(1, static_cast<long>(i))) * (term * u);
    sum += term;
  }
  return sum;
}

} // namespace rlag
