#include "steinberg/ratfunc.hpp"

#include <stdexcept>

namespace steinberg {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!den_.is_one()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divided_by(g);
            den_ = *den_.divided_by(g);
        }
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_one())
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MPoly bred = *b.den_.divided_by(g);
    MPoly ared = *a.den_.divided_by(g);
    return RatFunc(a.num_ * bred + b.num_ * ared, a.den_ * bred);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-cancel first to keep gcd inputs small
    MPoly g1 = gcd(a.num_, b.den_);
    MPoly g2 = gcd(b.num_, a.den_);
    MPoly n1 = g1.is_one() ? a.num_ : *a.num_.divided_by(g1);
    MPoly d2 = g1.is_one() ? b.den_ : *b.den_.divided_by(g1);
    MPoly n2 = g2.is_one() ? b.num_ : *b.num_.divided_by(g2);
    MPoly d1 = g2.is_one() ? a.den_ : *a.den_.divided_by(g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    RatFunc inv(b.den_, b.num_);
    return a * inv;
}

RatFunc RatFunc::substitute_signed(const std::array<int, kMaxX>& images) const
{
    return RatFunc(num_.substitute_signed(images), den_.substitute_signed(images));
}

RatFunc RatFunc::at_hbar_zero() const
{
    MPoly d0 = den_.at_hbar_zero();
    if (d0.is_zero()) throw std::domain_error("pole at hbar = 0");
    return RatFunc(num_.at_hbar_zero(), d0);
}

std::string RatFunc::str() const
{
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace steinberg
