// Normalized rational functions: gcd(num, den) = 1 and den monic under the
// fixed monomial order, so equality is a syntactic check.
#ifndef STEINBERG_RATFUNC_HPP
#define STEINBERG_RATFUNC_HPP

#include <string>

#include "steinberg/mpoly.hpp"

namespace steinberg {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const MPoly& p) : num_(p), den_(1) {}
    RatFunc(const Rat& c) : num_(MPoly(c)), den_(1) {}
    RatFunc(long c) : num_(MPoly(c)), den_(1) {}
    RatFunc(MPoly num, MPoly den);      // normalizes; throws on den == 0

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);   // throws on b == 0
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Cross-multiplied equality; agrees with == on normalized forms and is
    // used by tests as an independent route.
    bool equals_cross(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

    RatFunc substitute_signed(const std::array<int, kMaxX>& images) const;
    RatFunc at_hbar_zero() const;       // throws if the denominator vanishes at hbar = 0

    std::string str() const;

private:
    void normalize();
    MPoly num_, den_;
};

inline RatFunc one_plus(const RatFunc& f) { return RatFunc(1) + f; }

} // namespace steinberg

#endif
