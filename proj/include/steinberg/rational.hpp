// Exact rational scalars. Everything downstream is built over these;
// no floating point anywhere in the library.
#ifndef STEINBERG_RATIONAL_HPP
#define STEINBERG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace steinberg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// gcd on Q, used for polynomial contents: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
// Returns a nonnegative rational; gcd(0,0) = 0.
inline Rat rat_gcd(const Rat& a, const Rat& b)
{
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    Int n = gcd(rat_num(a), rat_num(b));
    if (n < 0) n = -n;
    Int d = lcm(rat_den(a), rat_den(b));
    return Rat(n, d);
}

} // namespace steinberg

#endif
