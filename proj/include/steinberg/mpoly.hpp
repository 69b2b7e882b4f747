// Sparse multivariate polynomials over Q in the fixed variable universe
// x_1..x_6, hbar, z.  Monomials are ordered graded-lexicographically with
// x_1 > x_2 > ... > x_6 > hbar > z; the leading term is the begin() of the
// term map.  gcd is the primitive PRS algorithm (content / primitive part
// recursion), which is all the normalization layer needs.
#ifndef STEINBERG_MPOLY_HPP
#define STEINBERG_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinberg/rational.hpp"

namespace steinberg {

inline constexpr int kMaxVars = 8;   // x_1..x_6, hbar, z
inline constexpr int kMaxX    = 6;
inline constexpr int kHbar    = 6;
inline constexpr int kZ       = 7;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};

    int total() const
    {
        int t = 0;
        for (auto v : e) t += v;
        return t;
    }
    int deg(int var) const { return e[var]; }
    bool operator==(const Mono&) const = default;
};

// grlex, higher monomial first when used as map comparator below.
struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const
    {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta > tb;
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

class MPoly {
public:
    using TermMap = std::map<Mono, Rat, MonoGrlexGreater>;

    MPoly() = default;
    explicit MPoly(const Rat& c);   // constant
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly var(int index, int power = 1);
    static MPoly x(int i, int power = 1) { return var(i, power); }  // x_{i+1}
    static MPoly hbar() { return var(kHbar); }
    static MPoly z() { return var(kZ); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Rat constant_value() const;          // requires is_constant()

    const TermMap& terms() const { return terms_; }
    int total_degree() const;            // 0 for the zero polynomial
    int degree(int var) const;
    bool uses(int var) const { return degree(var) > 0; }

    const Mono& leading_mono() const;    // requires nonzero
    const Rat& leading_coeff() const;    // requires nonzero

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly operator*(const Rat& c) const;
    MPoly pow(unsigned k) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    // Exact division; nullopt when o does not divide *this.
    std::optional<MPoly> divided_by(const MPoly& o) const;

    // Substitution x_i -> images[i] (a signed variable), hbar and z fixed.
    // images[i] = +-(j+1) meaning x_i -> +-x_j (1-based magnitude).
    MPoly substitute_signed(const std::array<int, kMaxX>& images) const;

    // hbar := 0 (drops terms), z untouched.
    MPoly at_hbar_zero() const;

    // Decompose as a polynomial in `var` with MPoly coefficients.
    std::map<int, MPoly> coeffs_in(int var) const;
    static MPoly assemble_in(int var, const std::map<int, MPoly>& coeffs);

    Rat content() const;                 // nonnegative rational, 0 iff zero
    MPoly primitive_part() const;        // content 1, positive leading coeff

    std::string str() const;

    void add_term(const Mono& m, const Rat& c);   // accumulate, prune zeros

private:
    TermMap terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

// Independent total-degree-graded string form used by tests and reports.
std::string var_name(int index);

} // namespace steinberg

#endif
