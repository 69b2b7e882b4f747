// Hyperoctahedral group elements: signed permutations of {1..d} acting on
// the variables x_1..x_d (hbar and z are fixed).
#ifndef STEINBERG_SIGNED_PERM_HPP
#define STEINBERG_SIGNED_PERM_HPP

#include <vector>

#include "steinberg/ratfunc.hpp"

namespace steinberg {

class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(int d);                       // identity
    SignedPerm(std::vector<int> dest, std::vector<int> sign);

    static SignedPerm identity(int d) { return SignedPerm(d); }
    static SignedPerm transposition(int d, int a, int b);   // 0-based positions
    static SignedPerm sign_flip(int d, int a);

    int d() const { return static_cast<int>(dest_.size()); }
    int dest(int t) const { return dest_[t]; }        // x_t
    int sign(int t) const { return sign_[t]; }        // image sign of x_t

    bool is_identity() const;

    // act(u, act(v, f)) == act(u*v, f)
    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;

    MPoly act(const MPoly& p) const;
    RatFunc act(const RatFunc& f) const;

    // Coxeter length in type B/C; used to pick coset representatives.
    int length() const;

    // Signed one-line notation, e.g. [2, -1] for x_1 -> x_2, x_2 -> -x_1.
    std::vector<int> one_line() const;
    std::string str() const;

    bool operator==(const SignedPerm&) const = default;
    bool operator<(const SignedPerm& o) const;        // lex on one-line form

private:
    std::array<int, kMaxX> images() const;
    std::vector<int> dest_;   // dest_[t] in [0, d)
    std::vector<int> sign_;   // +1 / -1
};

struct LengthLexLess {
    bool operator()(const SignedPerm& a, const SignedPerm& b) const
    {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    }
};

} // namespace steinberg

#endif
