// Parabolic subgroups of the hyperoctahedral group attached to dimension
// vectors, and minimal-length coset representative enumeration.  Groups are
// stored by explicit element lists; everything here is desk scale.
#ifndef STEINBERG_WEYL_HPP
#define STEINBERG_WEYL_HPP

#include <vector>

#include "steinberg/dimvec.hpp"
#include "steinberg/signed_perm.hpp"

namespace steinberg {

struct ParabolicGroup {
    DimVec dimvec;
    std::vector<SignedPerm> elements;     // sorted by (length, lex)
    std::vector<SignedPerm> generators;   // block transpositions + middle flip

    std::size_t order() const { return elements.size(); }
    bool contains(const SignedPerm& w) const;
};

// The full hyperoctahedral group W(B_d/C_d), order 2^d d!.
std::vector<SignedPerm> full_weyl_group(int d);

// W_{P_nu}: permutations within blocks 1..n, signed permutations of the
// middle positions.  |W_P| = (prod nu_i!) * 2^m m!, m = d - nubar_n.
ParabolicGroup parabolic_group(const DimVec& nu);

// Minimal-length representatives (lexicographic tie-break), one per left
// coset w*small inside big.  Throws when small is not a subgroup of big.
std::vector<SignedPerm> coset_reps(const std::vector<SignedPerm>& big,
                                   const std::vector<SignedPerm>& small);

std::vector<SignedPerm> intersection(const std::vector<SignedPerm>& a,
                                     const std::vector<SignedPerm>& b);

} // namespace steinberg

#endif
