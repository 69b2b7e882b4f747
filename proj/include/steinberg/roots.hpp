// Root and fixed-point data of the isotropic flag varieties: tangent weights
// of G/P_nu, equivariant Euler classes, Chern roots of the tautological
// bundles and W_P-invariant polynomial bases.  Varieties enter only through
// this data.
#ifndef STEINBERG_ROOTS_HPP
#define STEINBERG_ROOTS_HPP

#include <vector>

#include "steinberg/dimvec.hpp"
#include "steinberg/signed_perm.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg {

using WeightMultiset = std::vector<MPoly>;   // degree <= 1 forms, sorted

void sort_weights(WeightMultiset& w);

// All roots of g: +-x_a +- x_b (a<b) plus +-2x_a (type C) or +-x_a (type B).
WeightMultiset all_roots(LieType lie_type, int d);

// Weights of g/p_nu: roots negative on the block cocharacter xi_nu
// (value n+1-i on block i, 0 on the middle).  |result| = dim Fl_nu.
WeightMultiset tangent_weights(const DimVec& nu);

// Positive counterparts {-a : a in tangent_weights}.
WeightMultiset positive_complement(const DimVec& nu);

// w-translate of prod of tangent weights, times prod(-alpha + hbar) when
// with_cotangent is set.
MPoly euler_class(const DimVec& nu, const SignedPerm& w, bool with_cotangent);

// Chern roots of V_j at the base point; j = 0..n+1.  j <= n gives
// {x_1..x_{nubar_j}}; j = n+1 adds the middle +-x pairs and, in type B, the
// zero weight.
WeightMultiset chern_roots(const DimVec& nu, int j);

// Basis of W_{P_nu}-invariant polynomials of degree <= max_degree given by
// orbit sums of monomials in x_1..x_d.
std::vector<MPoly> invariant_basis(const DimVec& nu, int max_degree);

bool is_invariant(const ParabolicGroup& P, const MPoly& f);

// dim Fl_nu computed independently from block sizes:
// (#roots of g - #roots of the Levi) / 2.
int flag_dimension_by_counts(const DimVec& nu);

} // namespace steinberg

#endif
