#include "steinberg/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace steinberg {

bool ParabolicGroup::contains(const SignedPerm& w) const
{
    return std::find(elements.begin(), elements.end(), w) != elements.end();
}

std::vector<SignedPerm> full_weyl_group(int d)
{
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPerm> out;
    out.reserve((1u << d) * 1u);
    std::sort(perm.begin(), perm.end());
    do {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<int> sign(d, 1);
            for (int t = 0; t < d; ++t)
                if (mask & (1u << t)) sign[t] = -1;
            out.emplace_back(perm, sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(), LengthLexLess{});
    return out;
}

ParabolicGroup parabolic_group(const DimVec& nu)
{
    const int d = nu.d;
    const int n = nu.n;

    // block boundaries in 0-based positions
    std::vector<std::pair<int, int>> blocks;   // [lo, hi)
    int lo = 0;
    for (int i = 0; i < n; ++i) {
        blocks.emplace_back(lo, nu.nubar[i]);
        lo = nu.nubar[i];
    }
    const int mid_lo = nu.nubar[n - 1];

    ParabolicGroup P;
    P.dimvec = nu;

    // generators: adjacent transpositions in each isotropic block, adjacent
    // transpositions and one sign flip in the middle block
    for (auto [a, b] : blocks)
        for (int t = a; t + 1 < b; ++t)
            P.generators.push_back(SignedPerm::transposition(d, t, t + 1));
    for (int t = mid_lo; t + 1 < d; ++t)
        P.generators.push_back(SignedPerm::transposition(d, t, t + 1));
    if (mid_lo < d) P.generators.push_back(SignedPerm::sign_flip(d, d - 1));

    // enumerate: permutations preserving each block, arbitrary signs on the
    // middle block
    std::vector<std::vector<int>> block_perms{{}};
    std::vector<int> base(d);
    std::iota(base.begin(), base.end(), 0);

    auto expand = [&](int a, int b) {
        std::vector<int> idx(base.begin() + a, base.begin() + b);
        std::sort(idx.begin(), idx.end());
        std::vector<std::vector<int>> next;
        do {
            for (const auto& prefix : block_perms) {
                auto row = prefix;
                row.insert(row.end(), idx.begin(), idx.end());
                next.push_back(row);
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        block_perms = std::move(next);
    };
    for (auto [a, b] : blocks) expand(a, b);
    expand(mid_lo, d);

    const int m = d - mid_lo;
    for (const auto& dest : block_perms) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> sign(d, 1);
            for (int t = 0; t < m; ++t)
                if (mask & (1u << t)) sign[mid_lo + t] = -1;
            P.elements.emplace_back(dest, sign);
        }
    }
    std::sort(P.elements.begin(), P.elements.end(), LengthLexLess{});
    return P;
}

std::vector<SignedPerm> intersection(const std::vector<SignedPerm>& a,
                                     const std::vector<SignedPerm>& b)
{
    std::set<SignedPerm> sb(b.begin(), b.end());
    std::vector<SignedPerm> out;
    for (const auto& w : a)
        if (sb.count(w)) out.push_back(w);
    std::sort(out.begin(), out.end(), LengthLexLess{});
    return out;
}

std::vector<SignedPerm> coset_reps(const std::vector<SignedPerm>& big,
                                   const std::vector<SignedPerm>& small)
{
    if (small.empty()) throw std::invalid_argument("empty subgroup");
    std::set<SignedPerm> inbig(big.begin(), big.end());
    for (const auto& s : small) {
        if (!inbig.count(s)) throw std::invalid_argument("small is not contained in big");
    }
    // closure check (subgroup, not just subset)
    std::set<SignedPerm> insmall(small.begin(), small.end());
    for (const auto& a : small)
        for (const auto& b : small)
            if (!insmall.count(a * b)) throw std::invalid_argument("small is not a subgroup");

    std::set<SignedPerm> seen;
    std::vector<SignedPerm> reps;
    // big is sorted by (length, lex), so the first unseen element of each
    // coset is the minimal-length lex-least representative
    std::vector<SignedPerm> sorted = big;
    std::sort(sorted.begin(), sorted.end(), LengthLexLess{});
    for (const auto& w : sorted) {
        if (seen.count(w)) continue;
        reps.push_back(w);
        for (const auto& s : small) seen.insert(w * s);
    }
    if (reps.size() * small.size() != big.size())
        throw std::invalid_argument("coset decomposition mismatch (big not a group?)");
    return reps;
}

} // namespace steinberg
