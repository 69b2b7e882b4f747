#include "steinberg/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace steinberg {

void sort_weights(WeightMultiset& w)
{
    std::sort(w.begin(), w.end(), [](const MPoly& a, const MPoly& b) {
        auto sa = a.str(), sb = b.str();
        return sa < sb;
    });
}

WeightMultiset all_roots(LieType lie_type, int d)
{
    WeightMultiset out;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            for (int sa : {1, -1})
                for (int sb : {1, -1})
                    out.push_back(MPoly::x(a) * Rat(sa) + MPoly::x(b) * Rat(sb));
        }
        if (lie_type == LieType::C) {
            out.push_back(MPoly::x(a) * Rat(2));
            out.push_back(MPoly::x(a) * Rat(-2));
        } else {
            out.push_back(MPoly::x(a));
            out.push_back(-MPoly::x(a));
        }
    }
    sort_weights(out);
    return out;
}

namespace {

// xi_nu evaluation of a degree-1 form: blocks get value n+1-i, middle 0.
long eval_on_cocharacter(const MPoly& form, const DimVec& nu, const std::vector<long>& xi)
{
    long v = 0;
    for (const auto& [m, c] : form.terms()) {
        for (int t = 0; t < nu.d; ++t) {
            if (m.deg(t) == 1) {
                // coefficient is integral for roots
                v += static_cast<long>(rat_num(c)) * xi[t];
            }
        }
    }
    return v;
}

std::vector<long> block_cocharacter(const DimVec& nu)
{
    std::vector<long> xi(nu.d, 0);
    for (int t = 0; t < nu.d; ++t) {
        int b = nu.block_of(t);
        xi[t] = b == 0 ? 0 : nu.n + 1 - b;
    }
    return xi;
}

} // namespace

WeightMultiset tangent_weights(const DimVec& nu)
{
    auto xi = block_cocharacter(nu);
    WeightMultiset out;
    for (const auto& alpha : all_roots(nu.lie_type, nu.d))
        if (eval_on_cocharacter(alpha, nu, xi) < 0) out.push_back(alpha);
    sort_weights(out);
    return out;
}

WeightMultiset positive_complement(const DimVec& nu)
{
    WeightMultiset out;
    for (const auto& alpha : tangent_weights(nu)) out.push_back(-alpha);
    sort_weights(out);
    return out;
}

MPoly euler_class(const DimVec& nu, const SignedPerm& w, bool with_cotangent)
{
    MPoly prod(1);
    for (const auto& alpha : tangent_weights(nu)) {
        prod *= alpha;
        if (with_cotangent) prod *= (-alpha + MPoly::hbar());
    }
    return w.act(prod);
}

WeightMultiset chern_roots(const DimVec& nu, int j)
{
    if (j < 0 || j > nu.n + 1) throw std::invalid_argument("bundle index out of range");
    WeightMultiset out;
    if (j == 0) return out;
    if (j <= nu.n) {
        for (int t = 0; t < nu.nubar[j - 1]; ++t) out.push_back(MPoly::x(t));
        return out;
    }
    for (int t = 0; t < nu.nubar[nu.n - 1]; ++t) out.push_back(MPoly::x(t));
    for (int t = nu.nubar[nu.n - 1]; t < nu.d; ++t) {
        out.push_back(MPoly::x(t));
        out.push_back(-MPoly::x(t));
    }
    if (nu.lie_type == LieType::B) out.push_back(MPoly());   // the zero weight
    return out;
}

std::vector<MPoly> invariant_basis(const DimVec& nu, int max_degree)
{
    ParabolicGroup P = parabolic_group(nu);
    const int d = nu.d;

    // enumerate monomials in x_1..x_d of total degree <= max_degree
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(d, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d) {
            monos.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_degree);

    std::set<std::vector<int>> used;
    std::vector<MPoly> basis;
    for (const auto& mexp : monos) {
        if (used.count(mexp)) continue;
        MPoly mono(1);
        for (int t = 0; t < d; ++t) mono *= MPoly::x(t, mexp[t]);
        // orbit sum
        std::set<std::pair<std::vector<int>, int>> orbit_keys;   // (exps, sign)
        MPoly sum;
        bool kills = false;
        for (const auto& w : P.elements) {
            MPoly im = w.act(mono);
            std::vector<int> key(d, 0);
            const auto& lm = im.terms().begin()->first;
            for (int t = 0; t < d; ++t) key[t] = lm.deg(t);
            int sgn = im.terms().begin()->second > 0 ? 1 : -1;
            if (orbit_keys.insert({key, sgn}).second) {
                if (orbit_keys.count({key, -sgn})) kills = true;
                sum += im;
            }
            used.insert(key);
        }
        if (kills || sum.is_zero()) continue;    // odd-type monomials cancel
        basis.push_back(sum.primitive_part());
    }
    std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.str() < b.str();
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

bool is_invariant(const ParabolicGroup& P, const MPoly& f)
{
    for (const auto& g : P.generators)
        if (!(g.act(f) == f)) return false;
    return true;
}

int flag_dimension_by_counts(const DimVec& nu)
{
    auto count_group_roots = [&](LieType t, int rank) {
        int pairs = rank * (rank - 1) / 2;
        return 4 * pairs + 2 * rank;   // same count for B and C
    };
    int total = count_group_roots(nu.lie_type, nu.d);
    // Levi: GL(nu_1) x ... x GL(nu_n) x (Sp or SO of the middle)
    int levi = 0;
    for (int i = 0; i < nu.n; ++i) levi += nu.nu[i] * (nu.nu[i] - 1);   // #roots of gl_k = k(k-1)
    int m = nu.middle_size();
    levi += count_group_roots(nu.lie_type, m);
    return (total - levi) / 2;
}

} // namespace steinberg
