#include "steinberg/generators.hpp"

#include <stdexcept>

namespace steinberg {

namespace {

// 1 + hbar/form, written over a common denominator
RatFunc one_plus_hbar_over(const MPoly& form)
{
    return RatFunc(form + MPoly::hbar(), form);
}

int block_sign(const GeneratorSpec& spec, const DimVec& tgt)
{
    if (spec.sign_mode == SignMode::FormulasAsStated) return 1;
    if (spec.kind == GenKind::F) return tgt.nu[spec.i - 1] % 2 == 0 ? 1 : -1;
    int e = tgt.nu[spec.i];   // nu_{i+1} of the target
    if (spec.lie_type == LieType::C && spec.i == spec.n) e += 1;
    return e % 2 == 0 ? 1 : -1;
}

SkewElem symmetrize(const ParabolicGroup& Ptgt, const ParabolicGroup& Psrc, const RatFunc& rho)
{
    auto inter = intersection(Ptgt.elements, Psrc.elements);
    auto reps = coset_reps(Ptgt.elements, inter);
    SkewElem s;
    for (const auto& w : reps) s.add_term(w, w.act(rho));
    return s;
}

} // namespace

BlockOp build_E(const GeneratorSpec& spec)
{
    Ctx ctx{spec.lie_type, spec.n, spec.d};
    BlockOp op(ctx);
    for (const auto& tgt : components(spec.lie_type, spec.n, spec.d)) {
        std::vector<int> src_key;
        if (!shift_key(tgt.key(), spec.i, +1, spec.d, src_key)) continue;
        DimVec src = dimvec_from_key(spec.lie_type, spec.n, spec.d, src_key);

        const int p = tgt.nubar[spec.i - 1];          // 0-based moving position
        MPoly xp = MPoly::x(p);
        RatFunc rho(xp.pow(spec.r));
        if (spec.i < spec.n) {
            for (int t = p + 1; t < tgt.nubar[spec.i]; ++t)
                rho *= one_plus_hbar_over(xp - MPoly::x(t));
        } else {
            for (int t = p + 1; t < spec.d; ++t) {
                rho *= one_plus_hbar_over(xp - MPoly::x(t));
                rho *= one_plus_hbar_over(xp + MPoly::x(t));
            }
            MPoly mid = spec.lie_type == LieType::C ? xp * Rat(2) : xp;
            rho *= one_plus_hbar_over(mid);
        }
        if (block_sign(spec, tgt) < 0) rho = -rho;

        op.add_block(src.key(), tgt.key(),
                     symmetrize(parabolic_group(tgt), parabolic_group(src), rho));
    }
    return op;
}

BlockOp build_F(const GeneratorSpec& spec, bool theorem_direction)
{
    Ctx ctx{spec.lie_type, spec.n, spec.d};
    BlockOp op(ctx);
    for (const auto& tgt : components(spec.lie_type, spec.n, spec.d)) {
        std::vector<int> src_key;
        if (!shift_key(tgt.key(), spec.i, -1, spec.d, src_key)) continue;
        DimVec src = dimvec_from_key(spec.lie_type, spec.n, spec.d, src_key);

        const int p = tgt.nubar[spec.i - 1] - 1;      // 0-based moving position
        MPoly xp = MPoly::x(p);
        RatFunc rho(xp.pow(spec.r));
        int lo = spec.i >= 2 ? tgt.nubar[spec.i - 2] : 0;
        for (int t = lo; t < p; ++t) {
            MPoly den = theorem_direction ? xp - MPoly::x(t) : MPoly::x(t) - xp;
            rho *= one_plus_hbar_over(den);
        }
        if (block_sign(spec, tgt) < 0) rho = -rho;

        op.add_block(src.key(), tgt.key(),
                     symmetrize(parabolic_group(tgt), parabolic_group(src), rho));
    }
    return op;
}

ChernRootSet chern_root_set(const DimVec& nu, int i)
{
    ChernRootSet s;
    MPoly half_h = MPoly::hbar() * Rat(1, 2);
    for (const auto& a : chern_roots(nu, i + 1)) s.A.push_back(a - half_h);
    for (const auto& a : chern_roots(nu, i - 1)) s.A.push_back(a - half_h);
    s.B = chern_roots(nu, i);
    return s;
}

MPoly h_multiplier(const DimVec& nu, int i, int r, HMode mode)
{
    ChernRootSet roots = chern_root_set(nu, i);
    if (mode == HMode::Monomial) {
        // literal hbar^1 z^{-r-1} coefficient of the lambda-ratio: the
        // shifts drop out and only the plain power sums remain
        MPoly h;
        for (const auto& a : roots.A) h += a.at_hbar_zero().pow(r);
        for (const auto& b : roots.B) h -= b.pow(r) * Rat(2);
        return h;
    }

    MPoly z = MPoly::z(), hb = MPoly::hbar();
    MPoly num(1), den(1);
    MPoly half_h = hb * Rat(1, 2);
    for (const auto& a : roots.A) {
        num *= z - a + half_h;
        den *= z - a - half_h;
    }
    for (const auto& b : roots.B) {
        num *= z - b - hb;
        den *= z - b + hb;
    }
    RatFunc ratio(num, den);
    RatFunc shifted = (ratio - RatFunc(1)) / RatFunc(hb);
    SeriesZ s = series_coeffs(shifted, r + 1);
    const RatFunc& c = s.coeffs[r + 1];
    if (!c.is_polynomial())
        throw std::domain_error("H series coefficient failed to clear to a polynomial");
    return c.num();
}

BlockOp build_H(const GeneratorSpec& spec)
{
    Ctx ctx{spec.lie_type, spec.n, spec.d};
    if (spec.i < 1 || spec.i > spec.n) throw std::invalid_argument("H index out of range");
    BlockOp op(ctx);
    for (const auto& nu : components(spec.lie_type, spec.n, spec.d)) {
        MPoly h = h_multiplier(nu, spec.i, spec.r, spec.h_mode);
        SkewElem s = SkewElem::term(RatFunc(h), SignedPerm::identity(spec.d));
        op.add_block(nu.key(), nu.key(), s);
    }
    return op;
}

BlockOp build_generator(const GeneratorSpec& spec)
{
    switch (spec.kind) {
        case GenKind::E: return build_E(spec);
        case GenKind::F: return build_F(spec);
        case GenKind::H: return build_H(spec);
    }
    throw std::logic_error("unreachable");
}

BlockOp specialize_hbar_zero(const BlockOp& A)
{
    BlockOp r(A.ctx());
    for (const auto& [k, s] : A.blocks()) {
        auto z = s.at_hbar_zero();
        if (!z.is_zero()) r.add_block(k.first, k.second, z);
    }
    return r;
}

const BlockOp& GeneratorFactory::get(GenKind kind, int i, int r)
{
    auto key = std::make_tuple(static_cast<int>(kind), i, r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    GeneratorSpec spec{ctx_.lie_type, ctx_.n, ctx_.d, kind, i, r, h_mode_, sign_mode_};
    BlockOp op = build_generator(spec);
    if (hbar_zero_) op = specialize_hbar_zero(op);
    auto ins = cache_.emplace(key, std::make_unique<BlockOp>(std::move(op)));
    return *ins.first->second;
}

void GeneratorFactory::prebuild(int i_max, int r_max)
{
    for (int i = 1; i <= std::min(i_max, ctx_.n); ++i)
        for (int r = 0; r <= r_max; ++r)
            for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
                get(k, i, r);
}

} // namespace steinberg
