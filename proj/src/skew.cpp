#include "steinberg/skew.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace steinberg {

SkewElem SkewElem::term(const RatFunc& c, const SignedPerm& w)
{
    SkewElem s;
    s.add_term(w, c);
    return s;
}

void SkewElem::add_term(const SignedPerm& w, const RatFunc& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewElem SkewElem::operator+(const SkewElem& o) const
{
    SkewElem r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

SkewElem SkewElem::operator-() const
{
    SkewElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

SkewElem SkewElem::operator*(const SkewElem& o) const
{
    SkewElem r;
    for (const auto& [w, c] : terms_)
        for (const auto& [v, e] : o.terms_)
            r.add_term(w * v, c * w.act(e));
    return r;
}

SkewElem SkewElem::scaled(const RatFunc& c) const
{
    SkewElem r;
    if (c.is_zero()) return r;
    for (const auto& [w, e] : terms_) r.add_term(w, c * e);
    return r;
}

RatFunc SkewElem::apply(const RatFunc& f) const
{
    RatFunc acc;
    for (const auto& [w, c] : terms_) acc += c * w.act(f);
    return acc;
}

SkewElem SkewElem::at_hbar_zero() const
{
    SkewElem r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.at_hbar_zero());
    return r;
}

std::string SkewElem::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << w.str();
    }
    return os.str();
}

std::string BlockWitness::str() const
{
    std::ostringstream os;
    os << "source nubar=(";
    for (std::size_t i = 0; i < source.size(); ++i) os << (i ? "," : "") << source[i];
    os << ") coset " << coset_rep.str() << " aggregate " << aggregate.str();
    return os.str();
}

void BlockOp::add_block(const CompKey& src, const CompKey& tgt, const SkewElem& s)
{
    if (s.is_zero()) return;
    auto key = std::make_pair(src, tgt);
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
        blocks_.emplace(key, s);
    } else {
        it->second = it->second + s;
        if (it->second.is_zero()) blocks_.erase(it);
    }
}

BlockOp BlockOp::operator+(const BlockOp& o) const
{
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("block operator context mismatch");
    BlockOp r = *this;
    for (const auto& [k, s] : o.blocks_) r.add_block(k.first, k.second, s);
    return r;
}

BlockOp BlockOp::operator-() const
{
    BlockOp r(ctx_);
    for (const auto& [k, s] : blocks_) r.blocks_.emplace(k, -s);
    return r;
}

BlockOp BlockOp::scaled(const RatFunc& c) const
{
    BlockOp r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, s] : blocks_) {
        auto t = s.scaled(c);
        if (!t.is_zero()) r.blocks_.emplace(k, t);
    }
    return r;
}

BlockOp block_compose(const BlockOp& A, const BlockOp& B)
{
    if (!(A.ctx_ == B.ctx_)) throw std::invalid_argument("block operator context mismatch");
    BlockOp r(A.ctx_);
    for (const auto& [kb, sb] : B.blocks_) {
        for (const auto& [ka, sa] : A.blocks_) {
            if (ka.first != kb.second) continue;    // A's source must match B's target
            r.add_block(kb.first, ka.second, sa * sb);
        }
    }
    return r;
}

BlockOp block_bracket(const BlockOp& A, const BlockOp& B)
{
    return block_compose(A, B) - block_compose(B, A);
}

std::pair<CompKey, MPoly> BlockOp::apply(const CompKey& src, const MPoly& f) const
{
    DimVec nu = dimvec_from_key(ctx_.lie_type, ctx_.n, ctx_.d, src);
    ParabolicGroup P = parabolic_group(nu);
    if (!is_invariant(P, f))
        throw std::invalid_argument("apply: input is not invariant under the source parabolic");

    const SkewElem* blk = nullptr;
    CompKey tgt;
    for (const auto& [k, s] : blocks_) {
        if (k.first != src) continue;
        if (blk) throw std::logic_error("apply: several blocks share the source component");
        blk = &s;
        tgt = k.second;
    }
    if (!blk) return {src, MPoly()};    // zero; keep the source as a placeholder target

    RatFunc val = blk->apply(RatFunc(f));
    if (!val.is_polynomial())
        throw std::domain_error("apply: result fails to clear to a polynomial");
    return {tgt, val.num()};
}

namespace {

SignedPerm canonical_coset_rep(const SignedPerm& w, const ParabolicGroup& P)
{
    const SignedPerm* best = nullptr;
    SignedPerm cur;
    LengthLexLess less;
    for (const auto& u : P.elements) {
        SignedPerm cand = w * u;
        if (!best || less(cand, cur)) {
            cur = cand;
            best = &cur;
        }
    }
    return cur;
}

} // namespace

std::optional<BlockWitness> BlockOp::nonzero_witness() const
{
    for (const auto& [k, s] : blocks_) {
        DimVec nu = dimvec_from_key(ctx_.lie_type, ctx_.n, ctx_.d, k.first);
        ParabolicGroup P = parabolic_group(nu);
        std::map<SignedPerm, RatFunc> buckets;
        for (const auto& [w, c] : s.terms()) {
            SignedPerm rep = canonical_coset_rep(w, P);
            auto it = buckets.find(rep);
            if (it == buckets.end())
                buckets.emplace(rep, c);
            else
                it->second += c;
        }
        for (const auto& [rep, agg] : buckets) {
            if (!agg.is_zero())
                return BlockWitness{k.first, k.second, rep, agg};
        }
    }
    return std::nullopt;
}

bool equal_on_invariants(const BlockOp& A, const BlockOp& B, std::optional<BlockWitness>* witness)
{
    auto w = (A - B).nonzero_witness();
    if (witness) *witness = w;
    return !w.has_value();
}

std::string BlockOp::str() const
{
    std::ostringstream os;
    for (const auto& [k, s] : blocks_) {
        os << "(";
        for (std::size_t i = 0; i < k.first.size(); ++i) os << (i ? "," : "") << k.first[i];
        os << ")->(";
        for (std::size_t i = 0; i < k.second.size(); ++i) os << (i ? "," : "") << k.second[i];
        os << "): " << s.str() << "\n";
    }
    return os.str();
}

const ParabolicGroup& ParabolicCache::at(const CompKey& key) const
{
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    DimVec nu = dimvec_from_key(ctx_.lie_type, ctx_.n, ctx_.d, key);
    return cache_.emplace(key, parabolic_group(nu)).first->second;
}

const std::vector<SignedPerm>& ParabolicCache::full_group() const
{
    if (full_.empty()) full_ = full_weyl_group(ctx_.d);
    return full_;
}

} // namespace steinberg
