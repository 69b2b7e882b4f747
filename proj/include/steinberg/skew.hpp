// Skew group algebra elements (sum of c_w * w with rational-function
// coefficients) and component-graded block operators.  Operator equality is
// decided on invariants by aggregating coefficients over right cosets of the
// source parabolic; distinct cosets restrict to distinct embeddings of the
// invariant subfield, so the aggregate test is exact.
#ifndef STEINBERG_SKEW_HPP
#define STEINBERG_SKEW_HPP

#include <map>
#include <optional>
#include <string>

#include "steinberg/roots.hpp"

namespace steinberg {

class SkewElem {
public:
    using Terms = std::map<SignedPerm, RatFunc>;

    SkewElem() = default;
    static SkewElem term(const RatFunc& c, const SignedPerm& w);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const SignedPerm& w, const RatFunc& c);

    SkewElem operator+(const SkewElem& o) const;
    SkewElem operator-() const;
    SkewElem operator-(const SkewElem& o) const { return *this + (-o); }
    // (c*w)(c'*v) = (c * act(w,c')) * (w*v)
    SkewElem operator*(const SkewElem& o) const;
    SkewElem scaled(const RatFunc& c) const;

    RatFunc apply(const RatFunc& f) const;   // sum c_w * act(w, f)
    SkewElem at_hbar_zero() const;

    std::string str() const;

private:
    Terms terms_;
};

struct Ctx {
    LieType lie_type{LieType::C};
    int n = 0;
    int d = 0;
    bool operator==(const Ctx&) const = default;
};

using CompKey = std::vector<int>;   // (nubar_1..nubar_n)

struct BlockWitness {
    CompKey source, target;
    SignedPerm coset_rep;
    RatFunc aggregate;
    std::string str() const;
};

class BlockOp {
public:
    explicit BlockOp(const Ctx& ctx) : ctx_(ctx) {}

    const Ctx& ctx() const { return ctx_; }
    using Blocks = std::map<std::pair<CompKey, CompKey>, SkewElem>;
    const Blocks& blocks() const { return blocks_; }
    bool has_blocks() const { return !blocks_.empty(); }

    void add_block(const CompKey& src, const CompKey& tgt, const SkewElem& s);

    BlockOp operator+(const BlockOp& o) const;
    BlockOp operator-() const;
    BlockOp operator-(const BlockOp& o) const { return *this + (-o); }
    BlockOp scaled(const RatFunc& c) const;

    friend BlockOp block_compose(const BlockOp& A, const BlockOp& B);   // A after B
    friend BlockOp block_bracket(const BlockOp& A, const BlockOp& B);   // AB - BA

    // Apply to an invariant polynomial supported on component src.
    // Returns the target component and the (cleared) polynomial.
    std::pair<CompKey, MPoly> apply(const CompKey& src, const MPoly& f) const;

    // Zero/equality on invariants via coset aggregation.
    std::optional<BlockWitness> nonzero_witness() const;
    bool is_zero_on_invariants() const { return !nonzero_witness().has_value(); }

    std::string str() const;

private:
    Ctx ctx_;
    Blocks blocks_;
};

bool equal_on_invariants(const BlockOp& A, const BlockOp& B,
                         std::optional<BlockWitness>* witness = nullptr);

// Caches parabolic groups per component key; all heavy consumers share one.
class ParabolicCache {
public:
    explicit ParabolicCache(const Ctx& ctx) : ctx_(ctx) {}
    const ParabolicGroup& at(const CompKey& key) const;
    const std::vector<SignedPerm>& full_group() const;
    const Ctx& ctx() const { return ctx_; }

private:
    Ctx ctx_;
    mutable std::map<CompKey, ParabolicGroup> cache_;
    mutable std::vector<SignedPerm> full_;
};

} // namespace steinberg

#endif
