#include "steinberg/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace steinberg {

MPoly::MPoly(const Rat& c)
{
    if (c != 0) terms_.emplace(Mono{}, c);
}

MPoly MPoly::var(int index, int power)
{
    if (index < 0 || index >= kMaxVars) throw std::invalid_argument("variable index out of range");
    MPoly p;
    if (power == 0) return MPoly(1);
    Mono m;
    m.e[index] = static_cast<std::uint8_t>(power);
    p.terms_.emplace(m, Rat(1));
    return p;
}

bool MPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second == 1;
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rat MPoly::constant_value() const
{
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

int MPoly::degree(int var) const
{
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(var));
    return d;
}

const Mono& MPoly::leading_mono() const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& MPoly::leading_coeff() const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Mono& m, const Rat& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kMaxVars; ++i) {
                int s = ma.e[i] + mb.e[i];
                if (s > 200) throw std::overflow_error("monomial degree overflow");
                m.e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const
{
    MPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MPoly MPoly::pow(unsigned k) const
{
    MPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

std::optional<MPoly> MPoly::divided_by(const MPoly& o) const
{
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return MPoly();
    if (o.is_constant()) {
        Rat inv = Rat(1) / o.constant_value();
        return *this * inv;
    }
    MPoly q, r = *this;
    const Mono& lmo = o.leading_mono();
    const Rat& lco = o.leading_coeff();
    while (!r.is_zero()) {
        const Mono& lmr = r.leading_mono();
        Mono m;
        for (int i = 0; i < kMaxVars; ++i) {
            if (lmr.e[i] < lmo.e[i]) return std::nullopt;
            m.e[i] = static_cast<std::uint8_t>(lmr.e[i] - lmo.e[i]);
        }
        Rat c = r.leading_coeff() / lco;
        MPoly t;
        t.terms_.emplace(m, c);
        q += t;
        r -= t * o;
    }
    return q;
}

MPoly MPoly::substitute_signed(const std::array<int, kMaxX>& images) const
{
    MPoly r;
    for (const auto& [m, c] : terms_) {
        Mono nm;
        nm.e[kHbar] = m.e[kHbar];
        nm.e[kZ] = m.e[kZ];
        Rat coeff = c;
        for (int i = 0; i < kMaxX; ++i) {
            int ei = m.e[i];
            if (ei == 0) continue;
            int img = images[i];
            if (img == 0) throw std::invalid_argument("substitute_signed: missing image");
            int j = (img > 0 ? img : -img) - 1;
            if (j < 0 || j >= kMaxX) throw std::invalid_argument("substitute_signed: image out of range");
            int s = nm.e[j] + ei;
            if (s > 200) throw std::overflow_error("monomial degree overflow");
            nm.e[j] = static_cast<std::uint8_t>(s);
            if (img < 0 && (ei & 1)) coeff = -coeff;
        }
        r.add_term(nm, coeff);
    }
    return r;
}

MPoly MPoly::at_hbar_zero() const
{
    MPoly r;
    for (const auto& [m, c] : terms_)
        if (m.e[kHbar] == 0) r.terms_.emplace(m, c);
    return r;
}

std::map<int, MPoly> MPoly::coeffs_in(int var) const
{
    std::map<int, MPoly> out;
    for (const auto& [m, c] : terms_) {
        Mono nm = m;
        int d = nm.e[var];
        nm.e[var] = 0;
        out[d].add_term(nm, c);
    }
    return out;
}

MPoly MPoly::assemble_in(int var, const std::map<int, MPoly>& coeffs)
{
    MPoly r;
    for (const auto& [d, p] : coeffs) r += p * MPoly::var(var, d);
    return r;
}

Rat MPoly::content() const
{
    Rat g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

MPoly MPoly::primitive_part() const
{
    if (is_zero()) return MPoly();
    Rat c = content();
    if (leading_coeff() < 0) c = -c;
    return *this * (Rat(1) / c);
}

namespace {

// Pseudo-remainder of a by b in the variable `var`:
// lc(b)^(da-db+1) * a = q*b + r with deg_var(r) < deg_var(b).
MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var)
{
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    int da = ac.empty() ? 0 : ac.rbegin()->first;
    int db = bc.empty() ? 0 : bc.rbegin()->first;
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem by zero");
    MPoly lcb = bc.rbegin()->second;
    MPoly r = a;
    int steps = da - db + 1;
    for (int i = 0; i < steps; ++i) {
        auto rc = r.coeffs_in(var);
        int dr = rc.empty() ? 0 : rc.rbegin()->first;
        if (r.is_zero() || dr < db) {
            // premultiply the remaining times so the loop is exact
            for (int j = i; j < steps; ++j) r = r * lcb;
            break;
        }
        MPoly lcr = rc.rbegin()->second;
        r = r * lcb - lcr * b * MPoly::var(var, dr - db);
    }
    return r;
}

MPoly gcd_impl(MPoly a, MPoly b);

// gcd of the polynomial coefficients, with early exit once it reaches 1
template <class MapT>
MPoly coeff_content(const MapT& coeffs)
{
    MPoly c;
    for (const auto& [d, p] : coeffs) {
        c = gcd_impl(c, p);
        if (c.is_constant() && !c.is_zero()) return MPoly(1);
    }
    return c;
}

MPoly gcd_impl(MPoly a, MPoly b)
{
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a == b || a == -b) return a.primitive_part();

    int var = -1;
    for (int v = kMaxVars - 1; v >= 0; --v) {
        if (a.uses(v) || b.uses(v)) { var = v; break; }
    }
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    if (!a.uses(var)) return gcd_impl(a, coeff_content(bc));
    if (!b.uses(var)) return gcd_impl(coeff_content(ac), b);

    MPoly cont_a = coeff_content(ac);
    MPoly cont_b = coeff_content(bc);
    MPoly cont = gcd_impl(cont_a, cont_b);

    MPoly pa = *a.divided_by(cont_a);
    MPoly pb = *b.divided_by(cont_b);

    // primitive PRS
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (!r.is_zero()) r = *r.divided_by(coeff_content(r.coeffs_in(var)));
        pb = r;
    }
    if (pa.degree(var) == 0) return cont.primitive_part();
    return (cont * pa).primitive_part();
}

// Common monomial factor (minimum exponent per variable over all terms).
Mono monomial_content(const MPoly& p)
{
    Mono m;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (first) {
            m = mono;
            first = false;
        } else {
            for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
        }
    }
    return m;
}

MPoly mono_poly(const Mono& m)
{
    MPoly p(1);
    for (int i = 0; i < kMaxVars; ++i)
        if (m.e[i]) p *= MPoly::var(i, m.e[i]);
    return p;
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    MPoly pa = a.primitive_part();    // integral coefficients, content 1
    MPoly pb = b.primitive_part();

    Mono ma = monomial_content(pa), mb = monomial_content(pb);
    Mono shared;
    for (int i = 0; i < kMaxVars; ++i) shared.e[i] = std::min(ma.e[i], mb.e[i]);
    pa = *pa.divided_by(mono_poly(ma));
    pb = *pb.divided_by(mono_poly(mb));

    MPoly g;
    if (pa == pb || pa == -pb) {
        g = pa;
    } else if (pa.is_constant() || pb.is_constant()) {
        g = MPoly(1);
    } else if (pb.total_degree() <= pa.total_degree() && pa.divided_by(pb).has_value()) {
        g = pb;
    } else if (pa.total_degree() <= pb.total_degree() && pb.divided_by(pa).has_value()) {
        g = pa;
    } else {
        g = gcd_impl(pa, pb);
    }
    return (g * mono_poly(shared)).primitive_part();
}

std::string var_name(int index)
{
    if (index < kMaxX) return "x" + std::to_string(index + 1);
    if (index == kHbar) return "h";
    return "z";
}

std::string MPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool has_var = m.total() > 0;
        if (!unit || !has_var) os << a;
        bool star = !unit && has_var;
        for (int i = 0; i < kMaxVars; ++i) {
            if (m.e[i] == 0) continue;
            if (star) os << "*";
            os << var_name(i);
            if (m.e[i] > 1) os << "^" << int(m.e[i]);
            star = true;
        }
    }
    return os.str();
}

} // namespace steinberg
