#include "steinberg/signed_perm.hpp"

#include <sstream>
#include <stdexcept>

namespace steinberg {

SignedPerm::SignedPerm(int d)
{
    if (d < 0 || d > kMaxX) throw std::invalid_argument("rank out of range");
    dest_.resize(d);
    sign_.assign(d, 1);
    for (int t = 0; t < d; ++t) dest_[t] = t;
}

SignedPerm::SignedPerm(std::vector<int> dest, std::vector<int> sign)
    : dest_(std::move(dest)), sign_(std::move(sign))
{
    if (dest_.size() != sign_.size()) throw std::invalid_argument("signed permutation shape mismatch");
    std::vector<char> seen(dest_.size(), 0);
    for (std::size_t t = 0; t < dest_.size(); ++t) {
        if (dest_[t] < 0 || dest_[t] >= static_cast<int>(dest_.size()) || seen[dest_[t]])
            throw std::invalid_argument("not a permutation");
        if (sign_[t] != 1 && sign_[t] != -1) throw std::invalid_argument("sign must be +-1");
        seen[dest_[t]] = 1;
    }
}

SignedPerm SignedPerm::transposition(int d, int a, int b)
{
    SignedPerm w(d);
    std::swap(w.dest_[a], w.dest_[b]);
    return w;
}

SignedPerm SignedPerm::sign_flip(int d, int a)
{
    SignedPerm w(d);
    w.sign_[a] = -1;
    return w;
}

bool SignedPerm::is_identity() const
{
    for (int t = 0; t < d(); ++t)
        if (dest_[t] != t || sign_[t] != 1) return false;
    return true;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const
{
    if (d() != o.d()) throw std::invalid_argument("rank mismatch");
    SignedPerm r(d());
    for (int t = 0; t < d(); ++t) {
        r.dest_[t] = dest_[o.dest_[t]];
        r.sign_[t] = o.sign_[t] * sign_[o.dest_[t]];
    }
    return r;
}

SignedPerm SignedPerm::inverse() const
{
    SignedPerm r(d());
    for (int t = 0; t < d(); ++t) {
        r.dest_[dest_[t]] = t;
        r.sign_[dest_[t]] = sign_[t];
    }
    return r;
}

std::array<int, kMaxX> SignedPerm::images() const
{
    std::array<int, kMaxX> img{};
    for (int i = 0; i < kMaxX; ++i) img[i] = i + 1;   // untouched higher x's stay fixed
    for (int t = 0; t < d(); ++t) img[t] = sign_[t] * (dest_[t] + 1);
    return img;
}

MPoly SignedPerm::act(const MPoly& p) const { return p.substitute_signed(images()); }

RatFunc SignedPerm::act(const RatFunc& f) const { return f.substitute_signed(images()); }

std::vector<int> SignedPerm::one_line() const
{
    std::vector<int> v(d());
    for (int t = 0; t < d(); ++t) v[t] = sign_[t] * (dest_[t] + 1);
    return v;
}

int SignedPerm::length() const
{
    auto v = one_line();
    int n = d(), len = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0) len += 1;
        for (int j = i + 1; j < n; ++j) {
            if (v[i] > v[j]) len += 1;
            if (v[i] + v[j] < 0) len += 1;
        }
    }
    return len;
}

bool SignedPerm::operator<(const SignedPerm& o) const
{
    return one_line() < o.one_line();
}

std::string SignedPerm::str() const
{
    std::ostringstream os;
    os << "[";
    auto v = one_line();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

} // namespace steinberg
