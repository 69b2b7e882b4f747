#include "steinberg/series.hpp"

#include <stdexcept>

namespace steinberg {

SeriesZ SeriesZ::truncated_product(const SeriesZ& o) const
{
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    SeriesZ r;
    r.coeffs.assign(coeffs.size(), RatFunc());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; i + j < coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    return r;
}

SeriesZ series_coeffs(const RatFunc& f, int m)
{
    if (m < 0) throw std::invalid_argument("negative truncation order");
    auto ncoef = f.num().coeffs_in(kZ);
    auto dcoef = f.den().coeffs_in(kZ);
    int dn = ncoef.empty() ? 0 : ncoef.rbegin()->first;
    int dd = dcoef.empty() ? 0 : dcoef.rbegin()->first;
    if (!f.num().is_zero() && dn > dd)
        throw std::domain_error("series_coeffs: pole at z = infinity");

    // In u = 1/z:  f = (sum_j N_j u^{dd-j}) / (sum_j D_j u^{dd-j}).
    // Reversed coefficient arrays, index k = power of u.
    std::vector<RatFunc> N(m + 1), D(m + 1);
    for (auto& [j, p] : ncoef) {
        int k = dd - j;
        if (k <= m) N[k] = RatFunc(p);
    }
    for (auto& [j, p] : dcoef) {
        int k = dd - j;
        if (k <= m) D[k] = RatFunc(p);
    }
    if (D[0].is_zero())
        throw std::domain_error("series_coeffs: leading z-coefficient of the denominator is zero");

    SeriesZ s;
    s.coeffs.assign(m + 1, RatFunc());
    for (int k = 0; k <= m; ++k) {
        RatFunc acc = N[k];
        for (int l = 0; l < k; ++l) acc -= s.coeffs[l] * D[k - l];
        s.coeffs[k] = acc / D[0];
    }
    return s;
}

} // namespace steinberg
