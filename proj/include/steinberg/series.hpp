// Truncated expansions at z = infinity: f = sum c_k z^{-k} + O(z^{-m-1})
// with coefficients exact rational functions in the x's and hbar.
#ifndef STEINBERG_SERIES_HPP
#define STEINBERG_SERIES_HPP

#include <vector>

#include "steinberg/ratfunc.hpp"

namespace steinberg {

struct SeriesZ {
    std::vector<RatFunc> coeffs;   // c_0 .. c_m
    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    SeriesZ truncated_product(const SeriesZ& o) const;  // same order required
};

// Expansion of f (proper at z = infinity) to order m.  Throws on a pole at
// infinity, i.e. when deg_z(num) > deg_z(den).
SeriesZ series_coeffs(const RatFunc& f, int m);

} // namespace steinberg

#endif
