#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "steinberg/series.hpp"

using namespace steinberg;

namespace {

MPoly x1 = MPoly::x(0);
MPoly x2 = MPoly::x(1);
MPoly hb = MPoly::hbar();
MPoly zz = MPoly::z();

RatFunc random_rf(std::mt19937& rng)
{
    // linear-factor shapes as produced by the operator formulas
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rand_linear = [&]() {
        MPoly p = MPoly::x(0) * Rat(coef(rng)) + MPoly::x(1) * Rat(coef(rng)) +
                  MPoly::hbar() * Rat(coef(rng)) + MPoly(Rat(coef(rng)));
        return p;
    };
    auto nonzero_linear = [&]() {
        MPoly p;
        while (p.is_zero()) p = rand_linear();
        return p;
    };
    MPoly num = rand_linear() * rand_linear();
    MPoly den = nonzero_linear() * nonzero_linear();
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("normalization cancels common factors")
{
    // (x1 - x2)/(x1^2 - x2^2) == 1/(x1 + x2)
    RatFunc f(x1 - x2, x1 * x1 - x2 * x2);
    CHECK(f == RatFunc(MPoly(1), x1 + x2));
    CHECK(f.den() == x1 + x2);   // monic
    CHECK(f.num().is_one());
}

TEST_CASE("denominator is monic under grlex")
{
    RatFunc f(MPoly(1), x1 * Rat(2));   // 1/(2 x1)
    CHECK(f.den() == x1);
    CHECK(f.num() == MPoly(Rat(1, 2)));
}

TEST_CASE("arithmetic examples")
{
    // (1 + h/(2x1)) + (1 - h/(2x1)) = 2
    RatFunc a = RatFunc(1) + RatFunc(hb, x1 * Rat(2));
    RatFunc b = RatFunc(1) - RatFunc(hb, x1 * Rat(2));
    CHECK(a + b == RatFunc(2));
    // (1/(x1-x2)) * (x1-x2) = 1
    CHECK(RatFunc(MPoly(1), x1 - x2) * RatFunc(x1 - x2) == RatFunc(1));
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), std::domain_error);
}

TEST_CASE("field axioms and cross equality on random pairs")
{
    std::mt19937 rng(2024);
    for (int it = 0; it < 40; ++it) {
        RatFunc a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).equals_cross(b + a));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    std::mt19937 rng(5);
    std::array<int, kMaxX> img{-2, 1, 3, 4, 5, 6};   // x1 -> -x2, x2 -> x1
    for (int it = 0; it < 30; ++it) {
        RatFunc a = random_rf(rng), b = random_rf(rng);
        CHECK((a * b).substitute_signed(img) == a.substitute_signed(img) * b.substitute_signed(img));
        CHECK((a + b).substitute_signed(img) == a.substitute_signed(img) + b.substitute_signed(img));
    }
}

TEST_CASE("substitution examples")
{
    std::array<int, kMaxX> flip{-1, 2, 3, 4, 5, 6};
    CHECK(RatFunc(x1).substitute_signed(flip) == RatFunc(-x1));
    // swap x1 <-> x2 sends 1 + h/(x1-x2) to 1 + h/(x2-x1)
    std::array<int, kMaxX> swap12{2, 1, 3, 4, 5, 6};
    RatFunc f = RatFunc(1) + RatFunc(hb, x1 - x2);
    CHECK(f.substitute_signed(swap12) == RatFunc(1) + RatFunc(hb, x2 - x1));
    // applying a substitution and its inverse is the identity
    std::array<int, kMaxX> fwd{2, -1, 3, 4, 5, 6};    // x1->x2, x2->-x1
    std::array<int, kMaxX> inv{-2, 1, 3, 4, 5, 6};    // x1->-x2, x2->x1
    CHECK(f.substitute_signed(fwd).substitute_signed(inv) == f);
}

TEST_CASE("series expansion at infinity: geometric-series oracle")
{
    MPoly a = x1;
    // (z - a + h/2)/(z - a - h/2) = 1 + h/(z - a - h/2) -> [1, h]
    RatFunc f(zz - a + hb * Rat(1, 2), zz - a - hb * Rat(1, 2));
    SeriesZ s = series_coeffs(f, 1);
    CHECK(s.coeffs[0] == RatFunc(1));
    CHECK(s.coeffs[1] == RatFunc(hb));

    // (z - b - h)/(z - b + h) -> [1, -2h]
    MPoly b = x2;
    RatFunc g(zz - b - hb, zz - b + hb);
    SeriesZ t = series_coeffs(g, 1);
    CHECK(t.coeffs[0] == RatFunc(1));
    CHECK(t.coeffs[1] == RatFunc(-(hb * 2)));

    // deeper coefficients against the closed form h*(a + h/2)^{k-1}
    SeriesZ deep = series_coeffs(f, 3);
    MPoly c = a + hb * Rat(1, 2);
    CHECK(deep.coeffs[2] == RatFunc(hb * c));
    CHECK(deep.coeffs[3] == RatFunc(hb * c * c));
}

TEST_CASE("series of a constant")
{
    SeriesZ s = series_coeffs(RatFunc(1), 2);
    CHECK(s.coeffs[0] == RatFunc(1));
    CHECK(s.coeffs[1].is_zero());
    CHECK(s.coeffs[2].is_zero());
}

TEST_CASE("series rejects poles at infinity")
{
    CHECK_THROWS_AS(series_coeffs(RatFunc(zz), 1), std::domain_error);
}

TEST_CASE("series of a product equals truncated product of series")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto proper = [&]() {
        // (z + p)/(z^2 + q z + r) style proper functions with poly p,q,r in x1
        MPoly p = x1 * coef(rng) + MPoly(coef(rng));
        MPoly q = x1 * coef(rng) + MPoly(coef(rng));
        MPoly r = x1 * coef(rng) + MPoly(coef(rng));
        return RatFunc(zz + p, zz * zz + zz * q + r + MPoly(1));
    };
    for (int it = 0; it < 40; ++it) {
        RatFunc f = proper(), g = proper();
        SeriesZ sf = series_coeffs(f, 4);
        SeriesZ sg = series_coeffs(g, 4);
        SeriesZ sfg = series_coeffs(f * g, 4);
        SeriesZ prod = sf.truncated_product(sg);
        for (int k = 0; k <= 4; ++k) CHECK(sfg.coeffs[k] == prod.coeffs[k]);
    }
}

TEST_CASE("hbar-divided series of a ratio with f(h=0)=1 has polynomial coefficients")
{
    // the exact shape used by the H-series construction
    MPoly num = (zz - x1 + hb) * (zz - x2 - hb);
    MPoly den = (zz - x1) * (zz - x2 + hb);
    RatFunc ratio(num, den);
    RatFunc shifted = (ratio - RatFunc(1)) / RatFunc(hb);
    SeriesZ s = series_coeffs(shifted, 3);
    for (const auto& c : s.coeffs) CHECK(c.is_polynomial());
}
