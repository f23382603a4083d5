#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "fermiwell/errors.hpp"
#include "fermiwell/reference_tables.hpp"
#include "fermiwell/semiclassical.hpp"
#include "fermiwell/spectrum.hpp"

using namespace fermiwell;
namespace ref = fermiwell::reference;

namespace {

const WellParams kShowcase{ref::kShowcase.v0, ref::kShowcase.a, ref::kShowcase.b};

} // namespace

TEST_CASE("closed-form G")
{
    const WellParams row1{48.6845, 1.5, 0.9};
    CHECK(g_closed_form(to_dimensionless(row1)) == doctest::Approx(3.0).epsilon(3e-4));
    CHECK(g_closed_form({2, 1.5723}) == doctest::Approx(3.4541).epsilon(3e-4));
    CHECK(g_closed_form({40, 1}) == doctest::Approx(4 / std::numbers::pi * std::asinh(std::exp(20.0))));
}

TEST_CASE("narrow edge tends to the square-well parameter")
{
    const double gp = square_well_reference(45, 3, 0.048).g_prime;
    double prev_gap = 1e9;
    for (double b : {0.1, 0.01, 0.001})
    {
        const double gap = std::abs(g_closed_form(to_dimensionless({45, 3, b})) - gp);
        CHECK(gap < prev_gap);
        CHECK(gap == doctest::Approx(2 * std::log(2.0) * b / 3 * gp).epsilon(1e-3));
        prev_gap = gap;
    }

    const double near = g_quadrature({5, 3, 0.1});
    const double square = square_well_reference(5, 3).g_prime;
    CHECK(square == doctest::Approx(2 / std::numbers::pi * 3 * std::sqrt(0.24)));
    CHECK(square == doctest::Approx(0.9355).epsilon(1e-4));
    // offset of the diffuse edge: (4/pi) beta log(1 + sqrt(1 + e^-alpha))
    const DimensionlessWell d = to_dimensionless({5, 3, 0.1});
    const double offset = 4 / std::numbers::pi * d.beta * std::log1p(std::sqrt(1 + std::exp(-d.alpha)));
    CHECK(near - square == doctest::Approx(offset).epsilon(1e-6));
    CHECK(std::abs(near - square) <= 0.05 * square);
}

TEST_CASE("quadrature agrees with the closed form")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<> v0(5, 80), a(1, 7), b(0.1, 1.5);
    for (int i = 0; i < 40; ++i)
    {
        const WellParams p{v0(rng), a(rng), b(rng)};
        CHECK(g_quadrature(p) == doctest::Approx(g_closed_form(to_dimensionless(p))).epsilon(1e-8));
    }
}

TEST_CASE("G scales as the square root of kappa2 v0")
{
    const WellParams p{20, 3, 0.6};
    WellParams q = p;
    q.kappa2 *= 2;
    CHECK(g_quadrature(q) == doctest::Approx(std::sqrt(2.0) * g_quadrature(p)).epsilon(1e-9));
}

TEST_CASE("square-well reference")
{
    for (int n = 1; n <= 5; ++n)
    {
        // W = n pi / 2
        const double w = n * std::numbers::pi / 2;
        const double v0 = w * w / (0.048 * 2.0 * 2.0);
        const SquareWellReference r = square_well_reference(v0, 2.0);
        CHECK(r.w == doctest::Approx(w));
        CHECK(r.g_prime == doctest::Approx(n).epsilon(1e-14));
    }
    CHECK(square_well_reference(1e-14, 2).g_prime < 1e-6);
}

TEST_CASE("turning point")
{
    for (double e : {-40.0, -10.0, -0.01})
    {
        const double x2 = turning_point(kShowcase, e);
        CHECK(potential(kShowcase, x2) == doctest::Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("action limits")
{
    CHECK(f_action(kShowcase, -kShowcase.v0 * (1 - 1e-9)) < 1e-3);
    CHECK(std::abs(f_action(kShowcase, -32.9723) - 0.5) <= 2e-3);
    const double g = g_quadrature(kShowcase);
    for (double frac : {1e-6, 1e-8, 1e-10})
    {
        // G - F(E) -> 2 b sqrt(kappa2 |E|) from the two exponential tails
        const double e = -frac * kShowcase.v0;
        const double gap = g - f_action(kShowcase, e);
        CHECK(gap == doctest::Approx(2 * kShowcase.b * std::sqrt(0.048 * frac * kShowcase.v0)).epsilon(0.02));
    }
    CHECK(f_action(kShowcase, -1e-10 * kShowcase.v0) == doctest::Approx(g).epsilon(1e-4));

    double prev = 0;
    for (double e = -45.0; e < -0.01; e += 0.5)
    {
        const double f = f_action(kShowcase, e);
        CHECK(f > prev);
        prev = f;
    }
    CHECK_THROWS_AS(f_action(kShowcase, 0.0), DomainError);
    CHECK_THROWS_AS(f_action(kShowcase, -50.0), DomainError);
}

TEST_CASE("closed-form action agrees with quadrature")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<> v0(5, 80), a(1, 7), b(0.1, 1.5), frac(0.001, 0.999);
    for (int i = 0; i < 60; ++i)
    {
        const WellParams p{v0(rng), a(rng), b(rng)};
        const double e = -p.v0 * frac(rng);
        CAPTURE(p.v0);
        CAPTURE(p.a);
        CAPTURE(p.b);
        CAPTURE(e);
        CHECK(f_action(p, e, ActionMethod::closed) ==
              doctest::Approx(f_action(p, e, ActionMethod::quadrature)).epsilon(1e-6));
    }
}

TEST_CASE("printed complex form agrees where its branches are principal")
{
    // (2 b sqrt2 / pi) [sqrt(w+1) atanh(u/sqrt(w+1)) - sqrt(w-1) atanh(u/sqrt(w-1))]
    const DimensionlessWell d = to_dimensionless(kShowcase);
    const double u0 = kShowcase.u0();
    for (double e : {-40.0, -30.0, -20.0, -10.0})
    {
        using C = std::complex<double>;
        const double w = 1 + 2 * e / u0;
        const C u = std::sqrt(C(w + std::tanh(d.alpha / 2)));
        const C sp = std::sqrt(C(w + 1));
        const C sm = std::sqrt(C(w - 1));
        const C printed = 2 * d.beta * std::sqrt(2.0) / std::numbers::pi * (sp * std::atanh(u / sp) - sm * std::atanh(u / sm));
        CHECK(std::abs(printed.imag()) < 1e-10);
        CHECK(printed.real() == doctest::Approx(f_action(kShowcase, e)).epsilon(1e-10));
    }
}

TEST_CASE("showcase semiclassical levels")
{
    const auto levels = wkb_spectrum(kShowcase);
    REQUIRE(levels.size() == 3);
    const SpectrumReport exact = solve_spectrum(kShowcase);
    for (int i = 0; i < 3; ++i)
    {
        CHECK(levels[i].index == i);
        CHECK(std::abs(levels[i].energy - ref::kShowcase.wkb[i]) <= ref::kWkbTol);
        CHECK(levels[i].f_value == doctest::Approx(i + 0.5).epsilon(1e-7));
        CHECK(std::abs(levels[i].energy - exact.states[i].energy) < 1.0);
    }
    const auto quad = wkb_spectrum(kShowcase, ActionMethod::quadrature);
    REQUIRE(quad.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(quad[i].energy == doctest::Approx(levels[i].energy).epsilon(1e-6));
}

TEST_CASE("level count follows G")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<> v0(5, 80), a(1, 7), b(0.1, 1.5);
    for (int i = 0; i < 20; ++i)
    {
        const WellParams p{v0(rng), a(rng), b(rng)};
        const double g = g_closed_form(to_dimensionless(p));
        const auto levels = wkb_spectrum(p);
        CHECK(static_cast<int>(levels.size()) == static_cast<int>(std::floor(g + 0.5)));
        for (std::size_t k = 1; k < levels.size(); ++k)
            CHECK(levels[k].energy > levels[k - 1].energy);
    }
}

TEST_CASE("G increases with diffuseness")
{
    double prev = 0;
    for (double b = 0.05; b < 2; b += 0.05)
    {
        const double g = g_closed_form(to_dimensionless({40, 3, b}));
        CHECK(g > prev);
        prev = g;
    }
}
