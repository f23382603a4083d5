#include "fermiwell/semiclassical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fermiwell/bracket.hpp"
#include "fermiwell/errors.hpp"

namespace fermiwell {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr unsigned kMaxDepth = 20;
constexpr double kQuadTol = 1e-13;
constexpr double kQuadAccept = 1e-9;
constexpr double kQuadFloor = 1e-13;
constexpr double kRefineFloor = 1e-15;
// sqrt of the logistic tail drops below 1e-12 of its peak past u ~ 55.
constexpr double kTailCutInB = 60.0;

struct Piece
{
    double value = 0;
    double error = 0;
    double l1 = 0;
};

// One 61-point rule on [lo, hi]. The library's own adaptive driver reports
// sub-interval errors in [-1, 1] units, so refinement is done here instead.
template<class F>
Piece kronrod_piece(F& f, double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    auto mapped = [&](double s) { return half * f(mid + half * s); };
    Piece r;
    r.value = Kronrod::integrate(mapped, -1.0, 1.0, 0, 0.0, &r.error, &r.l1);
    return r;
}

template<class F>
Piece refine(F& f, double lo, double hi, const Piece& whole, double abs_tol, unsigned depth)
{
    if (whole.error <= std::max(abs_tol, kQuadTol * whole.l1) || depth == 0)
        return whole;
    const double mid = 0.5 * (lo + hi);
    const Piece left = refine(f, lo, mid, kronrod_piece(f, lo, mid), 0.5 * abs_tol, depth - 1);
    const Piece right = refine(f, mid, hi, kronrod_piece(f, mid, hi), 0.5 * abs_tol, depth - 1);
    return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

template<class F>
double integrate(F&& f, double lo, double hi, const char* what)
{
    const Piece first = kronrod_piece(f, lo, hi);
    const Piece r = refine(f, lo, hi, first, std::max(kQuadTol * first.l1, kRefineFloor), kMaxDepth);
    if (!std::isfinite(r.value) || r.error > std::max(kQuadAccept * r.l1, kQuadFloor))
    {
        throw QuadratureFailure(std::string(what) + ": adaptive quadrature did not reach "
                                "tolerance (error estimate " + std::to_string(r.error) + ")");
    }
    return r.value;
}

// u0 + E without cancelling v0 against -E
double depth_above_bottom(const WellParams& p, double energy)
{
    return (p.v0 + energy) + p.v0 * std::exp(-p.alpha());
}

void check_window(const WellParams& p, double energy)
{
    p.validate();
    if (!(energy > -p.v0 && energy < 0))
    {
        throw DomainError("energy " + std::to_string(energy)
                          + " MeV outside the bound window (-v0, 0)");
    }
}

} // namespace

double g_closed_form(const DimensionlessWell& d)
{
    d.validate();
    // asinh(e^z) = z + log(1 + sqrt(1 + e^{-2z}))
    const double z = 0.5 * d.alpha;
    const double ash = z > 0 ? z + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * z))) : std::asinh(std::exp(z));
    return 4.0 / std::numbers::pi * d.beta * ash;
}

double g_quadrature(const WellParams& p)
{
    p.validate();
    const double scale = std::sqrt(p.kappa2 * p.u0());
    auto integrand = [&](double x) {
        return scale * std::sqrt(logistic_tail((x - p.a) / p.b));
    };
    const double inner = integrate(integrand, 0.0, p.a, "g_quadrature");
    const double outer = integrate(integrand, p.a, p.a + kTailCutInB * p.b, "g_quadrature");
    return 2.0 / std::numbers::pi * (inner + outer);
}

SquareWellReference square_well_reference(double v0, double a, double kappa2)
{
    if (!(v0 >= 0) || !(a > 0) || !(kappa2 > 0))
        throw DomainError("square_well_reference: requires v0 >= 0, a > 0, kappa2 > 0");
    SquareWellReference r;
    r.w = a * std::sqrt(kappa2 * v0);
    r.g_prime = 2.0 / std::numbers::pi * r.w;
    return r;
}

double turning_point(const WellParams& p, double energy)
{
    check_window(p, energy);
    return p.a + p.b * std::log(p.u0() / (-energy) - 1.0);
}

double f_action(const WellParams& p, double energy, ActionMethod method)
{
    check_window(p, energy);

    if (method == ActionMethod::closed)
    {
        const DimensionlessWell d = to_dimensionless(p);
        const double u0 = p.u0();
        const double onep = 2.0 * depth_above_bottom(p, energy) / u0;  // 1 + omega
        const double onem = -2.0 * energy / u0;                        // 1 - omega
        const double cut = 2.0 / (std::exp(d.alpha) + 1.0);           // 1 - tanh(alpha/2)
        const double delta = cut / onep;
        if (!(delta < 1.0))
            throw DomainError("f_action: no classical region at this energy");
        const double w = std::sqrt(onep - cut);
        const double r = std::sqrt(1.0 - delta);
        const double up = std::sqrt(onep);
        // atanh(r) with 1 - r^2 = delta
        double bracket = up * (std::log1p(r) - 0.5 * std::log(delta));
        // sqrt(omega-1) atanh(w/sqrt(omega-1)) for omega < 1, in real form
        const double down = std::sqrt(onem);
        bracket -= down * std::atan(w / down);
        return 2.0 * std::numbers::sqrt2 * d.beta / std::numbers::pi * bracket;
    }

    // x = x2 - t^2 removes the square-root zero at the turning point.
    const double x2 = turning_point(p, energy);
    auto integrand = [&](double t) {
        const double x = x2 - t * t;
        const double kinetic = depth_above_bottom(p, energy) - p.u0() * logistic_tail((p.a - std::abs(x)) / p.b);
        return kinetic > 0 ? 2.0 * t * std::sqrt(p.kappa2 * kinetic) : 0.0;
    };
    const double half = integrate(integrand, 0.0, std::sqrt(x2), "f_action");
    return 2.0 / std::numbers::pi * half;
}

std::vector<WkbLevel> wkb_spectrum(const WellParams& p, ActionMethod method, double tol_e)
{
    p.validate();
    const double lo = -p.v0 * (1.0 - 1e-9);
    const double hi = -p.v0 * 1e-9;
    const double f_lo = f_action(p, lo, method);
    const double f_hi = f_action(p, hi, method);

    std::vector<WkbLevel> levels;
    for (int n = 0; n + 0.5 < f_hi; ++n)
    {
        const double target = n + 0.5;
        auto residual = [&](double e) { return f_action(p, e, method) - target; };
        const double e = bisect(residual, {lo, hi, f_lo - target, f_hi - target}, tol_e);
        levels.push_back({n, e, f_action(p, e, method)});
    }
    return levels;
}

} // namespace fermiwell
