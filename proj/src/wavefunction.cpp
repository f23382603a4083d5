#include "fermiwell/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "fermiwell/errors.hpp"

namespace fermiwell {

double map_y(const WellParams& p, double x)
{
    return logistic_tail((std::abs(x) - p.a) / p.b);
}

ShapeParams shape_params(const WellParams& p, double energy)
{
    p.validate();
    if (!(energy > -p.v0 && energy < 0))
    {
        throw DomainError("energy " + std::to_string(energy)
                          + " MeV outside the bound window (-v0, 0)");
    }
    ShapeParams s;
    s.nu = p.b * std::sqrt(-p.kappa2 * energy);
    s.mu = Complex(0.0, p.b * std::sqrt(p.kappa2 * (energy + p.u0())));
    s.y0 = logistic_tail(-p.alpha());
    return s;
}

SolutionValue hypergeometric_solution(double nu, Complex mu, double t, double b, double sign)
{
    const double y = logistic_tail(t);
    const double one_minus_y = logistic_tail(-t);
    const double log_y = -softplus(t);
    const double log_one_minus_y = -softplus(-t);

    Hyp2F1Request req;
    req.a = nu + mu;
    req.b = nu + mu + 1.0;
    req.c = 2.0 * nu + 1.0;
    req.z = y;
    req.one_minus_z = one_minus_y;

    const Complex prefactor = std::exp(nu * log_y + mu * log_one_minus_y);
    const Complex f = hyp2f1(req);
    const Complex df = hyp2f1_dz(req);

    SolutionValue out;
    out.value = prefactor * f;
    // y(1-y) d/dy of the bracket; dy/dx = -sign y(1-y)/b.
    const Complex y_dy = (nu * one_minus_y - mu * y) * out.value
                         + prefactor * (y * one_minus_y) * df;
    out.derivative = -sign / b * y_dy;
    return out;
}

SolutionValue psi_bracket(const WellParams& p, double energy, double x)
{
    const ShapeParams s = shape_params(p, energy);
    return hypergeometric_solution(s.nu, s.mu, (std::abs(x) - p.a) / p.b, p.b,
                                   x < 0 ? -1.0 : 1.0);
}

WaveSample psi(const WellParams& p, double energy, double x)
{
    const SolutionValue v = psi_bracket(p, energy, x);
    return {x, v.value.real(), v.derivative.real()};
}

WaveSample psi_hbs(const DimensionlessWell& d, double x_over_b)
{
    d.validate();
    const SolutionValue v = hypergeometric_solution(
        0.0, Complex(0.0, d.beta), std::abs(x_over_b) - d.alpha, 1.0,
        x_over_b < 0 ? -1.0 : 1.0);
    return {x_over_b, v.value.real(), v.derivative.real()};
}

Complex psi_hbs_pfaff_form(const DimensionlessWell& d, double x_over_b)
{
    d.validate();
    const double t = std::abs(x_over_b) - d.alpha;
    Hyp2F1Request req;
    req.a = Complex(0.0, d.beta);
    req.b = Complex(0.0, -d.beta);
    req.c = 1.0;
    // y/(y-1) = -e^{-t}
    req.z = -std::exp(-t);
    return hyp2f1_series(req);
}

double l2_norm(const WellParams& p, double energy)
{
    const ShapeParams s = shape_params(p, energy);
    const double h = std::min(p.b / 20.0, 0.05 / (s.mu.imag() / p.b));
    const double x_far = p.a + 5.0 * p.b;

    double prev = psi(p, energy, 0.0).psi;
    double peak = std::abs(prev);
    double sum = 0;
    prev *= prev;
    for (int i = 1;; ++i)
    {
        const double x = h * i;
        const double value = psi(p, energy, x).psi;
        peak = std::max(peak, std::abs(value));
        const double sq = value * value;
        sum += 0.5 * h * (prev + sq);
        prev = sq;
        if (x > x_far && std::abs(value) < 1e-10 * peak)
            break;
        if (i > 10000000)
            throw NoConvergence("l2_norm: wavefunction tail did not decay");
    }
    return std::sqrt(2.0 * sum);
}

std::size_t count_nodes(std::span<const WaveSample> samples)
{
    double peak = 0;
    for (const auto& s : samples)
        peak = std::max(peak, std::abs(s.psi));
    const double floor = 1e-12 * peak;

    std::size_t nodes = 0;
    int last_sign = 0;
    for (const auto& s : samples)
    {
        if (std::abs(s.psi) <= floor)
            continue;
        int sign = s.psi > 0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign)
            ++nodes;
        last_sign = sign;
    }
    return nodes;
}

} // namespace fermiwell
