#include "fermiwell/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fermiwell/errors.hpp"

namespace fermiwell {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex w)
{
    return w.imag() == 0 && w.real() <= 0 && w.real() == std::floor(w.real());
}

bool is_finite(Complex w)
{
    return std::isfinite(w.real()) && std::isfinite(w.imag());
}

Complex lgamma_lanczos(Complex z)
{
    z -= 1.0;
    Complex x = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i)
    {
        x += kLanczosCoeff[i] / (z + static_cast<double>(i));
    }
    Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t
           + std::log(x);
}

void check_request(const Hyp2F1Request& req)
{
    if (!is_finite(req.a) || !is_finite(req.b) || !is_finite(req.c)
        || !std::isfinite(req.z))
    {
        throw DomainError("hyp2f1: non-finite parameter or argument");
    }
    if (is_nonpositive_integer(req.c))
    {
        throw DomainError("hyp2f1: c is zero or a negative integer");
    }
    if (!(req.tol > 0) || req.max_terms < 1)
    {
        throw DomainError("hyp2f1: tolerance and term cap must be positive");
    }
}

Complex series_sum(Complex a, Complex b, Complex c, double z, double tol, int max_terms)
{
    if (z == 0)
        return 1.0;

    Complex term = 1.0;
    Complex sum = 1.0;
    int small = 0;
    for (int n = 0; n < max_terms; ++n)
    {
        const double dn = n;
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0)
            return sum;

        if (std::abs(term) <= tol * std::abs(sum))
        {
            // Only stop once the terms are shrinking for good.
            double next_ratio = std::abs((a + dn + 1.0) * (b + dn + 1.0)
                                         / ((c + dn + 1.0) * (dn + 2.0)))
                                * std::abs(z);
            if (next_ratio < 1.0 && ++small >= 2)
                return sum;
        }
        else
        {
            small = 0;
        }
    }
    throw NoConvergence("hyp2f1: series did not converge within "
                        + std::to_string(max_terms) + " terms at z = "
                        + std::to_string(z));
}

} // namespace

Complex lgamma_complex(Complex z)
{
    if (!is_finite(z))
        throw DomainError("lgamma_complex: non-finite argument");
    if (is_nonpositive_integer(z))
        throw PoleError("lgamma_complex: pole at non-positive integer "
                        + std::to_string(z.real()));

    if (z.real() >= 0.5)
        return lgamma_lanczos(z);

    if (z.real() > -64)
    {
        // Upward recurrence keeps the branch continuous in the upper and
        // lower half-planes.
        int shift = static_cast<int>(std::ceil(0.5 - z.real()));
        Complex log_product = 0.0;
        for (int j = 0; j < shift; ++j)
        {
            log_product += std::log(z + static_cast<double>(j));
        }
        return lgamma_lanczos(z + static_cast<double>(shift)) - log_product;
    }

    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_complex(1.0 - z);
}

Complex hyp2f1_series(const Hyp2F1Request& req)
{
    check_request(req);
    if (!(std::abs(req.z) < 1.0))
        throw DomainError("hyp2f1_series: requires |z| < 1");
    return series_sum(req.a, req.b, req.c, req.z, req.tol, req.max_terms);
}

Complex hyp2f1_connection(const Hyp2F1Request& req)
{
    check_request(req);
    const double w = req.one_minus_z.value_or(1.0 - req.z);
    if (!(req.z > 0 && req.z <= 1 && w > 0))
        throw DomainError("hyp2f1_connection: requires 0 < z < 1");

    const Complex a = req.a;
    const Complex b = req.b;
    const Complex c = req.c;
    const Complex s = c - a - b;
    if (std::abs(s.imag()) < 1e-8 && std::abs(s.real() - std::round(s.real())) < 1e-8)
    {
        throw DegenerateParameter("hyp2f1: c - a - b is an integer; connection formula "
                                  "is degenerate");
    }

    const Complex lg_c = lgamma_complex(c);

    Complex first = 0.0;
    if (!is_nonpositive_integer(c - a) && !is_nonpositive_integer(c - b))
    {
        Complex prefactor = std::exp(lg_c + lgamma_complex(s) - lgamma_complex(c - a)
                                     - lgamma_complex(c - b));
        first = prefactor * series_sum(a, b, 1.0 - s, w, req.tol, req.max_terms);
    }

    Complex second = 0.0;
    if (!is_nonpositive_integer(a) && !is_nonpositive_integer(b))
    {
        Complex prefactor = std::exp(lg_c + lgamma_complex(-s) - lgamma_complex(a)
                                     - lgamma_complex(b) + s * std::log(w));
        second = prefactor
                 * series_sum(c - a, c - b, 1.0 + s, w, req.tol, req.max_terms);
    }
    return first + second;
}

Complex hyp2f1(const Hyp2F1Request& req)
{
    check_request(req);
    const double z = req.z;
    // z may round to 1 when an exact 1 - z > 0 is supplied.
    if (!(z <= 1.0 && req.one_minus_z.value_or(1.0 - z) > 0))
        throw DomainError("hyp2f1: requires z < 1");
    if (z == 0)
        return 1.0;

    // Terminating series: a polynomial, valid for any z < 1.
    if (is_nonpositive_integer(req.a) || is_nonpositive_integer(req.b))
        return series_sum(req.a, req.b, req.c, z, req.tol, req.max_terms);

    if (z < -0.5)
    {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
        Hyp2F1Request mapped = req;
        mapped.b = req.c - req.b;
        mapped.z = z / (z - 1.0);
        mapped.one_minus_z = 1.0 / (1.0 - z);
        return std::exp(-req.a * std::log1p(-z)) * hyp2f1(mapped);
    }
    if (z <= kSeriesSwitch)
        return series_sum(req.a, req.b, req.c, z, req.tol, req.max_terms);
    return hyp2f1_connection(req);
}

Complex hyp2f1_dz(const Hyp2F1Request& req)
{
    check_request(req);
    Hyp2F1Request shifted = req;
    shifted.a += 1.0;
    shifted.b += 1.0;
    shifted.c += 1.0;
    return req.a * req.b / req.c * hyp2f1(shifted);
}

} // namespace fermiwell
