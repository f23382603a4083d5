#include "fermiwell/core.hpp"

#include <string>

#include "fermiwell/errors.hpp"

namespace fermiwell {

namespace {

void require_positive(double value, const char* name)
{
    if (!std::isfinite(value) || !(value > 0))
    {
        throw DomainError(std::string(name) + " must be finite and positive, got "
                          + std::to_string(value));
    }
}

} // namespace

void WellParams::validate() const
{
    require_positive(v0, "v0");
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(kappa2, "kappa2");
}

void DimensionlessWell::validate() const
{
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
}

double potential(const WellParams& p, double x)
{
    return -p.u0() * logistic_tail((std::abs(x) - p.a) / p.b);
}

DimensionlessWell to_dimensionless(const WellParams& p)
{
    p.validate();
    return {p.alpha(), p.b * std::sqrt(p.kappa2 * p.u0())};
}

WellParams from_dimensionless(const DimensionlessWell& d, double b, double kappa2)
{
    d.validate();
    require_positive(b, "b");
    require_positive(kappa2, "kappa2");

    WellParams p;
    p.a = d.alpha * b;
    p.b = b;
    p.kappa2 = kappa2;
    double u0 = d.beta * d.beta / (kappa2 * b * b);
    p.v0 = u0 / (1.0 + std::exp(-d.alpha));
    return p;
}

} // namespace fermiwell
