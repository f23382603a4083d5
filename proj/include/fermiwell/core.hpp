#pragma once

#include <cmath>

namespace fermiwell {

//! 2m/hbar^2 for a neutron, in MeV^-1 fm^-2 (mc^2 ~ 940 MeV, hbar c ~ 197 MeV fm).
inline constexpr double kNeutronKappa2 = 0.048;

/*!
 * Physical parameters of the symmetric Fermi well
 *
 *   V(x) = -v0 (1 + e^{-a/b}) / (1 + e^{(|x| - a)/b})
 *
 * Depth in MeV, lengths in fm. The numerator factor is chosen so that
 * V(0) = -v0 exactly.
 */
struct WellParams
{
    double v0 = 0;  //!< depth at the origin [MeV]
    double a = 0;   //!< half-width [fm]
    double b = 0;   //!< diffuseness [fm]
    double kappa2 = kNeutronKappa2;  //!< 2m/hbar^2 [MeV^-1 fm^-2]

    //! Asymptotic depth of the logistic profile, v0 (1 + e^{-a/b}).
    double u0() const { return v0 * (1.0 + std::exp(-a / b)); }
    double alpha() const { return a / b; }

    //! Throws DomainError unless every field is finite and positive.
    void validate() const;
};

//! Dimensionless well: alpha = a/b, beta = b sqrt(kappa2 u0).
struct DimensionlessWell
{
    double alpha = 0;
    double beta = 0;

    void validate() const;
};

double potential(const WellParams& p, double x);

DimensionlessWell to_dimensionless(const WellParams& p);

//! Inverse of to_dimensionless at a chosen diffuseness and unit constant.
WellParams from_dimensionless(const DimensionlessWell& d,
                              double b,
                              double kappa2 = kNeutronKappa2);

//! ln(1 + e^t) without overflow.
inline double softplus(double t)
{
    return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

//! 1 / (1 + e^t) without overflow.
inline double logistic_tail(double t)
{
    if (t > 0)
    {
        double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

} // namespace fermiwell
