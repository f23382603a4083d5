#pragma once

#include <vector>

#include "fermiwell/core.hpp"

namespace fermiwell {

//! One semiclassical level: F(energy) = index + 1/2.
struct WkbLevel
{
    int index = 0;
    double energy = 0;  //!< [MeV]
    double f_value = 0;
};

enum class ActionMethod
{
    closed,
    quadrature
};

//! Square-well reference: W = a sqrt(kappa2 v0), G' = 2W/pi. W = n pi/2 is
//! the n-node half-bound threshold of the square well.
struct SquareWellReference
{
    double g_prime = 0;
    double w = 0;
};

//! Effective parameter G = (4/pi) beta asinh(e^{alpha/2}).
double g_closed_form(const DimensionlessWell& d);

//! G = (1/pi) * integral over the real line of sqrt(-kappa2 V(x)).
double g_quadrature(const WellParams& p);

SquareWellReference square_well_reference(double v0, double a, double kappa2 = kNeutronKappa2);

//! Outer classical turning point x2 > 0 where V(x2) = E.
double turning_point(const WellParams& p, double energy);

/*!
 * Semiclassical action F(E) = (1/pi) * integral of sqrt(kappa2 (E - V))
 * between the turning points, for -v0 < E < 0. F increases from 0 at the
 * well bottom to G at E = 0.
 */
double f_action(const WellParams& p, double energy, ActionMethod method = ActionMethod::closed);

//! All levels with F(E_n) = n + 1/2 below threshold, ordered by n.
std::vector<WkbLevel> wkb_spectrum(const WellParams& p,
                                   ActionMethod method = ActionMethod::closed,
                                   double tol_e = 1e-8);

} // namespace fermiwell
