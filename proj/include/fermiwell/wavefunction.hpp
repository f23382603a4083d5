#pragma once

#include <cstddef>
#include <span>

#include "fermiwell/core.hpp"
#include "fermiwell/special.hpp"

namespace fermiwell {

/*!
 * Exponents of the hypergeometric substitution psi = y^nu (1-y)^mu phi(y).
 *
 * nu = k b is real and non-negative (k the decay constant outside the well),
 * mu = i k' b is purely imaginary (k' the interior wavenumber), and y0 is the
 * value of the logistic coordinate at the origin.
 */
struct ShapeParams
{
    double nu = 0;
    Complex mu;
    double y0 = 0;
};

struct WaveSample
{
    double x = 0;
    double psi = 0;
    double dpsi_dx = 0;
};

//! Complex bracket y^nu (1-y)^mu 2F1(nu+mu, nu+mu+1; 2nu+1; y) and its x derivative.
struct SolutionValue
{
    Complex value;
    Complex derivative;
};

//! Logistic coordinate y = 1/(1 + e^{(|x|-a)/b}).
double map_y(const WellParams& p, double x);

//! Throws DomainError unless -v0 < E < 0.
ShapeParams shape_params(const WellParams& p, double energy);

/*!
 * Decaying solution for exponents (nu, mu) at scaled coordinate
 * t = (|x| - a)/b, differentiated with respect to x on the side given by
 * sign (+1 for x >= 0, -1 for x < 0). Used with nu = 0 for the zero-energy
 * solution.
 */
SolutionValue hypergeometric_solution(double nu, Complex mu, double t, double b, double sign);

//! Complex-valued bracket of the exact bound-state solution, C = 1.
SolutionValue psi_bracket(const WellParams& p, double energy, double x);

//! Exact decaying solution at energy E (not an eigenvalue in general), C = 1.
//! At x = 0 the derivative is the one-sided limit from x > 0.
WaveSample psi(const WellParams& p, double energy, double x);

//! Zero-energy solution psi_*(x) with psi_*(infinity) = 1, in units where b = 1.
WaveSample psi_hbs(const DimensionlessWell& d, double x_over_b);

//! The same zero-energy solution written as 2F1(i beta, -i beta; 1; y/(y-1)),
//! summed as a raw series. Only valid where |y/(y-1)| < 1, i.e. |x| > a.
Complex psi_hbs_pfaff_form(const DimensionlessWell& d, double x_over_b);

//! L2 norm over the real line of psi(x, E) (C = 1), by trapezoid quadrature
//! out to where |psi| falls below 1e-10 of its peak.
double l2_norm(const WellParams& p, double energy);

//! Strict sign changes, ignoring samples below 1e-12 of the largest |psi|.
std::size_t count_nodes(std::span<const WaveSample> samples);

} // namespace fermiwell
