#pragma once

#include <complex>
#include <optional>

namespace fermiwell {

using Complex = std::complex<double>;

//! Above this argument hyp2f1 switches from the Maclaurin series to the
//! expansion in powers of (1 - z).
inline constexpr double kSeriesSwitch = 0.7;

/*!
 * Gauss hypergeometric 2F1(a, b; c; z) request: complex parameters, real
 * argument z < 1.
 *
 * When z is close to 1 the caller may supply 1 - z computed independently
 * (e.g. from a logistic tail), which the connection formula then uses
 * instead of the cancelling difference.
 */
struct Hyp2F1Request
{
    Complex a;
    Complex b;
    Complex c;
    double z = 0;
    double tol = 1e-13;
    int max_terms = 100000;
    std::optional<double> one_minus_z;
};

//! Log-gamma on the principal branch (continuous off the negative real axis).
Complex lgamma_complex(Complex z);

//! 2F1(a, b; c; z) for real z < 1.
Complex hyp2f1(const Hyp2F1Request& req);

//! d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z).
Complex hyp2f1_dz(const Hyp2F1Request& req);

//! Maclaurin series only; requires |z| < 1.
Complex hyp2f1_series(const Hyp2F1Request& req);

//! Gauss connection formula in powers of (1 - z) only; requires 0 < z < 1
//! and c - a - b not an integer.
Complex hyp2f1_connection(const Hyp2F1Request& req);

} // namespace fermiwell
