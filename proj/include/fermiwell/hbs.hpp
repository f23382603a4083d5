#pragma once

#include <vector>

#include "fermiwell/core.hpp"
#include "fermiwell/spectrum.hpp"

namespace fermiwell {

//! Critical well strength beta_n at fixed alpha for which an n-node
//! half-bound state sits exactly at E = 0.
struct HbsSolution
{
    double alpha = 0;
    int n = 0;
    double beta_n = 0;
    double g_value = 0;
};

struct CriticalityReport
{
    int count_below = 0;  //!< bound states at beta_n (1 - delta)
    int count_at = 0;     //!< bound states at beta_n; the E = 0 state itself is not counted
    bool at_near_threshold = false;
    int count_above = 0;  //!< bound states at beta_n (1 + delta)
    bool ok = false;      //!< count_below == n and count_above == n + 1
};

/*!
 * Zero-energy matching function: psi_*(0) for odd node counts, the one-sided
 * derivative psi_*'(0+) for even node counts. Lengths in units of b.
 */
double hbs_matching(double alpha, double beta, Parity node_parity);

/*!
 * Critical values beta_1 < ... < beta_{n_max} from a single ascending sweep
 * in beta (step 0.01, ceiling 3 n_max) over both matching functions, refined
 * by bisection. Each solution's zero-energy wavefunction is checked to have
 * exactly n nodes.
 */
std::vector<HbsSolution> solve_beta_scan(double alpha, int n_max, double tol_beta = 1e-6);

HbsSolution solve_beta_n(double alpha, int n, double tol_beta = 1e-6);

//! Node count of psi_*(x, beta) on the reflected full line |x/b| <= alpha + 30.
int hbs_node_count(double alpha, double beta, Parity node_parity);

CriticalityReport verify_criticality(double alpha,
                                     double beta_n,
                                     int n,
                                     double delta = 1e-2,
                                     double kappa2 = kNeutronKappa2);

} // namespace fermiwell
