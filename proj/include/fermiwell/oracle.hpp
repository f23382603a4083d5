#pragma once

#include <span>
#include <vector>

#include "fermiwell/core.hpp"
#include "fermiwell/spectrum.hpp"

namespace fermiwell {

/*!
 * Uniform half-line grid for direct integration of
 *
 *   psi'' + kappa2 (E - V(x)) psi = 0
 *
 * on [0, x_max]. The grid always contains x = 0 and x = x_max; step is
 * shrunk as needed to make x_max an integer number of steps.
 */
struct IntegratorConfig
{
    double x_max = 0;        //!< [fm]
    double step = 0;         //!< [fm]
    double match_point = 0;  //!< [fm]

    //! x_max = a + 30 b, step = min(b/40, 0.02/k'), match at x = a.
    static IntegratorConfig for_well(const WellParams& p);

    //! Throws DomainError unless x_max >= a + 15 b, step <= b/20,
    //! step <= 0.3/k' and 0 < match_point < x_max.
    void validate(const WellParams& p) const;

    int intervals() const;
    double grid_step() const;
    int match_index() const;
};

enum class Direction
{
    inward,
    outward
};

struct NumerovSolution
{
    std::vector<double> x;
    std::vector<double> psi;
};

/*!
 * Three-term Numerov recursion for psi'' = -q(x) psi on a uniform grid.
 *
 * `q` holds q(x_i) at each node in marching order and psi0, psi1 seed the
 * first two nodes. Whenever |psi| exceeds 1e100 the whole march so far is
 * rescaled by a positive factor, so signs are preserved.
 */
std::vector<double> numerov_march(std::span<const double> q, double step, double psi0, double psi1);

/*!
 * Integrate at energy E. Outward starts at x = 0 with (psi, psi') = (1, 0)
 * for even or (0, 1) for odd parity; inward starts at x_max from the
 * decaying exponential e^{-k x}. Returned arrays are ordered by increasing x.
 */
NumerovSolution numerov_integrate(const WellParams& p,
                                  double energy,
                                  const IntegratorConfig& cfg,
                                  Direction direction,
                                  Parity parity_start = Parity::even);

struct OracleLevel
{
    double energy = 0;
    Parity parity = Parity::even;
    int nodes = 0;
};

//! Shooting eigenvalues, ordered by energy, refined to 1e-9 MeV.
std::vector<OracleLevel> oracle_spectrum(const WellParams& p, const IntegratorConfig& cfg);

/*!
 * Number of bound states from the nodes of the zero-energy solution that is
 * constant at +infinity, integrated across the full line.
 */
int count_via_zero_energy_nodes(const WellParams& p, const IntegratorConfig& cfg);

} // namespace fermiwell
