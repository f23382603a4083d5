#pragma once

#include <vector>

#include "fermiwell/core.hpp"
#include "fermiwell/wavefunction.hpp"

namespace fermiwell {

enum class Parity
{
    even,
    odd
};

inline const char* to_string(Parity p)
{
    return p == Parity::even ? "even" : "odd";
}

struct EigenState
{
    int index = 0;
    double energy = 0;  //!< [MeV]
    Parity parity = Parity::even;
    int nodes = 0;
};

struct SpectrumReport
{
    WellParams params;
    std::vector<EigenState> states;
    double g_value = 0;
    int count = 0;
    //! A further state lies in the excluded sliver (-1e-6 v0, 0): the well
    //! is at (or numerically indistinguishable from) a half-bound threshold.
    bool near_threshold = false;
    //! count is outside {floor(G), floor(G)+1}.
    bool count_rule_violated = false;
};

/*!
 * Parity matching function at energy E: psi'(0+) for even states, psi(0)
 * for odd states. Its zeros in (-v0, 0) are the exact eigenvalues.
 */
double matching_function(const WellParams& p, double energy, Parity parity);

/*!
 * Exact bound states by grid bracketing of both matching functions followed
 * by bisection. Labels are checked twice: parity must alternate starting
 * from even, and the n-th state must have n nodes.
 */
SpectrumReport solve_spectrum(const WellParams& p, int grid_points = 2000, double tol_e = 1e-8);

int count_states(const WellParams& p);

//! Full-line samples of the state at energy E built by parity reflection,
//! `points` samples uniformly spread over [-half_width, half_width].
std::vector<WaveSample> sample_state(const WellParams& p,
                                     double energy,
                                     Parity parity,
                                     double half_width,
                                     int points);

} // namespace fermiwell
