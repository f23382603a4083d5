#include "fermiwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermiwell/bracket.hpp"
#include "fermiwell/errors.hpp"
#include "fermiwell/semiclassical.hpp"

namespace fermiwell {

namespace {

// Node verification grid: 4001 points over |x| <= a + 12 b.
constexpr int kNodeGridPoints = 4001;
constexpr double kNodeGridWidthInB = 12.0;

double threshold_matching(const WellParams& p, Parity parity)
{
    const double beta = to_dimensionless(p).beta;
    const SolutionValue v = hypergeometric_solution(0.0, Complex(0.0, beta), -p.alpha(), p.b, 1.0);
    return parity == Parity::even ? v.derivative.real() : v.value.real();
}

} // namespace

double matching_function(const WellParams& p, double energy, Parity parity)
{
    const WaveSample s = psi(p, energy, 0.0);
    return parity == Parity::even ? s.dpsi_dx : s.psi;
}

std::vector<WaveSample> sample_state(const WellParams& p,
                                     double energy,
                                     Parity parity,
                                     double half_width,
                                     int points)
{
    if (points < 2)
        throw DomainError("sample_state: need at least two points");
    std::vector<WaveSample> out(static_cast<std::size_t>(points));
    const double step = 2 * half_width / (points - 1);
    for (int i = points - 1; i >= 0; --i)
    {
        const int mirror = points - 1 - i;
        auto& s = out[static_cast<std::size_t>(i)];
        if (mirror < i)
        {
            const double x = -half_width + step * i;
            s = psi(p, energy, x);
            s.x = x;
            continue;
        }
        // Left half and the midpoint reuse the right half by reflection.
        const auto& right = out[static_cast<std::size_t>(mirror)];
        s.x = -right.x;
        if (mirror == i)
        {
            const WaveSample centre = psi(p, energy, 0.0);
            s.x = 0.0;
            s.psi = parity == Parity::even ? centre.psi : 0.0;
            s.dpsi_dx = parity == Parity::even ? 0.0 : centre.dpsi_dx;
        }
        else if (parity == Parity::even)
        {
            s.psi = right.psi;
            s.dpsi_dx = -right.dpsi_dx;
        }
        else
        {
            s.psi = -right.psi;
            s.dpsi_dx = right.dpsi_dx;
        }
    }
    return out;
}

SpectrumReport solve_spectrum(const WellParams& p, int grid_points, double tol_e)
{
    p.validate();
    if (grid_points < 200)
        throw DomainError("solve_spectrum: grid_points must be at least 200");
    if (!(tol_e > 0))
        throw DomainError("solve_spectrum: tol_e must be positive");

    const double eps = 1e-6 * p.v0;
    const double lo = -p.v0 + eps;
    const double hi = -eps;

    struct Root
    {
        double energy;
        Parity parity;
    };
    std::vector<Root> roots;
    for (Parity parity : {Parity::even, Parity::odd})
    {
        auto f = [&](double e) { return matching_function(p, e, parity); };
        for (const SignBracket& br : scan_sign_changes(f, lo, hi, grid_points))
        {
            roots.push_back({bisect(f, br, tol_e), parity});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Root& l, const Root& r) { return l.energy < r.energy; });

    SpectrumReport report;
    report.params = p;
    report.g_value = g_closed_form(to_dimensionless(p));

    const double half_width = p.a + kNodeGridWidthInB * p.b;
    for (std::size_t i = 0; i < roots.size(); ++i)
    {
        EigenState st;
        st.index = static_cast<int>(i);
        st.energy = roots[i].energy;
        st.parity = roots[i].parity;
        const Parity expected = (i % 2 == 0) ? Parity::even : Parity::odd;
        if (st.parity != expected)
        {
            throw LabelingError("solve_spectrum: parity alternation broken at index "
                                + std::to_string(i)
                                + "; two same-parity roots may share a grid cell, "
                                  "raise grid_points");
        }
        const auto samples = sample_state(p, st.energy, st.parity, half_width, kNodeGridPoints);
        st.nodes = static_cast<int>(count_nodes(samples));
        if (st.nodes != st.index)
        {
            throw LabelingError("solve_spectrum: state " + std::to_string(i) + " has "
                                + std::to_string(st.nodes) + " nodes");
        }
        report.states.push_back(st);
    }
    report.count = static_cast<int>(report.states.size());

    const Parity next = (report.count % 2 == 0) ? Parity::even : Parity::odd;
    const double at_eps = matching_function(p, hi, next);
    const double at_zero = threshold_matching(p, next);
    report.near_threshold = (at_eps < 0) != (at_zero < 0) || at_zero == 0;

    const int floor_g = static_cast<int>(std::floor(report.g_value));
    report.count_rule_violated = report.count != floor_g && report.count != floor_g + 1;
    return report;
}

int count_states(const WellParams& p)
{
    return solve_spectrum(p).count;
}

} // namespace fermiwell
