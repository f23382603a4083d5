#include "fermiwell/hbs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermiwell/bracket.hpp"
#include "fermiwell/errors.hpp"
#include "fermiwell/semiclassical.hpp"
#include "fermiwell/wavefunction.hpp"

namespace fermiwell {

namespace {

constexpr double kBetaStep = 0.01;
constexpr int kNodeGridPoints = 4001;
constexpr double kNodeGridTail = 30.0;

Parity parity_of_nodes(int n)
{
    return n % 2 == 1 ? Parity::odd : Parity::even;
}

} // namespace

double hbs_matching(double alpha, double beta, Parity node_parity)
{
    const WaveSample s = psi_hbs({alpha, beta}, 0.0);
    return node_parity == Parity::odd ? s.psi : s.dpsi_dx;
}

int hbs_node_count(double alpha, double beta, Parity node_parity)
{
    const DimensionlessWell d{alpha, beta};
    const double half_width = alpha + kNodeGridTail;
    const int half = kNodeGridPoints / 2;
    const double step = half_width / half;

    std::vector<WaveSample> samples(static_cast<std::size_t>(kNodeGridPoints));
    const WaveSample centre = psi_hbs(d, 0.0);
    samples[static_cast<std::size_t>(half)] = {0.0, node_parity == Parity::odd ? 0.0 : centre.psi, 0.0};
    for (int i = 1; i <= half; ++i)
    {
        const WaveSample right = psi_hbs(d, step * i);
        const double mirrored = node_parity == Parity::odd ? -right.psi : right.psi;
        samples[static_cast<std::size_t>(half + i)] = right;
        samples[static_cast<std::size_t>(half - i)] = {-right.x, mirrored, 0.0};
    }
    return static_cast<int>(count_nodes(samples));
}

std::vector<HbsSolution> solve_beta_scan(double alpha, int n_max, double tol_beta)
{
    if (!(alpha > 0))
        throw DomainError("solve_beta_scan: alpha must be positive");
    if (n_max < 1)
        throw DomainError("solve_beta_scan: n must be at least 1");
    if (!(tol_beta > 0))
        throw DomainError("solve_beta_scan: tol_beta must be positive");

    struct Root
    {
        double beta;
        Parity parity;
    };
    std::vector<Root> roots;

    const double ceiling = 3.0 * n_max;
    auto odd = [&](double beta) { return hbs_matching(alpha, beta, Parity::odd); };
    auto even = [&](double beta) { return hbs_matching(alpha, beta, Parity::even); };

    double prev = kBetaStep;
    double odd_prev = odd(prev);
    double even_prev = even(prev);
    for (int i = 2; static_cast<int>(roots.size()) < n_max; ++i)
    {
        const double beta = kBetaStep * i;
        if (beta > ceiling)
        {
            throw NotFound("solve_beta_scan: only " + std::to_string(roots.size())
                           + " critical values below beta = " + std::to_string(ceiling)
                           + " for alpha = " + std::to_string(alpha));
        }
        const double odd_now = odd(beta);
        const double even_now = even(beta);
        if ((odd_prev < 0) != (odd_now < 0))
            roots.push_back({bisect(odd, {prev, beta, odd_prev, odd_now}, tol_beta), Parity::odd});
        if ((even_prev < 0) != (even_now < 0))
            roots.push_back({bisect(even, {prev, beta, even_prev, even_now}, tol_beta), Parity::even});
        prev = beta;
        odd_prev = odd_now;
        even_prev = even_now;
    }
    std::sort(roots.begin(), roots.end(),
              [](const Root& l, const Root& r) { return l.beta < r.beta; });

    std::vector<HbsSolution> out;
    for (int n = 1; n <= n_max; ++n)
    {
        const Root& root = roots[static_cast<std::size_t>(n - 1)];
        if (root.parity != parity_of_nodes(n))
        {
            throw LabelingError("solve_beta_scan: critical values out of parity order at n = "
                                + std::to_string(n));
        }
        const int nodes = hbs_node_count(alpha, root.beta, root.parity);
        if (nodes != n)
        {
            throw NodeMismatch("solve_beta_scan: zero-energy state at beta = "
                               + std::to_string(root.beta) + " has " + std::to_string(nodes)
                               + " nodes, expected " + std::to_string(n));
        }
        out.push_back({alpha, n, root.beta, g_closed_form({alpha, root.beta})});
    }
    return out;
}

HbsSolution solve_beta_n(double alpha, int n, double tol_beta)
{
    return solve_beta_scan(alpha, n, tol_beta).back();
}

CriticalityReport verify_criticality(double alpha, double beta_n, int n, double delta, double kappa2)
{
    if (!(delta > 0 && delta < 1))
        throw DomainError("verify_criticality: delta must lie in (0, 1)");

    auto spectrum_at = [&](double beta) {
        return solve_spectrum(from_dimensionless({alpha, beta}, 1.0, kappa2));
    };
    CriticalityReport r;
    r.count_below = spectrum_at(beta_n * (1.0 - delta)).count;
    const SpectrumReport at = spectrum_at(beta_n);
    r.count_at = at.count;
    r.at_near_threshold = at.near_threshold;
    r.count_above = spectrum_at(beta_n * (1.0 + delta)).count;
    r.ok = r.count_below == n && r.count_above == n + 1;
    return r;
}

} // namespace fermiwell
