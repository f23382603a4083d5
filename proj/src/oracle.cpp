#include "fermiwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermiwell/bracket.hpp"
#include "fermiwell/errors.hpp"
#include "fermiwell/wavefunction.hpp"

namespace fermiwell {

namespace {

constexpr double kRescaleThreshold = 1e100;
constexpr double kRefineTol = 1e-9;
constexpr int kInitialScanPoints = 400;
constexpr int kMaxScanPoints = 51200;

double max_wavenumber(const WellParams& p)
{
    return std::sqrt(p.kappa2 * p.v0);
}

//! Potential sampled once on the half-line grid; q(E) = kappa2 (E - V).
struct HalfLineGrid
{
    const WellParams& p;
    double h;
    int n;  // number of intervals
    int m;  // match index
    std::vector<double> v;

    HalfLineGrid(const WellParams& params, const IntegratorConfig& cfg)
        : p(params), h(cfg.grid_step()), n(cfg.intervals()), m(cfg.match_index())
    {
        v.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            v[static_cast<std::size_t>(i)] = potential(p, h * i);
    }

    double q(double energy, int i) const
    {
        return p.kappa2 * (energy - v[static_cast<std::size_t>(i)]);
    }

    //! Nodes 0..last marched from the origin.
    std::vector<double> outward(double energy, Parity parity, int last) const
    {
        std::vector<double> q_values(static_cast<std::size_t>(last) + 1);
        for (int i = 0; i <= last; ++i)
            q_values[static_cast<std::size_t>(i)] = q(energy, i);

        const double psi1 = parity == Parity::even ? even_first_step(energy) : h;
        return numerov_march(q_values, h, parity == Parity::even ? 1.0 : 0.0, psi1);
    }

    /*!
     * psi(h) for psi(0) = 1, psi'(0+) = 0 by a fifth-order Taylor step with
     * one-sided derivatives of q. V has a cusp at the origin, so the
     * symmetric Numerov closure psi(-h) = psi(h) would only be second order.
     */
    double even_first_step(double energy) const
    {
        const double t = -p.alpha();
        const double l = logistic_tail(t);
        const double l1 = -l * (1.0 - l);
        const double l2 = l * (1.0 - l) * (1.0 - 2.0 * l);
        const double l3 = -l * (1.0 - l) * (1.0 - 6.0 * l + 6.0 * l * l);
        // q = kappa2 (E + u0 L(t)), t = (x - a)/b
        const double c = p.kappa2 * p.u0();
        const double q0 = p.kappa2 * energy + c * l;
        const double q1 = c * l1 / p.b;
        const double q2 = c * l2 / (p.b * p.b);
        const double q3 = c * l3 / (p.b * p.b * p.b);

        // psi'' = -q psi with psi = 1, psi' = 0 at the origin.
        const double d2 = -q0;
        const double d3 = -q1;
        const double d4 = -q2 - q0 * d2;
        const double d5 = -q3 - 3.0 * q1 * d2 - q0 * d3;
        const double h2 = h * h;
        return 1.0 + d2 * h2 / 2.0 + d3 * h2 * h / 6.0 + d4 * h2 * h2 / 24.0
               + d5 * h2 * h2 * h / 120.0;
    }

    //! Nodes n down to first, returned in increasing-x order.
    std::vector<double> inward(double energy, int first) const
    {
        const int count = n - first + 1;
        std::vector<double> q_values(static_cast<std::size_t>(count));
        for (int j = 0; j < count; ++j)
            q_values[static_cast<std::size_t>(j)] = q(energy, n - j);
        const double k = std::sqrt(std::max(0.0, -p.kappa2 * energy));
        std::vector<double> psi = numerov_march(q_values, h, 1.0, std::exp(k * h));
        std::reverse(psi.begin(), psi.end());
        return psi;
    }

    //! Discrete Wronskian of the outward and inward solutions across (m, m+1).
    double mismatch(double energy, Parity parity) const
    {
        const std::vector<double> out = outward(energy, parity, m + 1);
        const std::vector<double> in = inward(energy, m);
        const auto mm = static_cast<std::size_t>(m);
        return out[mm] * in[1] - out[mm + 1] * in[0];
    }

    int full_line_nodes(double energy, Parity parity) const
    {
        const std::vector<double> out = outward(energy, parity, m);
        const std::vector<double> in = inward(energy, m);
        const auto mm = static_cast<std::size_t>(m);
        const double scale = in[0] != 0 ? out[mm] / in[0] : 0.0;

        std::vector<WaveSample> samples;
        samples.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= m; ++i)
            samples.push_back({h * i, out[static_cast<std::size_t>(i)], 0.0});
        for (int i = m + 1; i <= n; ++i)
            samples.push_back({h * i, scale * in[static_cast<std::size_t>(i - m)], 0.0});
        if (parity == Parity::odd)
            samples.front().psi = 0.0;

        const int half = static_cast<int>(count_nodes(samples));
        return 2 * half + (parity == Parity::odd ? 1 : 0);
    }
};

} // namespace

IntegratorConfig IntegratorConfig::for_well(const WellParams& p)
{
    p.validate();
    IntegratorConfig cfg;
    cfg.x_max = p.a + 30.0 * p.b;
    cfg.step = std::min(p.b / 40.0, 0.02 / max_wavenumber(p));
    cfg.match_point = p.a;
    return cfg;
}

void IntegratorConfig::validate(const WellParams& p) const
{
    p.validate();
    const double slack = 1.0 + 1e-12;
    if (!(x_max >= p.a + 15.0 * p.b))
        throw DomainError("IntegratorConfig: x_max must be at least a + 15 b");
    if (!(step > 0) || step > slack * p.b / 20.0 || step > slack * 0.3 / max_wavenumber(p))
        throw DomainError("IntegratorConfig: step must not exceed b/20 or 0.3/k'");
    if (!(match_point > 0) || match_point >= x_max - step)
        throw DomainError("IntegratorConfig: match_point must lie inside (0, x_max)");
}

int IntegratorConfig::intervals() const
{
    return static_cast<int>(std::ceil(x_max / step - 1e-9));
}

double IntegratorConfig::grid_step() const
{
    return x_max / intervals();
}

int IntegratorConfig::match_index() const
{
    const int idx = static_cast<int>(std::lround(match_point / grid_step()));
    return std::clamp(idx, 1, intervals() - 2);
}

std::vector<double> numerov_march(std::span<const double> q, double step, double psi0, double psi1)
{
    const std::size_t n = q.size();
    std::vector<double> psi(n);
    if (n == 0)
        return psi;
    psi[0] = psi0;
    if (n == 1)
        return psi;
    psi[1] = psi1;

    // summed form: y = (1 + h^2 q / 12) psi, d_i = y_{i+1} - y_i, d_i = d_{i-1} - h^2 q_i psi_i
    const double h2 = step * step;
    auto weight = [&](std::size_t i) { return 1.0 + h2 * q[i] / 12.0; };
    double y = weight(1) * psi1;
    double d = y - weight(0) * psi0;
    for (std::size_t i = 1; i + 1 < n; ++i)
    {
        d -= h2 * q[i] * psi[i];
        y += d;
        psi[i + 1] = y / weight(i + 1);
        if (std::abs(psi[i + 1]) > kRescaleThreshold)
        {
            for (std::size_t j = 0; j <= i + 1; ++j)
                psi[j] /= kRescaleThreshold;
            y /= kRescaleThreshold;
            d /= kRescaleThreshold;
        }
    }
    return psi;
}

NumerovSolution numerov_integrate(const WellParams& p,
                                  double energy,
                                  const IntegratorConfig& cfg,
                                  Direction direction,
                                  Parity parity_start)
{
    cfg.validate(p);
    if (direction == Direction::inward && !(energy < 0))
        throw DomainError("numerov_integrate: inward start needs a decaying tail, E < 0");

    const HalfLineGrid grid(p, cfg);
    NumerovSolution sol;
    sol.psi = direction == Direction::outward ? grid.outward(energy, parity_start, grid.n)
                                              : grid.inward(energy, 0);
    sol.x.resize(sol.psi.size());
    for (std::size_t i = 0; i < sol.x.size(); ++i)
        sol.x[i] = grid.h * static_cast<double>(i);
    return sol;
}

int count_via_zero_energy_nodes(const WellParams& p, const IntegratorConfig& cfg)
{
    cfg.validate(p);
    const double h = cfg.grid_step();
    const int n = cfg.intervals();

    // From +x_max to -x_max; constant seed (psi = 1, psi' = 0).
    std::vector<double> q(2 * static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= 2 * n; ++i)
        q[static_cast<std::size_t>(i)] = -p.kappa2 * potential(p, cfg.x_max - h * i);
    const std::vector<double> psi = numerov_march(q, h, 1.0, 1.0);

    std::vector<WaveSample> samples;
    samples.reserve(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        samples.push_back({cfg.x_max - h * static_cast<double>(i), psi[i], 0.0});
    int nodes = static_cast<int>(count_nodes(samples));

    // Past -x_max the potential is negligible and psi continues linearly;
    // it has one more zero if it is heading towards the axis.
    const double last = psi.back();
    const double slope_left = last - psi[psi.size() - 2];
    if (last * slope_left < 0)
        ++nodes;
    return nodes;
}

std::vector<OracleLevel> oracle_spectrum(const WellParams& p, const IntegratorConfig& cfg)
{
    cfg.validate(p);
    const HalfLineGrid grid(p, cfg);
    const int expected = count_via_zero_energy_nodes(p, cfg);

    const double lo = -p.v0;
    const double hi = -1e-12 * p.v0;

    std::vector<std::pair<Parity, std::vector<SignBracket>>> brackets;
    for (int points = kInitialScanPoints;; points *= 2)
    {
        brackets.clear();
        std::size_t found = 0;
        for (Parity parity : {Parity::even, Parity::odd})
        {
            auto f = [&](double e) { return grid.mismatch(e, parity); };
            brackets.emplace_back(parity, scan_sign_changes(f, lo, hi, points));
            found += brackets.back().second.size();
        }
        if (static_cast<int>(found) == expected || points >= kMaxScanPoints)
            break;
    }

    std::vector<OracleLevel> levels;
    for (const auto& [parity, list] : brackets)
    {
        auto f = [&, par = parity](double e) { return grid.mismatch(e, par); };
        for (const SignBracket& br : list)
        {
            OracleLevel level;
            level.energy = bisect(f, br, kRefineTol);
            level.parity = parity;
            level.nodes = grid.full_line_nodes(level.energy, parity);
            levels.push_back(level);
        }
    }
    std::sort(levels.begin(), levels.end(),
              [](const OracleLevel& l, const OracleLevel& r) { return l.energy < r.energy; });
    return levels;
}

} // namespace fermiwell
