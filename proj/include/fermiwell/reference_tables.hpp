#pragma once

#include <array>

namespace fermiwell::reference {

//! Wells sharing an effective parameter G, with their exact state counts.
struct EqualGRow
{
    double g;
    double a;   //!< [fm]
    double b;   //!< [fm]
    double v0;  //!< [MeV]
    int count;
};

inline constexpr std::array<EqualGRow, 9> kEqualGWells = {{
    {3.0, 1.5, 0.9, 48.6845, 3},
    {3.0, 1.5, 0.7590, 60.0, 3},
    {3.0, 1.0518, 0.9, 60.0, 3},
    {6.4, 5.0, 0.8, 56.2945, 6},
    {6.4, 5.0, 0.6651, 60.0, 6},
    {6.4, 4.5090, 0.7, 70.0, 6},
    {8.7, 6.8, 0.7, 64.4349, 9},
    {8.7, 6.0, 0.8646, 75.0, 9},
    {8.7, 6.0027, 0.7, 80.0, 9},
}};

//! Critical half-bound strengths beta_n at fixed alpha.
struct CriticalBetaRow
{
    double alpha;
    int n;
    double beta_n;
    double g;
};

inline constexpr std::array<CriticalBetaRow, 32> kCriticalBeta = {{
    {1, 1, 0.8774, 1.4238}, {1, 2, 1.4975, 2.4302}, {1, 3, 2.1402, 3.4731},
    {1, 4, 2.7494, 4.4617}, {1, 5, 3.3789, 5.4833}, {1, 6, 3.9892, 6.4735},
    {1, 7, 4.6142, 7.4878}, {1, 8, 5.2255, 8.4798},
    {2, 1, 0.6226, 1.3679}, {2, 2, 1.1000, 2.4166}, {2, 3, 1.5723, 3.4541},
    {2, 4, 2.0281, 4.4555}, {2, 5, 2.4907, 5.4716}, {2, 6, 2.9449, 6.4694},
    {2, 7, 3.4046, 7.4794}, {2, 8, 3.8586, 8.4767},
    {3, 1, 0.4683, 1.3150}, {3, 2, 0.8534, 2.3963}, {3, 3, 1.2234, 3.4353},
    {3, 4, 1.5835, 4.4465}, {3, 5, 1.9446, 5.4604}, {3, 6, 2.3018, 6.4635},
    {3, 7, 2.6607, 7.4713}, {3, 8, 3.0172, 8.4722},
    {4, 1, 0.3697, 1.2700}, {4, 2, 0.6905, 2.3717}, {4, 3, 0.9947, 3.4166},
    {4, 4, 1.2913, 4.4354}, {4, 5, 1.5866, 5.4496}, {4, 6, 1.8796, 6.4563},
    {4, 7, 2.1729, 7.4636}, {4, 8, 2.4650, 8.4669},
}};

//! s-wave neutron levels of nuclei modelled as V0 = 50 MeV, a = 1.3 A^{1/3} fm, b = 0.65 fm.
struct NucleusRow
{
    const char* element;
    int mass_number;
    double g;
    int s_wave_levels;
};

inline constexpr std::array<NucleusRow, 3> kNuclei = {{
    {"O", 16, 4.13, 2},
    {"Sn", 132, 7.42, 3},
    {"Pb", 208, 8.49, 4},
}};

//! Well with three bound states and a solitary three-node half-bound state.
struct ShowcaseWell
{
    double v0 = 45.3642;
    double a = 2.0;
    double b = 1.0;
    double alpha = 2.0;
    double beta = 1.5723;
    std::array<double, 3> exact = {-33.7554, -16.2221, -4.6764};
    std::array<double, 3> wkb = {-32.9723, -15.8589, -4.2151};
};

inline constexpr ShowcaseWell kShowcase{};

//! Acceptance tolerances for the tables above.
inline constexpr double kEnergyTol = 1e-3;      //!< exact levels [MeV]
inline constexpr double kWkbTol = 1e-2;         //!< semiclassical levels [MeV]
inline constexpr double kGTol = 2e-3;           //!< G, tables of wells and beta_n
inline constexpr double kBetaTol = 5e-4;        //!< beta_n
inline constexpr double kNuclearGTol = 0.02;    //!< G for nuclei

} // namespace fermiwell::reference
