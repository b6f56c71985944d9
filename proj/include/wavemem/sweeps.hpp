#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavemem/reservoir.hpp"

namespace wavemem
{

// Table of observable curves against one swept axis. Curves keep insertion
// order so files come out the same way every run.
struct SweepResult
{
    std::string axis_name;
    std::vector<double> axis; // strictly increasing
    std::vector<std::pair<std::string, std::vector<double>>> curves;

    struct Meta
    {
        double alpha = 1.0;
        double gamma_over_alpha = 0.0;
        double alphaL = 0.0;
        double step = 1e-3;
    } meta;

    const std::vector<double> &curve(const std::string &label) const;
    bool has_curve(const std::string &label) const;
};

// Shared knobs for all sweeps. threads = 0 picks the hardware count;
// results are gathered in axis order regardless of completion order.
struct SweepOptions
{
    double alpha = 1.0;
    double step = 1e-3;
    unsigned threads = 0;
};

// T(z) for the three reservoir kinds plus the gamma = 0 cos^2 reference.
SweepResult sweep_transmission_vs_z(double gamma_over_alpha, double alphaL,
                                    const SweepOptions &opt = {});

// T at fixed alpha*z values as a function of gamma/alpha (log-spaced grid).
// Curve labels are "<kind>@az=<value>".
SweepResult sweep_transmission_vs_gamma(std::span<const double> alphaz_values,
                                        std::pair<double, double> gamma_range,
                                        int points, const SweepOptions &opt = {});

// BLP measure N(gamma) per kind at fixed alphaL.
SweepResult sweep_blp_vs_gamma(std::pair<double, double> gamma_range,
                               double alphaL, int points,
                               const SweepOptions &opt = {});

// log10|f(z)| per kind plus sparse Markov overlay points log10(e^{-kappa z})
// labelled "<kind>_markov". Meant for the broadened regime gamma >> alpha.
SweepResult sweep_logf_vs_z(double gamma_over_alpha, double alphaL,
                            const SweepOptions &opt = {});

// True when values never drop by more than tol between neighbours.
bool is_non_decreasing(std::span<const double> values, double tol);

// Discrete argmin with three-point parabolic refinement. `found` requires
// an interior minimum lying below both endpoints by more than tol.
struct InteriorMinimum
{
    bool found = false;
    double axis_value = 0.0;
    double value = 0.0;
};

InteriorMinimum find_interior_minimum(std::span<const double> axis,
                                      std::span<const double> values, double tol);

} // namespace wavemem
