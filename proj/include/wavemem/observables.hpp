#pragma once

#include <optional>
#include <vector>

#include "wavemem/reservoir.hpp"
#include "wavemem/solver.hpp"

namespace wavemem
{

// Result of a log-linear decay fit -ln|f| ~ const + kappa z.
struct DecayFit
{
    double kappa = 0.0;
    double residual = 0.0; // RMS of the fit residuals
    double z_lo = 0.0;
    double z_hi = 0.0;
};

// Derived scalars and curves for one amplitude trace.
struct ObservableReport
{
    std::vector<double> transmission;  // T(z_k) = |f(z_k)|^2
    std::vector<double> flux;          // dT/dz samples
    double blp = 0.0;                  // non-Markovianity measure N
    std::optional<DecayFit> kappa_fit; // absent when no Markov window fits
};

// T(z_k) = |f(z_k)|^2.
std::vector<double> transmission(const AmplitudeTrace &trace);

// Flux rate dT/dz = -2 Re{ f*(z) (m~ * f)(z) }, evaluated with the solver's
// quadrature. Negative values are leakage into the reservoir, positive
// values are revivals where the reservoir injects probability back.
std::vector<double> flux_rate(const AmplitudeTrace &trace);

// BLP measure: cumulative positive variation of |f| over the grid,
// N = sum_k max(|f_{k+1}| - |f_k|, 0).
double blp_measure(const AmplitudeTrace &trace);

// Hermitian-limit closed form
//   N0 = floor(aL/pi) + [1 - Theta(tan(aL))] |cos(aL)|
// with the convention Theta(0) = 1. At odd multiples of pi/2 the second
// term vanishes regardless of Theta.
double blp_hermitian_closed_form(double alphaL);

// Least-squares slope of -ln|f(z)| over [z_lo, z_hi]. Throws
// std::domain_error if the window lies outside the grid or holds fewer than
// two samples, and std::underflow_error if |f| <= 1e-12 inside the window.
DecayFit fit_decay_rate(const AmplitudeTrace &trace, double z_lo, double z_hi);

// Full report. The decay fit uses the window [1/kappa, 5/kappa] with kappa
// from markov_rate, clamped to the grid and skipped when it does not fit
// (or when gamma = 0, where no Markovian rate exists).
ObservableReport compute_observables(const AmplitudeTrace &trace);

} // namespace wavemem
