#pragma once

#include <complex>
#include <vector>

#include "wavemem/reservoir.hpp"
#include "wavemem/solver.hpp"

namespace wavemem
{

// Closed-form resonant amplitude for the Lorentzian reservoir. The memory
// equation closes to f'' + (gamma/2) f' + alpha^2 f = 0, so with
// Gamma = gamma/2 and lambda_pm = (-Gamma pm sqrt(Gamma^2 - 4 alpha^2))/2:
//
//   f(z) = (lambda_+ e^{lambda_- z} - lambda_- e^{lambda_+ z})
//          / (lambda_+ - lambda_-)
//
// with the confluent limit (1 + Gamma z/2) e^{-Gamma z/2} at Gamma = 2 alpha.
// gamma = 0 reduces to cos(alpha z).
std::complex<double> lorentzian_exact(double alpha, double gamma, double z);

// Reservoir sampled as discrete modes: beta_n uniformly spaced across the
// window, couplings g_n = alpha sqrt(rho(beta_n) w_n dbeta) with trapezoid
// endpoint weights, so that sum g_n^2 approximates alpha^2 times the mode
// mass inside the window.
struct DiscreteBath
{
    std::vector<double> beta; // mode propagation constants (absolute)
    std::vector<double> g;    // couplings
    ReservoirSpec spec;       // the spec the bath was built from
    double window_halfwidth = 0.0;

    std::size_t modes() const { return beta.size(); }
    double coupling_sum_sq() const;
    double mode_spacing() const;
    // Propagation distance beyond which the discrete bath revives
    // artificially: z_rec = 2 pi / dbeta.
    double recurrence_length() const;
};

// Builds a bath of `modes` uniformly spaced modes. The window spans
// +- window_halfwidth_in_gammas * gamma around beta_c, except for the
// Uniform kind where it is clamped to the exact support. Hermitian returns
// the single mode (beta_c, alpha). Requires modes >= 2 for non-Hermitian
// kinds; throws std::invalid_argument otherwise.
DiscreteBath build_bath(const ReservoirSpec &spec, int modes,
                        double window_halfwidth_in_gammas);

// Brute-force integration of the coupled mode equations in the rotating
// frame of the guide,
//
//   i c_a' = sum_n g_n c_n,    i c_n' = (beta_n - beta) c_n + g_n c_a,
//
// from c_a(0) = 1, c_n(0) = 0, with a classical fixed-step RK4 walker, so
// the returned guide trace is directly comparable to f(z). `detuning` is
// beta - beta_c. Throws NumericalError if the excitation norm
// |c_a|^2 + sum |c_n|^2 drifts from 1 by more than 1e-6.
AmplitudeTrace solve_discrete_modes(const DiscreteBath &bath, double detuning,
                                    const SolverConfig &cfg);

} // namespace wavemem
