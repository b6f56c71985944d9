#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wavemem/reservoir.hpp"

namespace wavemem
{

// Uniform-grid configuration for the Volterra integrator.
struct SolverConfig
{
    enum class Method
    {
        TrapezoidPece,
    };

    double length = 1.0; // L, propagation distance
    double step = 1e-3;  // h, grid spacing
    Method method = Method::TrapezoidPece;

    // Resolution guards: L/h >= 8 and h*max(alpha, gamma) <= 0.1.
    // Throws std::invalid_argument on violation.
    void validate(const ReservoirSpec &spec) const;
};

// Amplitude samples f(z_k) on the uniform grid z_k = k h, z_N = L.
struct AmplitudeTrace
{
    std::vector<double> z;
    std::vector<std::complex<double>> f;
    ReservoirSpec spec;

    std::size_t size() const { return z.size(); }
    double step() const { return z.size() > 1 ? z[1] - z[0] : 0.0; }
    double length() const { return z.empty() ? 0.0 : z.back(); }

    // Linear interpolation between grid samples.
    std::complex<double> f_at(double zq) const;
};

// Composite-trapezoid approximation of the memory integral
// int_0^{z_k} kernel(z_k - z') f(z') dz' from equal-length sample arrays
// kernel(z_i) and f(z_i), i = 0..k. A single sample yields 0.
// Throws std::invalid_argument on a length mismatch or empty input.
std::complex<double> convolve_history(std::span<const std::complex<double>> kernel_samples,
                                      std::span<const std::complex<double>> f_samples,
                                      double h);

// Integrates df/dz = -(m~ * f), f(0) = 1, by composite-trapezoid history
// convolution with one predict-evaluate-correct-evaluate step per grid
// point; globally second order. The Hermitian kernel m~ = alpha^2 e^{i
// Delta z} admits an exact one-term update of the same trapezoid sum, which
// the solver uses in that case; every other kind walks the full history.
// Throws NumericalError if the trace stops being finite.
AmplitudeTrace solve_volterra(const ReservoirSpec &spec, const SolverConfig &cfg);

// The quadrature the solver uses, applied to a finished trace: returns
// (m~ * f)(z_k) for every grid point. Shared by the flux-rate observable.
std::vector<std::complex<double>> memory_convolution(const AmplitudeTrace &trace);

} // namespace wavemem
