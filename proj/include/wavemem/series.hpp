#pragma once

#include <complex>
#include <vector>

#include "wavemem/reservoir.hpp"

namespace wavemem
{

// Taylor coefficients f_0 ... f_K of the amplitude f(z) about z = 0.
// f_0 = 1 and f_1 = 0 always; coefficients are real at zero detuning.
struct AmplitudeSeries
{
    std::vector<std::complex<double>> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct SeriesValue
{
    std::complex<double> value;
    double remainder; // crude truncation estimate |f_K z^K|
};

// Coefficient recursion for df/dz = -(m~ * f) with f(0) = 1, f'(0) = 0.
// For n >= 1:
//
//   f_{n+1} = -1/(n(n+1)) * sum_{j=0}^{n-1} m_j f_{n-1-j} / C(n-1, j)
//
// which is the Cauchy-product expansion of the convolution; it reproduces
// f = 1 - (m0/2) z^2 - (m1/6) z^3 + ((m0^2 - 2 m2)/24) z^4 + ...
// Requires order >= 2 and kernel.order() >= order - 2; throws
// std::invalid_argument otherwise.
AmplitudeSeries amplitude_series(const KernelSeries &kernel, int order);

// Convenience overload: kernel expansion derived from the spec.
AmplitudeSeries amplitude_series(const ReservoirSpec &spec, int order);

// Horner evaluation of the truncated polynomial.
SeriesValue eval_series(const AmplitudeSeries &series, double z);

} // namespace wavemem
