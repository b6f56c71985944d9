#pragma once

#include <complex>
#include <string>
#include <vector>

namespace wavemem
{

// Mode distribution of the reservoir. Hermitian is the common gamma = 0
// limit where the reservoir collapses to a single coupled mode.
enum class ReservoirKind
{
    Lorentzian,
    Gaussian,
    Uniform,
    Hermitian,
};

std::string to_string(ReservoirKind kind);
ReservoirKind reservoir_kind_from_string(const std::string &name);

// Physical configuration of the guide-reservoir coupling. All rates carry
// units of inverse length; gamma is the FWHM of the mode distribution, the
// common width parameter that makes the three reservoir shapes comparable.
//
// A spec with gamma = 0 is normalized to Hermitian at construction (every
// kernel degenerates to the constant alpha^2 there), so kind == Hermitian
// and gamma == 0 always imply each other.
struct ReservoirSpec
{
    ReservoirKind kind = ReservoirKind::Hermitian;
    double alpha = 1.0;    // coupling strength
    double gamma = 0.0;    // FWHM of the mode distribution
    double detuning = 0.0; // Delta = beta - beta_c
    double beta_c = 0.0;   // reservoir center; bookkeeping only

    // Validating factory; throws std::invalid_argument on a bad combination.
    static ReservoirSpec make(ReservoirKind kind, double alpha, double gamma,
                              double detuning = 0.0, double beta_c = 0.0);

    // Width parameters derived from the FWHM.
    double lorentz_halfwidth() const { return gamma / 2.0; } // Gamma, HWHM
    double gauss_sigma() const;                              // gamma / sqrt(ln 256)
    double uniform_halfwidth() const { return gamma / 2.0; } // support half-width
};

// Taylor coefficients m_0 ... m_K of the memory kernel about z = 0.
// m_0 = alpha^2 for every kind; coefficients are real at zero detuning.
struct KernelSeries
{
    std::vector<std::complex<double>> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Mode density rho(beta). Nonnegative, integrates to 1 over its support.
// Throws std::domain_error for the Hermitian kind (a delta distribution has
// no pointwise density).
double pdf(const ReservoirSpec &spec, double beta);

// Memory kernel m~(z) = m(z) e^{i beta z} for z >= 0. At resonance this is
// the closed-form envelope (exponential, Gaussian, or sinc) times alpha^2;
// detuning multiplies it by e^{i Delta z}. Throws std::domain_error for
// negative z.
std::complex<double> autocorrelation(const ReservoirSpec &spec, double z);

// Taylor expansion of m~ about z = 0 up to the requested order.
KernelSeries kernel_series(const ReservoirSpec &spec, int order);

// Markovian decay rate kappa = integral of the resonant kernel over
// [0, inf). Throws std::domain_error when gamma = 0 (no Markovian limit).
double markov_rate(const ReservoirSpec &spec);

} // namespace wavemem
