#include "wavemem/reservoir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavemem
{
namespace
{

constexpr double kLn256 = 5.545177444479562; // ln 256 = 8 ln 2
constexpr double kLn65536 = 2.0 * kLn256;    // ln 65536 = 16 ln 2

double sinc(double x)
{
    // sin(x)/x with sinc(0) = 1; series below the switchover keeps full
    // precision through the removable singularity.
    if (std::abs(x) < 1e-4)
    {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

} // namespace

std::string to_string(ReservoirKind kind)
{
    switch (kind)
    {
    case ReservoirKind::Lorentzian:
        return "lorentzian";
    case ReservoirKind::Gaussian:
        return "gaussian";
    case ReservoirKind::Uniform:
        return "uniform";
    case ReservoirKind::Hermitian:
        return "hermitian";
    }
    throw std::invalid_argument("unknown reservoir kind");
}

ReservoirKind reservoir_kind_from_string(const std::string &name)
{
    if (name == "lorentzian")
    {
        return ReservoirKind::Lorentzian;
    }
    if (name == "gaussian")
    {
        return ReservoirKind::Gaussian;
    }
    if (name == "uniform")
    {
        return ReservoirKind::Uniform;
    }
    if (name == "hermitian")
    {
        return ReservoirKind::Hermitian;
    }
    throw std::invalid_argument("unknown reservoir kind: " + name);
}

ReservoirSpec ReservoirSpec::make(ReservoirKind kind, double alpha, double gamma,
                                  double detuning, double beta_c)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
    {
        throw std::invalid_argument("reservoir: alpha must be positive");
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
    {
        throw std::invalid_argument("reservoir: gamma must be nonnegative");
    }
    if (kind == ReservoirKind::Hermitian && gamma != 0.0)
    {
        throw std::invalid_argument("reservoir: Hermitian kind requires gamma = 0");
    }
    ReservoirSpec spec;
    // gamma = 0 collapses every kernel to the constant alpha^2.
    spec.kind = (gamma == 0.0) ? ReservoirKind::Hermitian : kind;
    spec.alpha = alpha;
    spec.gamma = gamma;
    spec.detuning = detuning;
    spec.beta_c = beta_c;
    return spec;
}

double ReservoirSpec::gauss_sigma() const
{
    return gamma / std::sqrt(kLn256);
}

double pdf(const ReservoirSpec &spec, double beta)
{
    const double x = beta - spec.beta_c;
    switch (spec.kind)
    {
    case ReservoirKind::Lorentzian:
    {
        const double hw = spec.lorentz_halfwidth();
        return hw / (std::numbers::pi * (x * x + hw * hw));
    }
    case ReservoirKind::Gaussian:
    {
        const double sigma = spec.gauss_sigma();
        return std::exp(-x * x / (2.0 * sigma * sigma)) /
               (sigma * std::sqrt(2.0 * std::numbers::pi));
    }
    case ReservoirKind::Uniform:
        return std::abs(x) <= spec.uniform_halfwidth() ? 1.0 / spec.gamma : 0.0;
    case ReservoirKind::Hermitian:
        break;
    }
    throw std::domain_error("pdf: Hermitian reservoir has no pointwise density");
}

std::complex<double> autocorrelation(const ReservoirSpec &spec, double z)
{
    if (z < 0.0)
    {
        throw std::domain_error("autocorrelation: z must be nonnegative");
    }
    const double a2 = spec.alpha * spec.alpha;
    double envelope = 1.0;
    switch (spec.kind)
    {
    case ReservoirKind::Lorentzian:
        envelope = std::exp(-spec.gamma * z / 2.0);
        break;
    case ReservoirKind::Gaussian:
        envelope = std::exp(-spec.gamma * spec.gamma * z * z / kLn65536);
        break;
    case ReservoirKind::Uniform:
        envelope = sinc(spec.gamma * z / 2.0);
        break;
    case ReservoirKind::Hermitian:
        envelope = 1.0;
        break;
    }
    if (spec.detuning == 0.0)
    {
        return {a2 * envelope, 0.0};
    }
    return a2 * envelope * std::polar(1.0, spec.detuning * z);
}

KernelSeries kernel_series(const ReservoirSpec &spec, int order)
{
    if (order < 0)
    {
        throw std::invalid_argument("kernel_series: order must be nonnegative");
    }
    const double a2 = spec.alpha * spec.alpha;
    std::vector<std::complex<double>> resonant(static_cast<std::size_t>(order) + 1,
                                               0.0);
    switch (spec.kind)
    {
    case ReservoirKind::Lorentzian:
    {
        // m_j = alpha^2 (-gamma/2)^j / j!
        double term = a2;
        for (int j = 0; j <= order; ++j)
        {
            resonant[j] = term;
            term *= -spec.gamma / 2.0 / (j + 1);
        }
        break;
    }
    case ReservoirKind::Gaussian:
    {
        // m_{2j} = alpha^2 (-gamma^2 / ln 65536)^j / j!, odd terms vanish.
        double term = a2;
        for (int j = 0; 2 * j <= order; ++j)
        {
            resonant[2 * j] = term;
            term *= -spec.gamma * spec.gamma / kLn65536 / (j + 1);
        }
        break;
    }
    case ReservoirKind::Uniform:
    {
        // m_{2j} = alpha^2 (-1)^j (gamma/2)^{2j} / (2j+1)!, odd terms vanish.
        const double hw = spec.gamma / 2.0;
        double term = a2;
        for (int j = 0; 2 * j <= order; ++j)
        {
            resonant[2 * j] = term;
            term *= -hw * hw / ((2 * j + 2) * (2 * j + 3));
        }
        break;
    }
    case ReservoirKind::Hermitian:
        resonant[0] = a2;
        break;
    }

    if (spec.detuning == 0.0)
    {
        return KernelSeries{std::move(resonant)};
    }

    // Detuned kernel: Cauchy product with the expansion of e^{i Delta z}.
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(order) + 1);
    phase[0] = 1.0;
    for (int j = 1; j <= order; ++j)
    {
        phase[j] = phase[j - 1] * std::complex<double>(0.0, spec.detuning) /
                   static_cast<double>(j);
    }
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(order) + 1,
                                             0.0);
    for (int n = 0; n <= order; ++n)
    {
        std::complex<double> acc = 0.0;
        for (int j = 0; j <= n; ++j)
        {
            acc += resonant[j] * phase[n - j];
        }
        coeffs[n] = acc;
    }
    return KernelSeries{std::move(coeffs)};
}

double markov_rate(const ReservoirSpec &spec)
{
    if (spec.gamma <= 0.0)
    {
        throw std::domain_error(
            "markov_rate: divergent in the Hermitian limit (gamma = 0)");
    }
    const double a2 = spec.alpha * spec.alpha;
    switch (spec.kind)
    {
    case ReservoirKind::Lorentzian:
        return 2.0 * a2 / spec.gamma;
    case ReservoirKind::Gaussian:
        // integral of exp(-gamma^2 z^2 / ln 65536) over [0, inf)
        return std::sqrt(std::numbers::pi * std::log(16.0)) * a2 / spec.gamma;
    case ReservoirKind::Uniform:
        return std::numbers::pi * a2 / spec.gamma;
    case ReservoirKind::Hermitian:
        break;
    }
    throw std::domain_error("markov_rate: divergent in the Hermitian limit");
}

} // namespace wavemem
