#include "wavemem/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavemem
{

std::vector<double> transmission(const AmplitudeTrace &trace)
{
    std::vector<double> out(trace.size());
    for (std::size_t k = 0; k < trace.size(); ++k)
    {
        out[k] = std::norm(trace.f[k]);
    }
    return out;
}

std::vector<double> flux_rate(const AmplitudeTrace &trace)
{
    const std::vector<std::complex<double>> conv = memory_convolution(trace);
    std::vector<double> out(trace.size());
    for (std::size_t k = 0; k < trace.size(); ++k)
    {
        out[k] = -2.0 * std::real(std::conj(trace.f[k]) * conv[k]);
    }
    return out;
}

double blp_measure(const AmplitudeTrace &trace)
{
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k)
    {
        const double inc = std::abs(trace.f[k + 1]) - std::abs(trace.f[k]);
        if (inc > 0.0)
        {
            acc += inc;
        }
    }
    return acc;
}

double blp_hermitian_closed_form(double alphaL)
{
    if (alphaL < 0.0)
    {
        throw std::domain_error("blp_hermitian_closed_form: alphaL must be >= 0");
    }
    // Snap near-integer multiples of pi so e.g. alphaL = 100*pi lands on the
    // integer branch instead of one ulp below it.
    double x = alphaL / std::numbers::pi;
    double whole = std::floor(x);
    if (x - whole > 1.0 - 1e-9)
    {
        whole += 1.0;
        x = whole;
    }
    const double s = std::sin(alphaL);
    const double c = std::cos(alphaL);
    // Theta(tan) with Theta(0) = 1, evaluated through sign(sin * cos) to
    // stay finite at odd multiples of pi/2 (where |cos| kills the term).
    const double theta = (s * c >= 0.0) ? 1.0 : 0.0;
    if (x == whole)
    {
        return whole; // tan = 0 branch: Theta(0) = 1 wipes the second term
    }
    return whole + (1.0 - theta) * std::abs(c);
}

DecayFit fit_decay_rate(const AmplitudeTrace &trace, double z_lo, double z_hi)
{
    if (trace.size() < 2)
    {
        throw std::domain_error("fit_decay_rate: trace too short");
    }
    if (z_lo >= z_hi || z_lo < trace.z.front() - 1e-12 ||
        z_hi > trace.z.back() + 1e-12)
    {
        throw std::domain_error("fit_decay_rate: window outside grid");
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t count = 0;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < trace.size(); ++k)
    {
        const double z = trace.z[k];
        if (z < z_lo - 1e-12 || z > z_hi + 1e-12)
        {
            continue;
        }
        const double mag = std::abs(trace.f[k]);
        if (mag <= 1e-12)
        {
            throw std::underflow_error("fit_decay_rate: |f| underflow inside window");
        }
        const double y = -std::log(mag);
        pts.emplace_back(z, y);
        sx += z;
        sy += y;
        sxx += z * z;
        sxy += z * y;
        ++count;
    }
    if (count < 2)
    {
        throw std::domain_error("fit_decay_rate: fewer than two samples in window");
    }

    const double nd = static_cast<double>(count);
    const double denom = nd * sxx - sx * sx;
    const double kappa = (nd * sxy - sx * sy) / denom;
    const double intercept = (sy - kappa * sx) / nd;

    double rss = 0.0;
    for (const auto &[z, y] : pts)
    {
        const double r = y - (intercept + kappa * z);
        rss += r * r;
    }
    DecayFit fit;
    fit.kappa = kappa;
    fit.residual = std::sqrt(rss / nd);
    fit.z_lo = z_lo;
    fit.z_hi = z_hi;
    return fit;
}

ObservableReport compute_observables(const AmplitudeTrace &trace)
{
    ObservableReport report;
    report.transmission = transmission(trace);
    report.flux = flux_rate(trace);
    report.blp = blp_measure(trace);

    if (trace.spec.gamma > 0.0 && trace.size() >= 2)
    {
        // Default Markov window [1/kappa, 5/kappa]: past the quadratic
        // short-z transient all kernels share, well inside the grid.
        const double kappa_guess = markov_rate(trace.spec);
        double z_lo = 1.0 / kappa_guess;
        double z_hi = 5.0 / kappa_guess;
        const double z_max = trace.z.back();
        z_hi = std::min(z_hi, z_max);
        if (z_lo < z_hi - trace.step())
        {
            try
            {
                report.kappa_fit = fit_decay_rate(trace, z_lo, z_hi);
            }
            catch (const std::underflow_error &)
            {
                // |f| collapsed inside the window; report no fit.
            }
        }
    }
    return report;
}

} // namespace wavemem
