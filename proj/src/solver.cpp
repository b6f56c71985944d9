#include "wavemem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "wavemem/errors.hpp"

namespace wavemem
{
namespace
{

std::size_t grid_points(double length, double step)
{
    return static_cast<std::size_t>(std::llround(length / step));
}

// m~(z_i) on the grid, split into real/imaginary arrays, plus reversed
// copies so the history sweep in the solver runs unit-stride on both
// operands.
struct KernelTable
{
    std::vector<double> re, im;
    std::vector<double> rev_re, rev_im;
    bool is_real = true;
};

KernelTable tabulate_kernel(const ReservoirSpec &spec, std::size_t n, double h)
{
    KernelTable t;
    t.re.resize(n + 1);
    t.im.resize(n + 1);
    t.is_real = (spec.detuning == 0.0);
    for (std::size_t i = 0; i <= n; ++i)
    {
        const std::complex<double> m = autocorrelation(spec, static_cast<double>(i) * h);
        t.re[i] = m.real();
        t.im[i] = m.imag();
    }
    t.rev_re.assign(t.re.rbegin(), t.re.rend());
    t.rev_im.assign(t.im.rbegin(), t.im.rend());
    return t;
}

void check_finite(std::complex<double> value, double z)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    {
        throw NumericalError("solver: amplitude stopped being finite", z);
    }
}

// Resonant case: kernel and amplitude are purely real, so the trapezoid
// history sweep runs on plain doubles.
std::vector<std::complex<double>> integrate_real(const ReservoirSpec &spec,
                                                 std::size_t n, double h)
{
    const KernelTable kt = tabulate_kernel(spec, n, h);
    const double m0 = spec.alpha * spec.alpha;
    std::vector<double> f(n + 1, 0.0);
    f[0] = 1.0;
    double d = 0.0; // f'(z_k); zero at the origin by construction
    for (std::size_t k = 0; k < n; ++k)
    {
        const double *kr = kt.rev_re.data() + (n - k - 1);
        const double *fv = f.data();
        double s = 0.0;
        for (std::size_t i = 0; i <= k; ++i)
        {
            s += kr[i] * fv[i];
        }
        const double hist = s - 0.5 * kt.re[k + 1] * f[0];

        const double predicted = f[k] + h * d;
        const double g_pred = h * (hist + 0.5 * m0 * predicted);
        const double corrected = f[k] + 0.5 * h * (d - g_pred);
        const double g = h * (hist + 0.5 * m0 * corrected);
        d = -g;
        f[k + 1] = corrected;
        if (!std::isfinite(corrected))
        {
            throw NumericalError("solver: amplitude stopped being finite",
                                 static_cast<double>(k + 1) * h);
        }
    }
    return {f.begin(), f.end()};
}

// Detuned case: complex kernel and amplitude, same scheme.
std::vector<std::complex<double>> integrate_complex(const ReservoirSpec &spec,
                                                    std::size_t n, double h)
{
    const KernelTable kt = tabulate_kernel(spec, n, h);
    const double m0 = spec.alpha * spec.alpha; // m~(0) is real at any detuning
    std::vector<double> fre(n + 1, 0.0);
    std::vector<double> fim(n + 1, 0.0);
    fre[0] = 1.0;
    std::complex<double> d = 0.0;
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t base = n - k - 1;
        const double *krr = kt.rev_re.data() + base;
        const double *kri = kt.rev_im.data() + base;
        double sre = 0.0;
        double sim = 0.0;
        for (std::size_t i = 0; i <= k; ++i)
        {
            sre += krr[i] * fre[i] - kri[i] * fim[i];
            sim += krr[i] * fim[i] + kri[i] * fre[i];
        }
        const std::complex<double> head(kt.re[k + 1], kt.im[k + 1]);
        const std::complex<double> hist =
            std::complex<double>(sre, sim) - 0.5 * head * std::complex<double>(fre[0], fim[0]);

        const std::complex<double> fk(fre[k], fim[k]);
        const std::complex<double> predicted = fk + h * d;
        const std::complex<double> g_pred = h * (hist + 0.5 * m0 * predicted);
        const std::complex<double> corrected = fk + 0.5 * h * (d - g_pred);
        const std::complex<double> g = h * (hist + 0.5 * m0 * corrected);
        d = -g;
        fre[k + 1] = corrected.real();
        fim[k + 1] = corrected.imag();
        check_finite(corrected, static_cast<double>(k + 1) * h);
    }
    std::vector<std::complex<double>> f(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
    {
        f[i] = {fre[i], fim[i]};
    }
    return f;
}

// Hermitian kernel m~ = alpha^2 e^{i Delta z}: the trapezoid history sum
// obeys H_{k+1} = q (H_k + m0 f_k) with q = e^{i Delta h}, so each step
// costs O(1) instead of O(k). Identical quadrature, just resummed.
std::vector<std::complex<double>> integrate_hermitian(const ReservoirSpec &spec,
                                                      std::size_t n, double h)
{
    const double m0 = spec.alpha * spec.alpha;
    const std::complex<double> q = std::polar(1.0, spec.detuning * h);
    std::vector<std::complex<double>> f(n + 1, 0.0);
    f[0] = 1.0;
    std::complex<double> hist = -0.5 * m0 * f[0];
    std::complex<double> d = 0.0;
    for (std::size_t k = 0; k < n; ++k)
    {
        hist = q * (hist + m0 * f[k]);
        const std::complex<double> predicted = f[k] + h * d;
        const std::complex<double> g_pred = h * (hist + 0.5 * m0 * predicted);
        const std::complex<double> corrected = f[k] + 0.5 * h * (d - g_pred);
        const std::complex<double> g = h * (hist + 0.5 * m0 * corrected);
        d = -g;
        f[k + 1] = corrected;
        check_finite(corrected, static_cast<double>(k + 1) * h);
    }
    return f;
}

} // namespace

void SolverConfig::validate(const ReservoirSpec &spec) const
{
    if (!(step > 0.0) || !std::isfinite(step) || !(length > 0.0) ||
        !std::isfinite(length))
    {
        throw std::invalid_argument("solver config: length and step must be positive");
    }
    if (length / step < 8.0 * (1.0 - 1e-12))
    {
        throw std::invalid_argument("solver config: require L/h >= 8");
    }
    const double rate = std::max(spec.alpha, spec.gamma);
    if (step * rate > 0.1 * (1.0 + 1e-12))
    {
        throw std::invalid_argument(
            "solver config: require h*max(alpha, gamma) <= 0.1");
    }
}

std::complex<double> AmplitudeTrace::f_at(double zq) const
{
    if (z.empty())
    {
        throw std::domain_error("trace: empty");
    }
    if (zq < z.front() - 1e-12 || zq > z.back() + 1e-12)
    {
        throw std::domain_error("trace: query outside grid");
    }
    const double h = step();
    if (h == 0.0)
    {
        return f.front();
    }
    const double pos = std::clamp((zq - z.front()) / h, 0.0,
                                  static_cast<double>(z.size() - 1));
    const std::size_t k =
        std::min(static_cast<std::size_t>(pos), z.size() - 2);
    const double w = pos - static_cast<double>(k);
    return (1.0 - w) * f[k] + w * f[k + 1];
}

std::complex<double> convolve_history(std::span<const std::complex<double>> kernel_samples,
                                      std::span<const std::complex<double>> f_samples,
                                      double h)
{
    if (kernel_samples.size() != f_samples.size())
    {
        throw std::invalid_argument("convolve_history: length mismatch");
    }
    if (kernel_samples.empty())
    {
        throw std::invalid_argument("convolve_history: empty input");
    }
    const std::size_t k = kernel_samples.size() - 1;
    if (k == 0)
    {
        return 0.0; // empty interval
    }
    std::complex<double> acc =
        0.5 * (kernel_samples[k] * f_samples[0] + kernel_samples[0] * f_samples[k]);
    for (std::size_t i = 1; i < k; ++i)
    {
        acc += kernel_samples[k - i] * f_samples[i];
    }
    return h * acc;
}

AmplitudeTrace solve_volterra(const ReservoirSpec &spec, const SolverConfig &cfg)
{
    cfg.validate(spec);
    const double h = cfg.step;
    const std::size_t n = grid_points(cfg.length, h);

    AmplitudeTrace trace;
    trace.spec = spec;
    trace.z.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
    {
        trace.z[i] = static_cast<double>(i) * h;
    }
    if (spec.kind == ReservoirKind::Hermitian)
    {
        trace.f = integrate_hermitian(spec, n, h);
    }
    else if (spec.detuning == 0.0)
    {
        trace.f = integrate_real(spec, n, h);
    }
    else
    {
        trace.f = integrate_complex(spec, n, h);
    }
    return trace;
}

std::vector<std::complex<double>> memory_convolution(const AmplitudeTrace &trace)
{
    const std::size_t n = trace.size() ? trace.size() - 1 : 0;
    std::vector<std::complex<double>> out(n + 1, 0.0);
    if (n == 0)
    {
        return out;
    }
    const double h = trace.step();
    const ReservoirSpec &spec = trace.spec;
    const double m0 = spec.alpha * spec.alpha;

    if (spec.kind == ReservoirKind::Hermitian)
    {
        const std::complex<double> q = std::polar(1.0, spec.detuning * h);
        std::complex<double> hist = -0.5 * m0 * trace.f[0];
        out[0] = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
        {
            hist = q * (hist + m0 * trace.f[k - 1]);
            out[k] = h * (hist + 0.5 * m0 * trace.f[k]);
        }
        return out;
    }

    const KernelTable kt = tabulate_kernel(spec, n, h);
    std::vector<double> fre(n + 1);
    std::vector<double> fim(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
    {
        fre[i] = trace.f[i].real();
        fim[i] = trace.f[i].imag();
    }
    for (std::size_t k = 1; k <= n; ++k)
    {
        const std::size_t base = n - k;
        const double *krr = kt.rev_re.data() + base;
        const double *kri = kt.rev_im.data() + base;
        double sre = 0.0;
        double sim = 0.0;
        for (std::size_t i = 0; i < k; ++i)
        {
            sre += krr[i] * fre[i] - kri[i] * fim[i];
            sim += krr[i] * fim[i] + kri[i] * fre[i];
        }
        // full-weight i=0 term down to half, plus the half-weight endpoint
        const std::complex<double> head(kt.re[k], kt.im[k]);
        std::complex<double> acc(sre, sim);
        acc -= 0.5 * head * trace.f[0];
        acc += 0.5 * m0 * trace.f[k];
        out[k] = h * acc;
    }
    return out;
}

} // namespace wavemem
