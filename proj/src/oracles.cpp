#include "wavemem/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wavemem/errors.hpp"

namespace wavemem
{
namespace
{

constexpr double kNormDriftTolerance = 1e-6;

} // namespace

std::complex<double> lorentzian_exact(double alpha, double gamma, double z)
{
    if (z < 0.0)
    {
        throw std::domain_error("lorentzian_exact: z must be nonnegative");
    }
    if (!(alpha > 0.0) || gamma < 0.0)
    {
        throw std::invalid_argument("lorentzian_exact: require alpha > 0, gamma >= 0");
    }
    const double hw = gamma / 2.0;
    const double disc = hw * hw - 4.0 * alpha * alpha;
    if (std::abs(disc) < 1e-12 * 4.0 * alpha * alpha)
    {
        // confluent double root at Gamma = 2 alpha
        return (1.0 + hw * z / 2.0) * std::exp(-hw * z / 2.0);
    }
    const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
    const std::complex<double> lam_p = (-hw + root) / 2.0;
    const std::complex<double> lam_m = (-hw - root) / 2.0;
    return (lam_p * std::exp(lam_m * z) - lam_m * std::exp(lam_p * z)) / (lam_p - lam_m);
}

double DiscreteBath::coupling_sum_sq() const
{
    double acc = 0.0;
    for (const double gn : g)
    {
        acc += gn * gn;
    }
    return acc;
}

double DiscreteBath::mode_spacing() const
{
    if (beta.size() < 2)
    {
        return 0.0;
    }
    return beta[1] - beta[0];
}

double DiscreteBath::recurrence_length() const
{
    const double dbeta = mode_spacing();
    if (dbeta <= 0.0)
    {
        return std::numeric_limits<double>::infinity();
    }
    return 2.0 * std::numbers::pi / dbeta;
}

DiscreteBath build_bath(const ReservoirSpec &spec, int modes,
                        double window_halfwidth_in_gammas)
{
    DiscreteBath bath;
    bath.spec = spec;

    if (spec.kind == ReservoirKind::Hermitian)
    {
        bath.beta = {spec.beta_c};
        bath.g = {spec.alpha};
        bath.window_halfwidth = 0.0;
        return bath;
    }
    if (modes < 2)
    {
        throw std::invalid_argument("build_bath: need at least two modes");
    }
    if (!(window_halfwidth_in_gammas > 0.0))
    {
        throw std::invalid_argument("build_bath: window halfwidth must be positive");
    }

    // Uniform support ends exactly at +- gamma/2; wider windows would sample
    // zero-density modes and narrower ones would clip the band.
    const double halfwidth = (spec.kind == ReservoirKind::Uniform)
                                 ? spec.uniform_halfwidth()
                                 : window_halfwidth_in_gammas * spec.gamma;
    bath.window_halfwidth = halfwidth;

    const std::size_t m = static_cast<std::size_t>(modes);
    const double dbeta = 2.0 * halfwidth / static_cast<double>(m - 1);
    bath.beta.resize(m);
    bath.g.resize(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const double beta_i = spec.beta_c - halfwidth + static_cast<double>(i) * dbeta;
        const double weight = (i == 0 || i == m - 1) ? 0.5 : 1.0;
        bath.beta[i] = beta_i;
        bath.g[i] = spec.alpha * std::sqrt(pdf(spec, beta_i) * weight * dbeta);
    }
    return bath;
}

AmplitudeTrace solve_discrete_modes(const DiscreteBath &bath, double detuning,
                                    const SolverConfig &cfg)
{
    cfg.validate(bath.spec);
    const double h = cfg.step;
    const std::size_t n = static_cast<std::size_t>(std::llround(cfg.length / h));
    const std::size_t m = bath.modes();

    // Mode detunings relative to the guide: beta_n - beta.
    std::vector<double> delta(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        delta[i] = (bath.beta[i] - bath.spec.beta_c) - detuning;
    }

    AmplitudeTrace trace;
    trace.spec = bath.spec;
    trace.z.resize(n + 1);
    trace.f.resize(n + 1);

    std::complex<double> ca = 1.0;
    std::vector<std::complex<double>> c(m, 0.0);
    trace.z[0] = 0.0;
    trace.f[0] = ca;

    const std::complex<double> minus_i(0.0, -1.0);
    std::vector<std::complex<double>> k1(m), k2(m), k3(m), k4(m), tmp(m);

    const auto guide_rate = [&](std::complex<double> /*a*/,
                                const std::vector<std::complex<double>> &modes_state) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
        {
            acc += bath.g[i] * modes_state[i];
        }
        return minus_i * acc;
    };
    const auto mode_rate = [&](std::complex<double> a,
                               const std::vector<std::complex<double>> &modes_state,
                               std::vector<std::complex<double>> &out) {
        for (std::size_t i = 0; i < m; ++i)
        {
            out[i] = minus_i * (delta[i] * modes_state[i] + bath.g[i] * a);
        }
    };

    for (std::size_t step_idx = 0; step_idx < n; ++step_idx)
    {
        const std::complex<double> ka1 = guide_rate(ca, c);
        mode_rate(ca, c, k1);

        for (std::size_t i = 0; i < m; ++i)
        {
            tmp[i] = c[i] + 0.5 * h * k1[i];
        }
        const std::complex<double> ka2 = guide_rate(ca + 0.5 * h * ka1, tmp);
        mode_rate(ca + 0.5 * h * ka1, tmp, k2);

        for (std::size_t i = 0; i < m; ++i)
        {
            tmp[i] = c[i] + 0.5 * h * k2[i];
        }
        const std::complex<double> ka3 = guide_rate(ca + 0.5 * h * ka2, tmp);
        mode_rate(ca + 0.5 * h * ka2, tmp, k3);

        for (std::size_t i = 0; i < m; ++i)
        {
            tmp[i] = c[i] + h * k3[i];
        }
        const std::complex<double> ka4 = guide_rate(ca + h * ka3, tmp);
        mode_rate(ca + h * ka3, tmp, k4);

        ca += (h / 6.0) * (ka1 + 2.0 * ka2 + 2.0 * ka3 + ka4);
        for (std::size_t i = 0; i < m; ++i)
        {
            c[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }

        const double z_now = static_cast<double>(step_idx + 1) * h;
        double norm = std::norm(ca);
        for (const auto &cn : c)
        {
            norm += std::norm(cn);
        }
        if (std::abs(norm - 1.0) > kNormDriftTolerance)
        {
            throw NumericalError("discrete-mode integrator: excitation norm drift", z_now);
        }

        trace.z[step_idx + 1] = z_now;
        trace.f[step_idx + 1] = ca;
    }
    return trace;
}

} // namespace wavemem
