#include "wavemem/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wavemem/observables.hpp"
#include "wavemem/solver.hpp"

namespace wavemem
{
namespace
{

// Runs fn(0..n-1) on a small worker pool; each index writes only its own
// output slot so gathering stays deterministic.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn)
{
    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back([&] {
            for (;;)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                {
                    return;
                }
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                    {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool)
    {
        t.join();
    }
    if (error)
    {
        std::rethrow_exception(error);
    }
}

std::vector<double> log_spaced(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
    {
        throw std::invalid_argument("sweep: need 0 < lo < hi and at least two points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i)
    {
        grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

constexpr ReservoirKind kSweepKinds[] = {ReservoirKind::Lorentzian,
                                         ReservoirKind::Gaussian,
                                         ReservoirKind::Uniform};

std::string az_label(ReservoirKind kind, double alphaz)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s@az=%.6g", to_string(kind).c_str(), alphaz);
    return buf;
}

} // namespace

const std::vector<double> &SweepResult::curve(const std::string &label) const
{
    for (const auto &[name, values] : curves)
    {
        if (name == label)
        {
            return values;
        }
    }
    throw std::invalid_argument("sweep: no curve labelled " + label);
}

bool SweepResult::has_curve(const std::string &label) const
{
    return std::any_of(curves.begin(), curves.end(),
                       [&](const auto &c) { return c.first == label; });
}

SweepResult sweep_transmission_vs_z(double gamma_over_alpha, double alphaL,
                                    const SweepOptions &opt)
{
    if (!(gamma_over_alpha >= 0.0))
    {
        throw std::invalid_argument("sweep: gamma/alpha must be nonnegative");
    }
    const double alpha = opt.alpha;
    SolverConfig cfg;
    cfg.length = alphaL / alpha;
    cfg.step = opt.step / alpha;

    SweepResult result;
    result.axis_name = "alpha_z";
    result.meta = {alpha, gamma_over_alpha, alphaL, opt.step};

    std::vector<AmplitudeTrace> traces(4);
    std::vector<ReservoirSpec> specs;
    for (const ReservoirKind kind : kSweepKinds)
    {
        specs.push_back(ReservoirSpec::make(kind, alpha, gamma_over_alpha * alpha));
    }
    specs.push_back(ReservoirSpec::make(ReservoirKind::Hermitian, alpha, 0.0));

    parallel_for(specs.size(), opt.threads,
                 [&](std::size_t i) { traces[i] = solve_volterra(specs[i], cfg); });

    result.axis.resize(traces[0].size());
    for (std::size_t k = 0; k < traces[0].size(); ++k)
    {
        result.axis[k] = alpha * traces[0].z[k];
    }
    for (std::size_t i = 0; i < specs.size(); ++i)
    {
        result.curves.emplace_back(to_string(specs[i].kind), transmission(traces[i]));
    }
    return result;
}

SweepResult sweep_transmission_vs_gamma(std::span<const double> alphaz_values,
                                        std::pair<double, double> gamma_range,
                                        int points, const SweepOptions &opt)
{
    for (const double az : alphaz_values)
    {
        if (!(az > 0.0))
        {
            throw std::invalid_argument("sweep: alpha*z values must be positive");
        }
    }
    if (alphaz_values.empty())
    {
        throw std::invalid_argument("sweep: need at least one alpha*z value");
    }
    const double alpha = opt.alpha;
    const double az_max = *std::max_element(alphaz_values.begin(), alphaz_values.end());

    SweepResult result;
    result.axis_name = "gamma_over_alpha";
    result.axis = log_spaced(gamma_range.first, gamma_range.second, points);
    result.meta = {alpha, 0.0, az_max, opt.step};

    // One solve per (kind, gamma) covers every requested alpha*z on its grid.
    const std::size_t n_gamma = result.axis.size();
    std::vector<std::vector<double>> t_at(std::size(kSweepKinds) * alphaz_values.size(),
                                          std::vector<double>(n_gamma, 0.0));

    std::vector<std::pair<std::size_t, std::size_t>> jobs; // (kind idx, gamma idx)
    for (std::size_t ki = 0; ki < std::size(kSweepKinds); ++ki)
    {
        for (std::size_t gi = 0; gi < n_gamma; ++gi)
        {
            jobs.emplace_back(ki, gi);
        }
    }
    parallel_for(jobs.size(), opt.threads, [&](std::size_t j) {
        const auto [ki, gi] = jobs[j];
        const ReservoirSpec spec =
            ReservoirSpec::make(kSweepKinds[ki], alpha, result.axis[gi] * alpha);
        SolverConfig cfg;
        cfg.length = az_max / alpha;
        cfg.step = opt.step / alpha;
        const AmplitudeTrace trace = solve_volterra(spec, cfg);
        for (std::size_t ai = 0; ai < alphaz_values.size(); ++ai)
        {
            const double zq = std::min(alphaz_values[ai] / alpha, trace.length());
            t_at[ki * alphaz_values.size() + ai][gi] = std::norm(trace.f_at(zq));
        }
    });

    for (std::size_t ki = 0; ki < std::size(kSweepKinds); ++ki)
    {
        for (std::size_t ai = 0; ai < alphaz_values.size(); ++ai)
        {
            result.curves.emplace_back(az_label(kSweepKinds[ki], alphaz_values[ai]),
                                       std::move(t_at[ki * alphaz_values.size() + ai]));
        }
    }
    return result;
}

SweepResult sweep_blp_vs_gamma(std::pair<double, double> gamma_range, double alphaL,
                               int points, const SweepOptions &opt)
{
    if (!(alphaL > 0.0))
    {
        throw std::invalid_argument("sweep: alphaL must be positive");
    }
    const double alpha = opt.alpha;

    SweepResult result;
    result.axis_name = "gamma_over_alpha";
    result.axis = log_spaced(gamma_range.first, gamma_range.second, points);
    result.meta = {alpha, 0.0, alphaL, opt.step};

    const std::size_t n_gamma = result.axis.size();
    std::vector<std::vector<double>> blp(std::size(kSweepKinds),
                                         std::vector<double>(n_gamma, 0.0));
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t ki = 0; ki < std::size(kSweepKinds); ++ki)
    {
        for (std::size_t gi = 0; gi < n_gamma; ++gi)
        {
            jobs.emplace_back(ki, gi);
        }
    }
    parallel_for(jobs.size(), opt.threads, [&](std::size_t j) {
        const auto [ki, gi] = jobs[j];
        const ReservoirSpec spec =
            ReservoirSpec::make(kSweepKinds[ki], alpha, result.axis[gi] * alpha);
        SolverConfig cfg;
        cfg.length = alphaL / alpha;
        cfg.step = opt.step / alpha;
        blp[ki][gi] = blp_measure(solve_volterra(spec, cfg));
    });

    for (std::size_t ki = 0; ki < std::size(kSweepKinds); ++ki)
    {
        result.curves.emplace_back(to_string(kSweepKinds[ki]), std::move(blp[ki]));
    }
    return result;
}

SweepResult sweep_logf_vs_z(double gamma_over_alpha, double alphaL,
                            const SweepOptions &opt)
{
    if (!(gamma_over_alpha > 0.0))
    {
        throw std::invalid_argument("sweep: gamma/alpha must be positive");
    }
    const double alpha = opt.alpha;
    SolverConfig cfg;
    cfg.length = alphaL / alpha;
    cfg.step = opt.step / alpha;

    SweepResult result;
    result.axis_name = "alpha_z";
    result.meta = {alpha, gamma_over_alpha, alphaL, opt.step};

    std::vector<AmplitudeTrace> traces(std::size(kSweepKinds));
    std::vector<ReservoirSpec> specs;
    for (const ReservoirKind kind : kSweepKinds)
    {
        specs.push_back(ReservoirSpec::make(kind, alpha, gamma_over_alpha * alpha));
    }
    parallel_for(specs.size(), opt.threads,
                 [&](std::size_t i) { traces[i] = solve_volterra(specs[i], cfg); });

    const std::size_t n = traces[0].size();
    result.axis.resize(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        result.axis[k] = alpha * traces[0].z[k];
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < specs.size(); ++i)
    {
        std::vector<double> logf(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            logf[k] = std::log10(std::abs(traces[i].f[k]));
        }
        result.curves.emplace_back(to_string(specs[i].kind), std::move(logf));

        // sparse Markov overlay: log10 e^{-kappa z} at every ~20th of the range
        const double kappa = markov_rate(specs[i]);
        std::vector<double> overlay(n, nan);
        const std::size_t stride = std::max<std::size_t>(1, (n - 1) / 20);
        for (std::size_t k = 0; k < n; k += stride)
        {
            overlay[k] = -kappa * traces[i].z[k] / std::numbers::ln10;
        }
        result.curves.emplace_back(to_string(specs[i].kind) + "_markov",
                                   std::move(overlay));
    }
    return result;
}

bool is_non_decreasing(std::span<const double> values, double tol)
{
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
    {
        if (values[i + 1] < values[i] - tol)
        {
            return false;
        }
    }
    return true;
}

InteriorMinimum find_interior_minimum(std::span<const double> axis,
                                      std::span<const double> values, double tol)
{
    InteriorMinimum best;
    if (values.size() < 3 || axis.size() != values.size())
    {
        return best;
    }
    std::size_t imin = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
    {
        if (values[i] < values[imin])
        {
            imin = i;
        }
    }
    if (imin == 0 || imin + 1 == values.size())
    {
        return best;
    }
    if (!(values[imin] < std::min(values.front(), values.back()) - tol))
    {
        return best;
    }

    // three-point parabolic refinement around the discrete argmin
    const double x0 = axis[imin - 1], x1 = axis[imin], x2 = axis[imin + 1];
    const double y0 = values[imin - 1], y1 = values[imin], y2 = values[imin + 1];
    best.found = true;
    best.axis_value = x1;
    best.value = y1;

    const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) -
                       (x1 - x2) * (x1 - x2) * (y1 - y0);
    const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    if (den != 0.0)
    {
        const double xv = x1 - 0.5 * num / den;
        if (std::isfinite(xv) && xv > x0 && xv < x2)
        {
            // Lagrange interpolant through the three points at the vertex
            const double l0 = (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2));
            const double l1 = (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2));
            const double l2 = (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
            const double yv = y0 * l0 + y1 * l1 + y2 * l2;
            if (yv <= y1)
            {
                best.axis_value = xv;
                best.value = yv;
            }
        }
    }
    return best;
}

} // namespace wavemem
