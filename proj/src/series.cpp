#include "wavemem/series.hpp"

#include <cmath>
#include <stdexcept>

namespace wavemem
{
namespace
{

// Kahan-compensated accumulator; the recursion divides factorial-scale
// quantities and the compensation keeps high orders honest.
struct CompensatedSum
{
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> carry{0.0, 0.0};

    void add(std::complex<double> term)
    {
        const std::complex<double> y = term - carry;
        const std::complex<double> t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

AmplitudeSeries amplitude_series(const KernelSeries &kernel, int order)
{
    if (order < 2)
    {
        throw std::invalid_argument("amplitude_series: order must be >= 2");
    }
    if (kernel.order() < order - 2)
    {
        throw std::invalid_argument(
            "amplitude_series: kernel series too short for requested order");
    }

    std::vector<std::complex<double>> f(static_cast<std::size_t>(order) + 1, 0.0);
    f[0] = 1.0;
    f[1] = 0.0;
    for (int n = 1; n < order; ++n)
    {
        // f_{n+1} = -1/(n(n+1)) sum_{j=0}^{n-1} m_j f_{n-1-j} / C(n-1, j)
        CompensatedSum acc;
        double binom = 1.0; // C(n-1, j), updated multiplicatively
        for (int j = 0; j <= n - 1; ++j)
        {
            acc.add(kernel.coeffs[j] * f[n - 1 - j] / binom);
            binom *= static_cast<double>(n - 1 - j) / static_cast<double>(j + 1);
        }
        f[n + 1] = -acc.sum / static_cast<double>(n) / static_cast<double>(n + 1);
    }
    return AmplitudeSeries{std::move(f)};
}

AmplitudeSeries amplitude_series(const ReservoirSpec &spec, int order)
{
    if (order < 2)
    {
        throw std::invalid_argument("amplitude_series: order must be >= 2");
    }
    return amplitude_series(kernel_series(spec, order - 2), order);
}

SeriesValue eval_series(const AmplitudeSeries &series, double z)
{
    std::complex<double> acc = 0.0;
    for (auto it = series.coeffs.rbegin(); it != series.coeffs.rend(); ++it)
    {
        acc = acc * z + *it;
    }
    const double remainder =
        std::abs(series.coeffs.back()) * std::pow(std::abs(z), series.order());
    return SeriesValue{acc, remainder};
}

} // namespace wavemem
