#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wavemem/reservoir.hpp"

using namespace wavemem;

namespace
{

// Composite-Simpson quadrature, test-side oracle for normalization and
// Fourier integrals.
double simpson(const std::function<double(double)> &fn, double a, double b, int n)
{
    if (n % 2 != 0)
    {
        ++n;
    }
    const double h = (b - a) / n;
    double acc = fn(a) + fn(b);
    for (int i = 1; i < n; ++i)
    {
        acc += fn(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

// Bisection for the half-maximum crossing of a unimodal peak.
double half_max_crossing(const ReservoirSpec &spec, double lo, double hi, double half)
{
    for (int it = 0; it < 200; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (pdf(spec, mid) > half)
        {
            lo = mid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ReservoirSpec spec_of(ReservoirKind kind, double alpha, double gamma)
{
    return ReservoirSpec::make(kind, alpha, gamma);
}

} // namespace

TEST_CASE("spec validation and gamma = 0 normalization")
{
    CHECK_THROWS_AS(ReservoirSpec::make(ReservoirKind::Lorentzian, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReservoirSpec::make(ReservoirKind::Lorentzian, -1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReservoirSpec::make(ReservoirKind::Gaussian, 1.0, -0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReservoirSpec::make(ReservoirKind::Hermitian, 1.0, 2.0),
                    std::invalid_argument);

    // gamma = 0 collapses every kind to the Hermitian single mode
    for (const auto kind : {ReservoirKind::Lorentzian, ReservoirKind::Gaussian,
                            ReservoirKind::Uniform, ReservoirKind::Hermitian})
    {
        const ReservoirSpec s = ReservoirSpec::make(kind, 1.0, 0.0);
        CHECK(s.kind == ReservoirKind::Hermitian);
    }
}

TEST_CASE("kind round trips through names")
{
    for (const auto kind : {ReservoirKind::Lorentzian, ReservoirKind::Gaussian,
                            ReservoirKind::Uniform, ReservoirKind::Hermitian})
    {
        CHECK(reservoir_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(reservoir_kind_from_string("boxcar"), std::invalid_argument);
}

TEST_CASE("pdf peak values at gamma = 2")
{
    CHECK(pdf(spec_of(ReservoirKind::Uniform, 1.0, 2.0), 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pdf(spec_of(ReservoirKind::Lorentzian, 1.0, 2.0), 0.0) ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    // 1/(sigma sqrt(2 pi)) with sigma = 2/sqrt(ln 256)
    CHECK(pdf(spec_of(ReservoirKind::Gaussian, 1.0, 2.0), 0.0) ==
          doctest::Approx(0.46971863934982567).epsilon(1e-13));

    CHECK_THROWS_AS(pdf(ReservoirSpec::make(ReservoirKind::Hermitian, 1.0, 0.0), 0.0),
                    std::domain_error);
}

TEST_CASE("pdf integrates to one over the truncated support")
{
    for (const auto kind :
         {ReservoirKind::Lorentzian, ReservoirKind::Gaussian, ReservoirKind::Uniform})
    {
        for (const double gamma : {0.5, 2.0, 10.0})
        {
            const ReservoirSpec spec = spec_of(kind, 1.0, gamma);
            double mass = 0.0;
            if (kind == ReservoirKind::Uniform)
            {
                mass = simpson([&](double b) { return pdf(spec, b); },
                               -spec.uniform_halfwidth(), spec.uniform_halfwidth(), 2000);
                CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
            }
            else
            {
                mass = simpson([&](double b) { return pdf(spec, b); }, -50.0 * gamma,
                               50.0 * gamma, 400000);
                // Lorentzian tails beyond +-50 gamma hold ~1/(50 pi) per cent
                const double expected =
                    kind == ReservoirKind::Lorentzian
                        ? (2.0 / std::numbers::pi) * std::atan(100.0)
                        : 1.0;
                CHECK(mass == doctest::Approx(expected).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("numerical FWHM of the pdf equals gamma")
{
    for (const auto kind :
         {ReservoirKind::Lorentzian, ReservoirKind::Gaussian, ReservoirKind::Uniform})
    {
        for (const double gamma : {0.7, 2.0, 13.0})
        {
            const ReservoirSpec spec = spec_of(kind, 1.0, gamma);
            const double half = pdf(spec, 0.0) / 2.0;
            // Uniform: the density is flat, so the half-maximum crossing is
            // the support edge itself.
            const double right =
                half_max_crossing(spec, 0.0, 2.0 * gamma + 1.0, half);
            const double left =
                -half_max_crossing(spec, 0.0, 2.0 * gamma + 1.0, half);
            CHECK(right - left == doctest::Approx(gamma).epsilon(1e-6));
        }
    }
}

TEST_CASE("autocorrelation closed forms")
{
    for (const auto kind :
         {ReservoirKind::Lorentzian, ReservoirKind::Gaussian, ReservoirKind::Uniform})
    {
        const ReservoirSpec spec = spec_of(kind, 1.0, 2.0);
        CHECK(autocorrelation(spec, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(autocorrelation(spec, 0.0).imag() == 0.0);
    }
    // sinc zero at gamma z / 2 = pi
    CHECK(autocorrelation(spec_of(ReservoirKind::Uniform, 1.0, 2.0), std::numbers::pi)
              .real() == doctest::Approx(0.0).epsilon(1e-15));
    // exp(-4 / ln 65536)
    CHECK(autocorrelation(spec_of(ReservoirKind::Gaussian, 1.0, 2.0), 1.0).real() ==
          doctest::Approx(0.69720641783504036).epsilon(1e-13));
    CHECK(autocorrelation(ReservoirSpec::make(ReservoirKind::Hermitian, 2.0, 0.0), 5.0)
              .real() == doctest::Approx(4.0).epsilon(1e-14));

    CHECK_THROWS_AS(autocorrelation(spec_of(ReservoirKind::Uniform, 1.0, 2.0), -0.1),
                    std::domain_error);
}

TEST_CASE("autocorrelation matches the Fourier integral of the pdf")
{
    // alpha^2 int rho(beta') e^{-i(beta' - beta) z} dbeta', evaluated by
    // quadrature over the truncated support.
    for (const auto kind :
         {ReservoirKind::Lorentzian, ReservoirKind::Gaussian, ReservoirKind::Uniform})
    {
        const double gamma = 2.0;
        const ReservoirSpec spec = spec_of(kind, 1.3, gamma);
        const double window =
            kind == ReservoirKind::Uniform ? spec.uniform_halfwidth() : 50.0 * gamma;
        for (const double z : {0.3, 1.0, 4.0, 10.0})
        {
            const double re = simpson(
                [&](double b) { return pdf(spec, b) * std::cos(b * z); }, -window,
                window, 600000);
            const double im = simpson(
                [&](double b) { return pdf(spec, b) * std::sin(b * z); }, -window,
                window, 600000);
            const std::complex<double> via_integral =
                spec.alpha * spec.alpha * std::complex<double>(re, -im);
            const std::complex<double> closed = autocorrelation(spec, z);
            CHECK(std::abs(closed - via_integral) < 1e-6);
        }
    }
}

TEST_CASE("detuning multiplies the resonant kernel by a phase")
{
    const ReservoirSpec resonant = spec_of(ReservoirKind::Gaussian, 1.0, 2.0);
    const ReservoirSpec detuned =
        ReservoirSpec::make(ReservoirKind::Gaussian, 1.0, 2.0, 0.7);
    for (const double z : {0.0, 0.5, 2.0})
    {
        const std::complex<double> expected =
            autocorrelation(resonant, z) * std::polar(1.0, 0.7 * z);
        CHECK(std::abs(autocorrelation(detuned, z) - expected) < 1e-14);
    }
}

TEST_CASE("kernel series coefficients")
{
    const KernelSeries lorentz = kernel_series(spec_of(ReservoirKind::Lorentzian, 1.0, 2.0), 2);
    REQUIRE(lorentz.order() == 2);
    CHECK(lorentz.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lorentz.coeffs[1].real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(lorentz.coeffs[2].real() == doctest::Approx(0.5).epsilon(1e-15));

    const KernelSeries uniform = kernel_series(spec_of(ReservoirKind::Uniform, 1.0, 2.0), 2);
    CHECK(uniform.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(uniform.coeffs[1].real() == 0.0);
    CHECK(uniform.coeffs[2].real() == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));

    const KernelSeries hermitian =
        kernel_series(ReservoirSpec::make(ReservoirKind::Hermitian, 1.0, 0.0), 6);
    CHECK(hermitian.coeffs[0].real() == 1.0);
    for (int j = 1; j <= 6; ++j)
    {
        CHECK(hermitian.coeffs[j] == std::complex<double>(0.0, 0.0));
    }

    CHECK_THROWS_AS(kernel_series(spec_of(ReservoirKind::Uniform, 1.0, 2.0), -1),
                    std::invalid_argument);
}

TEST_CASE("kernel series partial sums approach the closed form near zero")
{
    for (const auto kind :
         {ReservoirKind::Lorentzian, ReservoirKind::Gaussian, ReservoirKind::Uniform})
    {
        const ReservoirSpec spec = spec_of(kind, 1.0, 2.0);
        const int order = 12;
        const KernelSeries ks = kernel_series(spec, order);
        for (const double z : {0.05, 0.2, 0.5}) // z * gamma <= 1
        {
            std::complex<double> sum = 0.0;
            double zn = 1.0;
            for (int j = 0; j <= order; ++j)
            {
                sum += ks.coeffs[j] * zn;
                zn *= z;
            }
            // remainder bounded by the magnitude of the next even term
            const double remainder = std::pow(z * spec.gamma, order + 1);
            CHECK(std::abs(sum - autocorrelation(spec, z)) <= remainder + 1e-12);
        }
    }
}

TEST_CASE("markov rates and their ordering")
{
    CHECK(markov_rate(spec_of(ReservoirKind::Lorentzian, 1.0, 10.0)) ==
          doctest::Approx(0.2).epsilon(1e-14));
    CHECK(markov_rate(spec_of(ReservoirKind::Uniform, 1.0, 10.0)) ==
          doctest::Approx(std::numbers::pi / 10.0).epsilon(1e-14));
    // sqrt(pi ln 16) / 10
    CHECK(markov_rate(spec_of(ReservoirKind::Gaussian, 1.0, 10.0)) ==
          doctest::Approx(0.29513292532712118).epsilon(1e-13));

    for (const double gamma : {0.5, 3.0, 25.0})
    {
        const double l = markov_rate(spec_of(ReservoirKind::Lorentzian, 1.7, gamma));
        const double g = markov_rate(spec_of(ReservoirKind::Gaussian, 1.7, gamma));
        const double u = markov_rate(spec_of(ReservoirKind::Uniform, 1.7, gamma));
        CHECK(u > g);
        CHECK(g > l);
    }

    CHECK_THROWS_AS(markov_rate(ReservoirSpec::make(ReservoirKind::Hermitian, 1.0, 0.0)),
                    std::domain_error);
}
