#include "wavemem/cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "wavemem/errors.hpp"
#include "wavemem/io.hpp"
#include "wavemem/observables.hpp"
#include "wavemem/series.hpp"
#include "wavemem/solver.hpp"
#include "wavemem/sweeps.hpp"

namespace wavemem
{
namespace
{

std::string iso8601_utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm = *std::gmtime(&tt);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json config_json(const RunConfig &cfg)
{
    nlohmann::ordered_json j;
    if (cfg.kind)
    {
        j["kind"] = to_string(*cfg.kind);
    }
    j["alpha"] = cfg.alpha;
    j["gamma_over_alpha"] = cfg.gamma_over_alpha;
    j["alphaL"] = cfg.alphaL;
    j["step"] = cfg.step;
    j["detuning_over_alpha"] = cfg.detuning_over_alpha;
    j["order"] = cfg.order;
    j["points"] = cfg.points;
    j["gamma_min"] = cfg.gamma_min;
    j["gamma_max"] = cfg.gamma_max;
    if (!cfg.alphaz_values.empty())
    {
        j["alphaz_values"] = cfg.alphaz_values;
    }
    j["out_dir"] = cfg.out_dir.string();
    nlohmann::ordered_json fmts = nlohmann::ordered_json::array();
    if (cfg.write_csv)
    {
        fmts.push_back("csv");
    }
    if (cfg.write_json)
    {
        fmts.push_back("json");
    }
    if (cfg.write_svg)
    {
        fmts.push_back("svg");
    }
    j["formats"] = fmts;
    return j;
}

void write_manifest(const std::filesystem::path &path, const std::string &command,
                    const RunConfig &cfg, const std::vector<std::string> &outputs)
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["timestamp_utc"] = iso8601_utc_now();
    j["config"] = config_json(cfg);
    j["outputs"] = outputs;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out)
    {
        throw std::runtime_error("failed to write manifest: " + path.string());
    }
    out << j.dump(2) << '\n';
}

int guarded(const std::function<int()> &body)
{
    try
    {
        return body();
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

// Closed-form reference coefficients where the expansion is known in closed
// form: all orders for Hermitian (cosine series), through z^4 otherwise.
std::vector<std::optional<double>> reference_coefficients(const ReservoirSpec &spec,
                                                          int order)
{
    const double a2 = spec.alpha * spec.alpha;
    const double g = spec.gamma;
    std::vector<std::optional<double>> ref(static_cast<std::size_t>(order) + 1);
    if (spec.kind == ReservoirKind::Hermitian)
    {
        double term = 1.0; // (-1)^k alpha^{2k} / (2k)!
        for (int n = 0; n <= order; ++n)
        {
            if (n % 2 == 0)
            {
                ref[n] = term;
                term *= -a2 / ((n + 1) * (n + 2));
            }
            else
            {
                ref[n] = 0.0;
            }
        }
        return ref;
    }
    ref[0] = 1.0;
    if (order >= 1)
    {
        ref[1] = 0.0;
    }
    if (order >= 2)
    {
        ref[2] = -a2 / 2.0;
    }
    if (order >= 3)
    {
        ref[3] = (spec.kind == ReservoirKind::Lorentzian) ? a2 * g / 12.0 : 0.0;
    }
    if (order >= 4)
    {
        switch (spec.kind)
        {
        case ReservoirKind::Lorentzian:
            ref[4] = a2 / 24.0 * (a2 - g * g / 4.0);
            break;
        case ReservoirKind::Gaussian:
            ref[4] = a2 / 24.0 * (a2 + g * g / std::log(256.0));
            break;
        case ReservoirKind::Uniform:
            ref[4] = a2 / 24.0 * (a2 + g * g / 12.0);
            break;
        case ReservoirKind::Hermitian:
            break;
        }
    }
    return ref;
}

} // namespace

ReservoirSpec RunConfig::make_spec() const
{
    if (!kind)
    {
        throw std::invalid_argument("missing reservoir kind");
    }
    return ReservoirSpec::make(*kind, alpha, gamma_over_alpha * alpha,
                               detuning_over_alpha * alpha);
}

int run_solve(const RunConfig &cfg)
{
    return guarded([&] {
        const ReservoirSpec spec = cfg.make_spec();
        SolverConfig scfg;
        scfg.length = cfg.alphaL / cfg.alpha;
        scfg.step = cfg.step / cfg.alpha;

        const AmplitudeTrace trace = solve_volterra(spec, scfg);
        const ObservableReport report = compute_observables(trace);

        std::vector<std::string> outputs;
        const auto out = cfg.out_dir;
        if (cfg.write_csv)
        {
            const auto p = out / "trace.csv";
            write_trace_csv(p, trace);
            outputs.push_back(p.string());
        }
        if (cfg.write_json)
        {
            const auto p = out / "report.json";
            write_report_json(p, report, trace);
            outputs.push_back(p.string());
        }
        if (cfg.write_svg)
        {
            std::vector<double> az(trace.size());
            for (std::size_t k = 0; k < trace.size(); ++k)
            {
                az[k] = cfg.alpha * trace.z[k];
            }
            const auto p = out / "trace.svg";
            write_line_chart_svg(p, "transmission", "alpha z", "T",
                                 {{to_string(spec.kind), az, report.transmission}});
            outputs.push_back(p.string());
        }
        write_manifest(out / "manifest.json", "solve", cfg, outputs);

        std::cout << "solve " << to_string(spec.kind) << ": T(L) = "
                  << format_value(report.transmission.back())
                  << ", blp = " << format_value(report.blp) << '\n';
        return kExitOk;
    });
}

int run_series(const RunConfig &cfg)
{
    return guarded([&] {
        if (cfg.order < 2)
        {
            throw std::invalid_argument("series: order must be >= 2");
        }
        const ReservoirSpec spec = cfg.make_spec();
        const AmplitudeSeries series = amplitude_series(spec, cfg.order);
        const auto refs = reference_coefficients(spec, cfg.order);

        bool all_match = true;
        std::vector<std::string> outputs;
        if (cfg.write_csv)
        {
            const auto p = cfg.out_dir / "series.csv";
            std::filesystem::create_directories(cfg.out_dir);
            std::ofstream out(p, std::ios::trunc);
            if (!out)
            {
                throw std::runtime_error("failed to write " + p.string());
            }
            out << "n,coefficient,reference,match\n";
            for (int n = 0; n <= cfg.order; ++n)
            {
                const double c = series.coeffs[n].real();
                out << n << ',' << format_value(c) << ',';
                if (refs[n])
                {
                    const bool ok = std::abs(c - *refs[n]) <= 1e-12;
                    all_match = all_match && ok;
                    out << format_value(*refs[n]) << ',' << (ok ? "yes" : "NO");
                }
                else
                {
                    out << ',';
                }
                out << '\n';
            }
            outputs.push_back(p.string());
        }
        write_manifest(cfg.out_dir / "manifest.json", "series", cfg, outputs);

        std::cout << "series " << to_string(spec.kind) << " order " << cfg.order << ":";
        for (int n = 0; n <= cfg.order; ++n)
        {
            std::cout << ' ' << format_value(series.coeffs[n].real());
        }
        std::cout << '\n';
        if (!all_match)
        {
            std::cout << "WARNING: coefficients deviate from closed-form references"
                      << " by more than 1e-12\n";
        }
        return kExitOk;
    });
}

int run_sweep(const std::string &figure, const RunConfig &cfg)
{
    return guarded([&] {
        SweepOptions opt;
        opt.alpha = cfg.alpha;
        opt.step = cfg.step;
        opt.threads = cfg.threads;

        SweepResult sweep;
        std::string title, xlabel, ylabel;
        bool log_y = false;
        std::vector<SvgSeries> overlay_series;

        if (figure == "fig2")
        {
            const double g = cfg.gamma_over_alpha > 0.0 ? cfg.gamma_over_alpha : 2.0;
            sweep = sweep_transmission_vs_z(g, cfg.alphaL, opt);
            title = "transmission vs alpha z (gamma/alpha = " + format_value(g) + ")";
            xlabel = "alpha z";
            ylabel = "T";
        }
        else if (figure == "fig3")
        {
            const double g = cfg.gamma_over_alpha > 0.0 ? cfg.gamma_over_alpha : 10.0;
            sweep = sweep_logf_vs_z(g, cfg.alphaL, opt);
            title = "log10 |f| vs alpha z (gamma/alpha = " + format_value(g) + ")";
            xlabel = "alpha z";
            ylabel = "log10 |f|";
            log_y = true;
        }
        else if (figure == "fig4")
        {
            std::vector<double> az = cfg.alphaz_values;
            if (az.empty())
            {
                az = {std::numbers::pi / 4, std::numbers::pi / 2,
                      3 * std::numbers::pi / 4, std::numbers::pi};
            }
            sweep = sweep_transmission_vs_gamma(az, {cfg.gamma_min, cfg.gamma_max},
                                                cfg.points, opt);
            title = "transmission vs gamma/alpha";
            xlabel = "gamma/alpha";
            ylabel = "T";
        }
        else if (figure == "fig5")
        {
            sweep = sweep_blp_vs_gamma({cfg.gamma_min, cfg.gamma_max}, cfg.alphaL,
                                       cfg.points, opt);
            title = "BLP measure vs gamma/alpha (alpha L = " + format_value(cfg.alphaL) + ")";
            xlabel = "gamma/alpha";
            ylabel = "N";
        }
        else
        {
            throw std::invalid_argument("unknown sweep figure: " + figure);
        }

        std::vector<std::string> outputs;
        if (cfg.write_csv)
        {
            const auto p = cfg.out_dir / (figure + ".csv");
            write_sweep_csv(p, sweep);
            outputs.push_back(p.string());
        }
        if (cfg.write_svg)
        {
            std::vector<SvgSeries> series;
            for (const auto &[label, values] : sweep.curves)
            {
                SvgSeries s;
                s.label = label;
                s.x = sweep.axis;
                s.y = values;
                s.points_only = label.ends_with("_markov");
                series.push_back(std::move(s));
            }
            const auto p = cfg.out_dir / (figure + ".svg");
            write_line_chart_svg(p, title, xlabel, ylabel, series, log_y);
            outputs.push_back(p.string());
        }
        write_manifest(cfg.out_dir / "manifest.json", "sweep " + figure, cfg, outputs);

        std::cout << "sweep " << figure << ": " << sweep.curves.size()
                  << " curves over " << sweep.axis.size() << " axis points\n";
        return kExitOk;
    });
}

} // namespace wavemem
