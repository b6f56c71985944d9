#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavemem/cli.hpp"

namespace
{

void add_common_flags(CLI::App *cmd, wavemem::RunConfig &cfg, std::string &kind_name)
{
    cmd->add_option("--kind", kind_name,
                    "reservoir kind: lorentzian | gaussian | uniform | hermitian");
    cmd->add_option("--alpha", cfg.alpha, "coupling strength alpha (sets the length scale)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gamma", cfg.gamma_over_alpha, "FWHM as a ratio gamma/alpha")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--alphaL", cfg.alphaL, "propagation length as alpha*L")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--step", cfg.step, "grid step in units of 1/alpha (default 1e-3)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--detuning", cfg.detuning_over_alpha,
                    "guide detuning as a ratio Delta/alpha");
    cmd->add_option("--out", cfg.out_dir, "output directory (default out/)");
    cmd->add_option("--format", [&cfg](const std::vector<std::string> &values) {
            cfg.write_csv = cfg.write_json = cfg.write_svg = false;
            for (const auto &v : values)
            {
                if (v == "csv")
                {
                    cfg.write_csv = true;
                }
                else if (v == "json")
                {
                    cfg.write_json = true;
                }
                else if (v == "svg")
                {
                    cfg.write_svg = true;
                }
                else
                {
                    return false;
                }
            }
            return true;
        },
        "output formats: csv json svg (default: csv json)");
    cmd->add_option("--threads", cfg.threads, "worker threads for sweeps (0 = auto)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"waveguide amplitude dynamics with structured reservoir memory"};
    app.require_subcommand(1);

    wavemem::RunConfig cfg;
    std::string kind_name;

    CLI::App *solve = app.add_subcommand("solve", "integrate f(z) and report observables");
    add_common_flags(solve, cfg, kind_name);

    CLI::App *series = app.add_subcommand("series", "print amplitude Taylor coefficients");
    add_common_flags(series, cfg, kind_name);
    series->add_option("--order", cfg.order, "series order (default 8)")
        ->check(CLI::Range(2, 64));

    CLI::App *sweep = app.add_subcommand("sweep", "parameter sweeps for figure reproduction");
    std::string figure;
    sweep->add_option("figure", figure, "one of: fig2 fig3 fig4 fig5")->required();
    add_common_flags(sweep, cfg, kind_name);
    auto *alphal_opt = sweep->get_option("--alphaL");
    sweep->add_option("--points", cfg.points, "gamma grid resolution (default 40)")
        ->check(CLI::Range(2, 4096));
    sweep->add_option("--gamma-min", cfg.gamma_min, "lower gamma/alpha bound (default 0.2)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--gamma-max", cfg.gamma_max, "upper gamma/alpha bound (default 50)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--alphaz", cfg.alphaz_values,
                      "alpha*z evaluation points for fig4 (default pi/4 pi/2 3pi/4 pi)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e) == 0 ? wavemem::kExitOk : wavemem::kExitUsage;
    }

    try
    {
        if (!kind_name.empty())
        {
            cfg.kind = wavemem::reservoir_kind_from_string(kind_name);
        }

        if (solve->parsed())
        {
            if (!cfg.kind)
            {
                std::cerr << "error: solve requires --kind\n";
                return wavemem::kExitUsage;
            }
            return wavemem::run_solve(cfg);
        }
        if (series->parsed())
        {
            if (!cfg.kind)
            {
                std::cerr << "error: series requires --kind\n";
                return wavemem::kExitUsage;
            }
            return wavemem::run_series(cfg);
        }
        if (sweep->parsed())
        {
            if (alphal_opt->count() == 0)
            {
                // per-figure defaults: propagation window for the z-resolved
                // figures, the long BLP run for fig5
                cfg.alphaL = (figure == "fig5") ? 100.0 : 10.0;
            }
            return wavemem::run_sweep(figure, cfg);
        }
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return wavemem::kExitUsage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return wavemem::kExitNumerical;
    }
    return wavemem::kExitUsage;
}
