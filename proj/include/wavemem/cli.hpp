#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavemem/reservoir.hpp"

namespace wavemem
{

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

// Resolved command-line configuration. All lengths are expressed in units
// of 1/alpha: gamma and detuning as ratios to alpha, the propagation length
// as alphaL and the grid step in the same scale.
struct RunConfig
{
    std::optional<ReservoirKind> kind;
    double alpha = 1.0;
    double gamma_over_alpha = 0.0;
    double alphaL = 1.0;
    double step = 1e-3; // in units of 1/alpha
    double detuning_over_alpha = 0.0;
    int order = 8;    // series subcommand
    int points = 40;  // sweep grids
    double gamma_min = 0.2;
    double gamma_max = 50.0;
    std::vector<double> alphaz_values; // fig4; empty = pi/4, pi/2, 3pi/4, pi
    std::filesystem::path out_dir = "out";
    bool write_csv = true;
    bool write_json = true;
    bool write_svg = false;
    unsigned threads = 0;

    ReservoirSpec make_spec() const; // requires kind to be set
};

// Subcommand drivers; each writes its data files plus a manifest echoing
// the resolved configuration, and returns one of the exit codes above.
int run_solve(const RunConfig &cfg);
int run_series(const RunConfig &cfg);
int run_sweep(const std::string &figure, const RunConfig &cfg);

} // namespace wavemem
