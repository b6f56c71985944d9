#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavemem/observables.hpp"
#include "wavemem/solver.hpp"
#include "wavemem/sweeps.hpp"

namespace wavemem
{

// Fixed-width numeric formatting (12 significant digits) used in every data
// file so identical runs produce byte-identical output.
std::string format_value(double v);

// Trace CSV: header `z,re_f,im_f,abs_f,T`, one row per grid point.
void write_trace_csv(const std::filesystem::path &path, const AmplitudeTrace &trace);

// Reads a trace CSV back; `spec` is attached to the result (the file itself
// carries no reservoir metadata). Throws std::runtime_error on malformed
// input.
AmplitudeTrace read_trace_csv(const std::filesystem::path &path,
                              const ReservoirSpec &spec);

// Report JSON: {kind, alpha, gamma, L, h, blp, kappa_fit, residual};
// kappa_fit/residual are null when no decay fit was made.
void write_report_json(const std::filesystem::path &path, const ObservableReport &report,
                       const AmplitudeTrace &trace);

// Sweep CSV: columns `kind,axis_value,observable`, curves in stored order.
void write_sweep_csv(const std::filesystem::path &path, const SweepResult &sweep);

// One polyline per series; points_only series render as dots (overlays).
struct SvgSeries
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool points_only = false;
};

// Minimal line chart: axes, ticks, legend. With log_y the y values are
// expected as log10 and tick labels render as powers of ten.
void write_line_chart_svg(const std::filesystem::path &path, const std::string &title,
                          const std::string &x_label, const std::string &y_label,
                          const std::vector<SvgSeries> &series, bool log_y = false);

} // namespace wavemem
