#include "wavemem/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wavemem
{
namespace
{

void open_or_throw(std::ofstream &out, const std::filesystem::path &path)
{
    if (path.has_parent_path())
    {
        std::filesystem::create_directories(path.parent_path());
    }
    out.open(path, std::ios::trunc);
    if (!out)
    {
        throw std::runtime_error("failed to open for writing: " + path.string());
    }
}

struct Range
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void absorb(double v)
    {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad(double fraction)
    {
        const double span = hi - lo;
        const double margin = span > 0.0 ? fraction * span : std::max(1.0, std::abs(hi));
        lo -= margin;
        hi += margin;
    }
};

std::string format_tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char *kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#7f7f7f"};

} // namespace

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_trace_csv(const std::filesystem::path &path, const AmplitudeTrace &trace)
{
    std::ofstream out;
    open_or_throw(out, path);
    out << "z,re_f,im_f,abs_f,T\n";
    for (std::size_t k = 0; k < trace.size(); ++k)
    {
        const std::complex<double> f = trace.f[k];
        out << format_value(trace.z[k]) << ',' << format_value(f.real()) << ','
            << format_value(f.imag()) << ',' << format_value(std::abs(f)) << ','
            << format_value(std::norm(f)) << '\n';
    }
}

AmplitudeTrace read_trace_csv(const std::filesystem::path &path,
                              const ReservoirSpec &spec)
{
    std::ifstream in(path);
    if (!in)
    {
        throw std::runtime_error("failed to open trace CSV: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind("z,re_f,im_f", 0) != 0)
    {
        throw std::runtime_error("trace CSV missing header row: " + path.string());
    }
    AmplitudeTrace trace;
    trace.spec = spec;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
        {
            continue;
        }
        std::istringstream row(line);
        double z = 0.0, re = 0.0, im = 0.0;
        char c1 = 0, c2 = 0;
        if (!(row >> z >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
        {
            throw std::runtime_error("trace CSV parse error at line " +
                                     std::to_string(line_no));
        }
        trace.z.push_back(z);
        trace.f.emplace_back(re, im);
    }
    if (trace.size() < 2)
    {
        throw std::runtime_error("trace CSV holds fewer than two samples");
    }
    return trace;
}

void write_report_json(const std::filesystem::path &path, const ObservableReport &report,
                       const AmplitudeTrace &trace)
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(trace.spec.kind);
    j["alpha"] = trace.spec.alpha;
    j["gamma"] = trace.spec.gamma;
    j["L"] = trace.length();
    j["h"] = trace.step();
    j["blp"] = report.blp;
    if (report.kappa_fit)
    {
        j["kappa_fit"] = report.kappa_fit->kappa;
        j["residual"] = report.kappa_fit->residual;
        j["fit_window"] = {report.kappa_fit->z_lo, report.kappa_fit->z_hi};
    }
    else
    {
        j["kappa_fit"] = nullptr;
        j["residual"] = nullptr;
    }
    std::ofstream out;
    open_or_throw(out, path);
    out << j.dump(2) << '\n';
}

void write_sweep_csv(const std::filesystem::path &path, const SweepResult &sweep)
{
    std::ofstream out;
    open_or_throw(out, path);
    out << "kind,axis_value,observable\n";
    for (const auto &[label, values] : sweep.curves)
    {
        for (std::size_t i = 0; i < sweep.axis.size() && i < values.size(); ++i)
        {
            if (!std::isfinite(values[i]))
            {
                continue; // sparse overlays leave gaps
            }
            out << label << ',' << format_value(sweep.axis[i]) << ','
                << format_value(values[i]) << '\n';
        }
    }
}

void write_line_chart_svg(const std::filesystem::path &path, const std::string &title,
                          const std::string &x_label, const std::string &y_label,
                          const std::vector<SvgSeries> &series, bool log_y)
{
    constexpr int kWidth = 840;
    constexpr int kHeight = 560;
    constexpr int kLeft = 80;
    constexpr int kRight = 660;
    constexpr int kTop = 50;
    constexpr int kBottom = 500;

    Range xr, yr;
    for (const auto &s : series)
    {
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
            {
                xr.absorb(s.x[i]);
                yr.absorb(s.y[i]);
            }
        }
    }
    if (!(xr.lo < xr.hi))
    {
        xr = {0.0, 1.0};
    }
    if (!(yr.lo < yr.hi))
    {
        yr = {0.0, 1.0};
    }
    yr.pad(0.05);

    const auto px = [&](double x) {
        return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
    };
    const auto py = [&](double y) {
        return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
    };

    std::ofstream out;
    open_or_throw(out, path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-size=\"16\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
        << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";

    constexpr int kTicks = 6;
    for (int t = 0; t <= kTicks; ++t)
    {
        const double fx = xr.lo + (xr.hi - xr.lo) * t / kTicks;
        const double fy = yr.lo + (yr.hi - yr.lo) * t / kTicks;
        const double xpx = px(fx);
        const double ypy = py(fy);
        out << "<line x1=\"" << xpx << "\" y1=\"" << kBottom << "\" x2=\"" << xpx
            << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << xpx << "\" y=\"" << kBottom + 20
            << "\" text-anchor=\"middle\">" << format_tick(fx) << "</text>\n";
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << ypy << "\" x2=\"" << kLeft
            << "\" y2=\"" << ypy << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << ypy + 4
            << "\" text-anchor=\"end\">";
        if (log_y)
        {
            out << "1e" << format_tick(fy);
        }
        else
        {
            out << format_tick(fy);
        }
        out << "</text>\n";
    }
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 42
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"22\" y=\"" << (kTop + kBottom) / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 22 "
        << (kTop + kBottom) / 2 << ")\">" << y_label << "</text>\n";

    std::size_t color_idx = 0;
    int legend_y = kTop + 10;
    for (const auto &s : series)
    {
        const char *color = kPalette[color_idx % (sizeof(kPalette) / sizeof(kPalette[0]))];
        ++color_idx;
        if (s.points_only)
        {
            for (std::size_t i = 0; i < s.x.size(); ++i)
            {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                {
                    continue;
                }
                out << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i])
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        }
        else
        {
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i)
            {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                {
                    continue;
                }
                out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
            }
            out << "\"/>\n";
        }
        out << "<line x1=\"" << kRight + 15 << "\" y1=\"" << legend_y << "\" x2=\""
            << kRight + 40 << "\" y2=\"" << legend_y << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kRight + 46 << "\" y=\"" << legend_y + 4 << "\">"
            << s.label << "</text>\n";
        legend_y += 20;
    }
    out << "</svg>\n";
}

} // namespace wavemem
