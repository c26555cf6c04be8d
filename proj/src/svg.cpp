#include "vdemask/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vdemask/errors.hpp"

namespace vdemask {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 78.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 46.0;
constexpr double kMarginBottom = 58.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#7f7f7f",
                          "#9467bd", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Tick spacing of the form {1,2,5}*10^k giving a handful of ticks.
double nice_step(double range) {
    if (!(range > 0.0)) return 1.0;
    const double rough = range / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(rough)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (rough <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace

std::string render_line_chart_svg(const ChartSpec& spec) {
    if (spec.series.empty()) {
        throw DomainError("chart needs at least one series");
    }
    double x_min = spec.series[0].points.front().theta_deg;
    double x_max = x_min;
    double y_min = spec.series[0].points.front().pfd;
    double y_max = y_min;
    for (const ChartSeries& s : spec.series) {
        if (s.points.size() < 2) {
            throw DomainError("chart series '" + s.label + "' needs at least 2 points");
        }
        for (const MaskSample& p : s.points) {
            x_min = std::min(x_min, p.theta_deg);
            x_max = std::max(x_max, p.theta_deg);
            y_min = std::min(y_min, p.pfd);
            y_max = std::max(y_max, p.pfd);
        }
    }
    const double x_step = nice_step(x_max - x_min);
    const double y_step = nice_step(y_max - y_min);
    y_min = std::floor(y_min / y_step) * y_step;
    y_max = std::ceil(y_max / y_step) * y_step;
    if (y_max == y_min) y_max = y_min + y_step;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto map_x = [&](double x) {
        return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
    };
    const auto map_y = [&](double y) {
        return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"26\" font-family=\"sans-serif\" "
        << "font-size=\"16\" text-anchor=\"middle\">" << escape(spec.title)
        << "</text>\n";

    // gridlines and ticks
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double x = x_min; x <= x_max + 1e-9; x += x_step) {
        const double px = map_x(std::min(x, x_max));
        svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(kMarginTop) << "\" x2=\""
            << num(px) << "\" y2=\"" << num(kMarginTop + plot_h)
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << num(px) << "\" y=\"" << num(kMarginTop + plot_h + 18)
            << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    for (double y = y_min; y <= y_max + 1e-9; y += y_step) {
        const double py = map_y(y);
        svg << "<line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(py) << "\" x2=\""
            << num(kMarginLeft + plot_w) << "\" y2=\"" << num(py)
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(py + 4)
            << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }
    svg << "</g>\n";

    // axes
    svg << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop)
        << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h)
        << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\""
        << num(kHeight - 14)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << escape(spec.x_label) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << num(kMarginTop + plot_h / 2)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 20 " << num(kMarginTop + plot_h / 2) << ")\">"
        << escape(spec.y_label) << "</text>\n";

    // series
    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\" points=\"";
        for (const MaskSample& p : spec.series[i].points) {
            svg << num(map_x(p.theta_deg)) << "," << num(map_y(p.pfd)) << " ";
        }
        svg << "\"/>\n";
    }

    // legend
    const double legend_x = kMarginLeft + plot_w - 270.0;
    double legend_y = kMarginTop + 14.0;
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        svg << "<line x1=\"" << num(legend_x) << "\" y1=\"" << num(legend_y - 4)
            << "\" x2=\"" << num(legend_x + 26) << "\" y2=\"" << num(legend_y - 4)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << num(legend_x + 32) << "\" y=\"" << num(legend_y)
            << "\">" << escape(spec.series[i].label) << "</text>\n";
        legend_y += 18.0;
    }
    svg << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace vdemask
