#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gsc::plot {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr int kLeft = 70;
constexpr int kRight = 24;
constexpr int kTop = 40;
constexpr int kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string tick_label(double v, bool log_axis) {
    if (log_axis) {
        // log ticks land on integers; label as a power of ten
        char buf[32];
        std::snprintf(buf, sizeof(buf), "1e%d", static_cast<int>(std::lround(v)));
        return buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v + 0.0);  // +0.0 folds -0 into 0
    return buf;
}

struct Ticks {
    std::vector<double> values;
    double lo = 0.0;
    double hi = 1.0;
};

// round tick step 1/2/5 * 10^m covering [lo, hi] with ~target intervals
Ticks nice_ticks(double lo, double hi, int target, bool integer_step) {
    if (!(hi > lo)) {
        const double pad = std::max(1.0, std::fabs(lo));
        lo -= 0.5 * pad;
        hi += 0.5 * pad;
    }
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) {
            step = mag * mult;
            break;
        }
    }
    if (integer_step) step = std::max(1.0, std::round(step));
    Ticks t;
    t.lo = std::floor(lo / step) * step;
    t.hi = std::ceil(hi / step) * step;
    for (double v = t.lo; v <= t.hi + 0.5 * step; v += step) {
        // snap near-zero accumulation noise to exact zero
        t.values.push_back(std::fabs(v) < 1e-12 * step ? 0.0 : v);
    }
    return t;
}

}  // namespace

std::string render_line_plot(const std::vector<Series>& series, const PlotOptions& opts) {
    // collect plottable points
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto usable = [&](double y) { return std::isfinite(y) && (!opts.log_y || y > 0.0); };
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !usable(s.ys[i])) continue;
            const double y = opts.log_y ? std::log10(s.ys[i]) : s.ys[i];
            xmin = std::min(xmin, s.xs[i]);
            xmax = std::max(xmax, s.xs[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    const bool empty = !(xmin <= xmax);
    if (empty) {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }

    const Ticks tx = nice_ticks(xmin, xmax, 8, false);
    const Ticks ty = nice_ticks(ymin, ymax, 6, opts.log_y);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - tx.lo) / (tx.hi - tx.lo) * plot_w; };
    auto py = [&](double y) { return kTop + plot_h - (y - ty.lo) / (ty.hi - ty.lo) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    if (!opts.title.empty())
        svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"16\">" << opts.title << "</text>\n";

    // grid and ticks
    svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double v : tx.values)
        svg << "<line x1=\"" << fmt(px(v)) << "\" y1=\"" << kTop << "\" x2=\"" << fmt(px(v))
            << "\" y2=\"" << kTop + static_cast<int>(plot_h) << "\"/>\n";
    for (double v : ty.values)
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(py(v)) << "\" x2=\""
            << kLeft + static_cast<int>(plot_w) << "\" y2=\"" << fmt(py(v)) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (double v : tx.values)
        svg << "<text x=\"" << fmt(px(v)) << "\" y=\"" << kHeight - kBottom + 18
            << "\" text-anchor=\"middle\">" << tick_label(v, false) << "</text>\n";
    for (double v : ty.values)
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py(v) + 4.0)
            << "\" text-anchor=\"end\">" << tick_label(v, opts.log_y) << "</text>\n";
    if (!opts.xlabel.empty())
        svg << "<text x=\"" << kLeft + static_cast<int>(plot_w) / 2 << "\" y=\""
            << kHeight - 10 << "\" text-anchor=\"middle\">" << opts.xlabel << "</text>\n";
    if (!opts.ylabel.empty())
        svg << "<text x=\"16\" y=\"" << kTop + static_cast<int>(plot_h) / 2
            << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
            << kTop + static_cast<int>(plot_h) / 2 << ")\">" << opts.ylabel << "</text>\n";
    svg << "</g>\n";

    // frame
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << static_cast<int>(plot_w)
        << "\" height=\"" << static_cast<int>(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    if (empty) {
        svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
            << "fill=\"#666666\">no plottable data</text>\n";
        svg << "</svg>\n";
        return svg.str();
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = kPalette[si % kPaletteSize];
        std::vector<std::pair<double, double>> seg;
        auto flush = [&]() {
            if (seg.size() >= 2) {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t i = 0; i < seg.size(); ++i) {
                    if (i) svg << ' ';
                    svg << fmt(seg[i].first) << ',' << fmt(seg[i].second);
                }
                svg << "\"/>\n";
            } else if (seg.size() == 1) {
                svg << "<circle cx=\"" << fmt(seg[0].first) << "\" cy=\"" << fmt(seg[0].second)
                    << "\" r=\"2\" fill=\"" << color << "\"/>\n";
            }
            seg.clear();
        };
        for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !usable(s.ys[i])) {
                flush();
                continue;
            }
            const double y = opts.log_y ? std::log10(s.ys[i]) : s.ys[i];
            seg.emplace_back(px(s.xs[i]), py(y));
        }
        flush();
    }

    // legend, only when it stays readable
    if (series.size() >= 2 && series.size() <= 12) {
        int y = kTop + 14;
        for (std::size_t si = 0; si < series.size(); ++si) {
            if (series[si].label.empty()) continue;
            const char* color = kPalette[si % kPaletteSize];
            svg << "<rect x=\"" << kWidth - kRight - 110 << "\" y=\"" << y - 9
                << "\" width=\"14\" height=\"3\" fill=\"" << color << "\"/>\n";
            svg << "<text x=\"" << kWidth - kRight - 92 << "\" y=\"" << y
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">"
                << series[si].label << "</text>\n";
            y += 16;
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gsc::plot
