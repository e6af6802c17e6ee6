// Minimal deterministic SVG line charts: polylines, axes, ticks, and a
// legend. CSV is the authoritative output format; these charts exist so a
// sweep can be eyeballed without a plotting stack. No timestamps, no
// randomness — the bytes depend only on the chart contents.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"

namespace rugosim {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    std::uint64_t seed = 0; // echoed as a comment for provenance
    int width = 720;
    int height = 480;
};

namespace detail {

inline constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
};
inline constexpr int kMaxPointsPerSeries = 1024;

inline double round_sig(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    const double mag = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
    return std::round(v * mag) / mag;
}

inline std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// Render a line chart to an SVG document string.
inline std::string render_chart(const ChartSpec& spec) {
    const double margin_left = 64.0, margin_right = 16.0, margin_top = 40.0, margin_bottom = 48.0;
    const double plot_w = spec.width - margin_left - margin_right;
    const double plot_h = spec.height - margin_top - margin_bottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool any = false;
    for (const Series& s : spec.series)
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!any) {
                x_min = x_max = x;
                y_min = y_max = y;
                any = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    if (x_max - x_min < 1e-12) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max - y_min < 1e-12) {
        const double pad = std::max(0.5, std::abs(y_max) * 0.1);
        y_min -= pad;
        y_max += pad;
    }
    const double y_pad = (y_max - y_min) * 0.05;
    y_min -= y_pad;
    y_max += y_pad;

    const auto x_px = [&](double x) {
        return margin_left + (x - x_min) / (x_max - x_min) * plot_w;
    };
    const auto y_px = [&](double y) {
        return margin_top + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    svg += "<!-- seed=" + std::to_string(spec.seed) + " -->\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_fixed(spec.width / 2.0, 1) +
           "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" +
           detail::xml_escape(spec.title) + "</text>\n";

    // Axes box.
    svg += "<rect x=\"" + format_fixed(margin_left, 1) + "\" y=\"" + format_fixed(margin_top, 1) +
           "\" width=\"" + format_fixed(plot_w, 1) + "\" height=\"" + format_fixed(plot_h, 1) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // Five ticks per axis, values rounded to four significant digits.
    const int ticks = 5;
    for (int i = 0; i < ticks; ++i) {
        const double fx = static_cast<double>(i) / (ticks - 1);
        const double xv = detail::round_sig(x_min + fx * (x_max - x_min), 4);
        const double yv = detail::round_sig(y_min + fx * (y_max - y_min), 4);
        const double px = x_px(x_min + fx * (x_max - x_min));
        const double py = y_px(y_min + fx * (y_max - y_min));
        svg += "<line x1=\"" + format_fixed(px, 1) + "\" y1=\"" +
               format_fixed(margin_top + plot_h, 1) + "\" x2=\"" + format_fixed(px, 1) +
               "\" y2=\"" + format_fixed(margin_top + plot_h + 5, 1) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + format_fixed(px, 1) + "\" y=\"" +
               format_fixed(margin_top + plot_h + 18, 1) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               format_double(xv) + "</text>\n";
        svg += "<line x1=\"" + format_fixed(margin_left - 5, 1) + "\" y1=\"" +
               format_fixed(py, 1) + "\" x2=\"" + format_fixed(margin_left, 1) + "\" y2=\"" +
               format_fixed(py, 1) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + format_fixed(margin_left - 8, 1) + "\" y=\"" +
               format_fixed(py + 4, 1) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               format_double(yv) + "</text>\n";
    }

    // Axis labels.
    svg += "<text x=\"" + format_fixed(margin_left + plot_w / 2.0, 1) + "\" y=\"" +
           format_fixed(spec.height - 10.0, 1) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
           detail::xml_escape(spec.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + format_fixed(margin_top + plot_h / 2.0, 1) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " +
           format_fixed(margin_top + plot_h / 2.0, 1) + ")\">" +
           detail::xml_escape(spec.y_label) + "</text>\n";

    // Curves.
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const Series& s = spec.series[si];
        if (s.points.empty()) continue;
        const char* color = detail::kPalette[si % detail::kPalette.size()];
        std::vector<std::pair<double, double>> pts;
        if (s.points.size() <= detail::kMaxPointsPerSeries) {
            pts = s.points;
        } else {
            const std::size_t stride =
                (s.points.size() + detail::kMaxPointsPerSeries - 1) / detail::kMaxPointsPerSeries;
            for (std::size_t i = 0; i < s.points.size(); i += stride) pts.push_back(s.points[i]);
            if (pts.back() != s.points.back()) pts.push_back(s.points.back());
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg += ' ';
            svg += format_fixed(x_px(pts[i].first), 2) + "," + format_fixed(y_px(pts[i].second), 2);
        }
        svg += "\"/>\n";
    }

    // Legend, top-right inside the plot area.
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const char* color = detail::kPalette[si % detail::kPalette.size()];
        const double ly = margin_top + 14.0 + 16.0 * static_cast<double>(si);
        const double lx = margin_left + plot_w - 150.0;
        svg += "<line x1=\"" + format_fixed(lx, 1) + "\" y1=\"" + format_fixed(ly - 4, 1) +
               "\" x2=\"" + format_fixed(lx + 20, 1) + "\" y2=\"" + format_fixed(ly - 4, 1) +
               "\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + format_fixed(lx + 26, 1) + "\" y=\"" + format_fixed(ly, 1) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" +
               detail::xml_escape(spec.series[si].label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace rugosim
