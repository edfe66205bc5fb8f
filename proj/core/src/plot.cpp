#include "wsigclust/plot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace wsigclust {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct Frame {
    double x0, x1, y0, y1;

    [[nodiscard]] double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
    [[nodiscard]] double py(double y) const {
        return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom);
    }
};

void widen(double& lo, double& hi) {
    if (hi <= lo) {
        const double pad = lo == 0.0 ? 0.5 : std::abs(lo) * 0.05;
        lo -= pad;
        hi += pad;
    }
}

std::string open_svg(const std::string& title) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2:.1f}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{3}</text>\n",
        kWidth, kHeight, kWidth / 2.0, escape(title));
}

std::string axes(const Frame& f, const std::string& x_label, const std::string& y_label) {
    std::string s;
    const double xb = kHeight - kBottom;
    s += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n", kLeft, xb,
                     kWidth - kRight, xb);
    s += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n", kLeft, kTop,
                     kLeft, xb);
    for (int t = 0; t <= 4; ++t) {
        const double xv = f.x0 + (f.x1 - f.x0) * t / 4.0;
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" "
                         "text-anchor=\"middle\">{:.3g}</text>\n",
                         f.px(xv), xb + 16.0, xv);
        const double yv = f.y0 + (f.y1 - f.y0) * t / 4.0;
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" "
                         "text-anchor=\"end\">{:.3g}</text>\n",
                         kLeft - 6.0, f.py(yv) + 4.0, yv);
    }
    s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
                     "text-anchor=\"middle\">{}</text>\n",
                     (kLeft + kWidth - kRight) / 2.0, kHeight - 12.0, escape(x_label));
    s += fmt::format("<text x=\"16\" y=\"{0:.1f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
                     "transform=\"rotate(-90 16 {0:.1f})\">{1}</text>\n",
                     (kTop + kHeight - kBottom) / 2.0, escape(y_label));
    return s;
}

} // namespace

std::string svg_histogram(std::span<const double> values, std::span<const Marker> markers, const std::string& title,
                          const std::string& x_label, std::size_t bins) {
    if (values.empty()) {
        throw std::invalid_argument("svg_histogram: no values");
    }
    bins = std::max<std::size_t>(bins, 1);
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    for (const auto& m : markers) {
        if (std::isfinite(m.x)) {
            lo = std::min(lo, m.x);
            hi = std::max(hi, m.x);
        }
    }
    widen(lo, hi);
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        const auto b = std::min(bins - 1, static_cast<std::size_t>(std::floor((v - lo) / width)));
        ++counts[b];
    }
    const auto peak = static_cast<double>(*std::max_element(counts.begin(), counts.end()));
    const Frame f{lo, hi, 0.0, peak * 1.15};

    std::string s = open_svg(title);
    for (std::size_t b = 0; b < bins; ++b) {
        if (counts[b] == 0) {
            continue;
        }
        const double xa = f.px(lo + width * static_cast<double>(b));
        const double xb = f.px(lo + width * static_cast<double>(b + 1));
        const double yt = f.py(static_cast<double>(counts[b]));
        s += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"#bbbbbb\" "
                         "stroke=\"#888888\"/>\n",
                         xa, yt, xb - xa, f.py(0.0) - yt);
    }
    double label_y = kTop + 14.0;
    for (const auto& m : markers) {
        if (!std::isfinite(m.x)) {
            continue;
        }
        const double x = f.px(m.x);
        s += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.1f}\" x2=\"{0:.2f}\" y2=\"{2:.1f}\" stroke=\"{3}\" "
                         "stroke-width=\"2\"/>\n",
                         x, kTop, f.py(0.0), escape(m.color));
        const bool right_half = x > kWidth / 2.0;
        s += fmt::format("<text x=\"{:.2f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\" "
                         "text-anchor=\"{}\">{}</text>\n",
                         right_half ? x - 4.0 : x + 4.0, label_y, escape(m.color), right_half ? "end" : "start",
                         escape(m.label));
        label_y += 16.0;
    }
    s += axes(f, x_label, "count");
    s += "</svg>\n";
    return s;
}

std::string svg_count_bars(std::span<const std::size_t> counts, const std::string& title, const std::string& x_label) {
    if (counts.empty()) {
        throw std::invalid_argument("svg_count_bars: no counts");
    }
    const auto peak = static_cast<double>(std::max<std::size_t>(1, *std::max_element(counts.begin(), counts.end())));
    const Frame f{0.5, static_cast<double>(counts.size()) + 0.5, 0.0, peak * 1.1};
    std::string s = open_svg(title);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) {
            continue;
        }
        const double xa = f.px(static_cast<double>(i) + 0.5);
        const double xb = f.px(static_cast<double>(i) + 1.5);
        const double yt = f.py(static_cast<double>(counts[i]));
        s += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"#4c72b0\"/>\n", xa,
                         yt, xb - xa, f.py(0.0) - yt);
    }
    s += axes(f, x_label, "count");
    s += "</svg>\n";
    return s;
}

std::string svg_scatter(std::span<const double> xs, std::span<const double> ys, const std::string& title,
                        const std::string& x_label, const std::string& y_label) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("svg_scatter: need equally sized, nonempty coordinate lists");
    }
    double x0 = *std::min_element(xs.begin(), xs.end());
    double x1 = *std::max_element(xs.begin(), xs.end());
    double y0 = *std::min_element(ys.begin(), ys.end());
    double y1 = *std::max_element(ys.begin(), ys.end());
    widen(x0, x1);
    widen(y0, y1);
    const double xpad = 0.03 * (x1 - x0);
    const double ypad = 0.03 * (y1 - y0);
    const Frame f{x0 - xpad, x1 + xpad, y0 - ypad, y1 + ypad};
    std::string s = open_svg(title);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"#1f77b4\" fill-opacity=\"0.35\"/>\n",
                         f.px(xs[i]), f.py(ys[i]));
    }
    s += axes(f, x_label, y_label);
    s += "</svg>\n";
    return s;
}

} // namespace wsigclust
