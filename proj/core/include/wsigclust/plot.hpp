#ifndef WSIGCLUST_PLOT_HPP
#define WSIGCLUST_PLOT_HPP

#include <span>
#include <string>
#include <vector>

// Minimal standalone SVG renderings for diagnostics. No external dependencies.

namespace wsigclust {

struct Marker {
    double x = 0.0;
    std::string label;
    std::string color = "#d62728";
};

/// Histogram of `values` (gray bars) with labelled vertical marker lines.
std::string svg_histogram(std::span<const double> values, std::span<const Marker> markers, const std::string& title,
                          const std::string& x_label, std::size_t bins = 30);

/// Bar chart of counts[s - 1] against s = 1..counts.size().
std::string svg_count_bars(std::span<const std::size_t> counts, const std::string& title, const std::string& x_label);

/// Point scatter.
std::string svg_scatter(std::span<const double> xs, std::span<const double> ys, const std::string& title,
                        const std::string& x_label, const std::string& y_label);

} // namespace wsigclust

#endif
