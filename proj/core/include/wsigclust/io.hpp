#ifndef WSIGCLUST_IO_HPP
#define WSIGCLUST_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "wsigclust/core.hpp"

namespace wsigclust {

/// Malformed input file. `line()` is 1-based, or 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/**
 * Comma-separated numeric data, one observation per row. Blank lines are
 * skipped. With `header`, the first nonblank line is discarded.
 */
DataMatrix read_csv(std::istream& in, bool header);
DataMatrix read_csv(const std::filesystem::path& path, bool header);

/// Full-precision comma-separated rows.
void write_csv(std::ostream& out, const Eigen::MatrixXd& values);

/**
 * One integer label (0 or 1) per line. When `expected_n` is given the line
 * count must match it.
 */
Partition read_labels(std::istream& in, std::optional<std::size_t> expected_n = std::nullopt);
Partition read_labels(const std::filesystem::path& path, std::optional<std::size_t> expected_n = std::nullopt);

void write_labels(std::ostream& out, const Partition& labels);

/// Shortest round-tripping decimal form of `v`.
std::string format_double(double v);

} // namespace wsigclust

#endif
