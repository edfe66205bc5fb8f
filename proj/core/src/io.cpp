#include "wsigclust/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace wsigclust {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line, std::size_t column) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, fmt::format("field {}: cannot parse '{}' as a number", column, field));
    }
    if (!std::isfinite(value)) {
        throw ParseError(line, fmt::format("field {}: non-finite value '{}'", column, field));
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    return in;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : fmt::format("line {}: {}", line, message)), line_(line) {}

DataMatrix read_csv(std::istream& in, bool header) {
    std::vector<double> flat;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    bool header_pending = header;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty()) {
            continue;
        }
        if (header_pending) {
            header_pending = false;
            continue;
        }
        std::size_t fields = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = content.find(',', start);
            const std::string_view field =
                content.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            flat.push_back(parse_number(field, line_no, fields + 1));
            ++fields;
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (rows == 0) {
            cols = fields;
        } else if (fields != cols) {
            throw ParseError(line_no, fmt::format("expected {} fields, found {}", cols, fields));
        }
        ++rows;
    }
    if (rows < 2) {
        throw ParseError(0, fmt::format("need at least 2 observations, found {}", rows));
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = flat[i * cols + j];
        }
    }
    return DataMatrix(std::move(m));
}

DataMatrix read_csv(const std::filesystem::path& path, bool header) {
    std::ifstream in = open_input(path);
    return read_csv(in, header);
}

std::string format_double(double v) {
    return fmt::format("{}", v);
}

void write_csv(std::ostream& out, const Eigen::MatrixXd& values) {
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(values(i, j));
        }
        out << '\n';
    }
}

Partition read_labels(std::istream& in, std::optional<std::size_t> expected_n) {
    std::vector<std::uint8_t> labels;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty()) {
            continue;
        }
        int value = -1;
        const auto [ptr, ec] = std::from_chars(content.data(), content.data() + content.size(), value);
        if (ec != std::errc() || ptr != content.data() + content.size() || (value != 0 && value != 1)) {
            throw ParseError(line_no, fmt::format("expected label 0 or 1, found '{}'", content));
        }
        labels.push_back(static_cast<std::uint8_t>(value));
    }
    if (expected_n && labels.size() != *expected_n) {
        throw ParseError(0, fmt::format("label file has {} labels but the data has {} observations", labels.size(),
                                        *expected_n));
    }
    try {
        return Partition(std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("invalid labels: ") + e.what());
    }
}

Partition read_labels(const std::filesystem::path& path, std::optional<std::size_t> expected_n) {
    std::ifstream in = open_input(path);
    return read_labels(in, expected_n);
}

void write_labels(std::ostream& out, const Partition& labels) {
    for (auto l : labels.labels()) {
        out << static_cast<int>(l) << '\n';
    }
}

} // namespace wsigclust
