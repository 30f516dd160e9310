// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swi {

inline constexpr int kDefaultGridPoints = 10001;

/// Equispaced evaluation grid on [-1, 1], symmetric by construction. An odd
/// point count keeps 0 on the grid; counts of the form 4m + 1 (the default
/// 10001 included) also place +-0.5 on the grid, which the partitioned
/// cumulative error requires.
class EvalGrid {
public:
    explicit EvalGrid(int point_count = kDefaultGridPoints) {
        if (point_count < 3 || point_count % 2 == 0)
            throw std::invalid_argument("grid point count must be odd and at least 3");
        const int last = point_count - 1;
        pts_.resize(static_cast<std::size_t>(point_count));
        for (int j = 0; j <= last; ++j) pts_[j] = -1.0 + 2.0 * j / last;
        for (int j = 0; j < last / 2; ++j) pts_[last - j] = -pts_[j];
        pts_[last / 2] = 0.0;
    }

    [[nodiscard]] std::span<const double> points() const { return pts_; }
    [[nodiscard]] int size() const { return static_cast<int>(pts_.size()); }
    [[nodiscard]] double spacing() const { return 2.0 / (size() - 1); }
    [[nodiscard]] bool splits_at_half() const { return (size() - 1) % 4 == 0; }

private:
    std::vector<double> pts_;
};

/// Error summary of an interpolant against a target over a grid.
struct ErrorReport {
    double max_error = 0.0;
    double cumulative_error = 0.0;
    std::optional<double> endpoint_part;
    std::optional<double> central_part;
    int grid_size = 0;
};

/// Max, cumulative, and (optionally) partitioned errors in a single pass.
/// The quadrature is the composite trapezoid rule accumulated strip by strip,
/// left to right, so results do not depend on evaluation parallelism.
template <class F, class Phi>
[[nodiscard]] ErrorReport error_report(F&& f, Phi&& phi, const EvalGrid& grid,
                                       bool with_partition = false) {
    if (with_partition && !grid.splits_at_half())
        throw std::invalid_argument("partitioned error needs a grid containing +-0.5 "
                                    "(point count of the form 4m + 1)");
    const auto pts = grid.points();
    std::vector<double> err(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) err[j] = std::abs(f(pts[j]) - phi(pts[j]));

    ErrorReport report;
    report.grid_size = grid.size();
    const double h = grid.spacing();
    double endpoint = 0.0;
    double central = 0.0;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        report.max_error = std::max(report.max_error, err[j]);
        const double strip = 0.5 * h * (err[j] + err[j + 1]);
        report.cumulative_error += strip;
        if (with_partition) {
            // +-0.5 lie on the grid, so every strip is wholly in one region.
            if (pts[j] >= -0.5 && pts[j + 1] <= 0.5)
                central += strip;
            else
                endpoint += strip;
        }
    }
    report.max_error = std::max(report.max_error, err.back());
    if (with_partition) {
        report.endpoint_part = endpoint;
        report.central_part = central;
    }
    return report;
}

template <class F, class Phi>
[[nodiscard]] double max_error(F&& f, Phi&& phi, const EvalGrid& grid) {
    return error_report(std::forward<F>(f), std::forward<Phi>(phi), grid).max_error;
}

template <class F, class Phi>
[[nodiscard]] double cumulative_error(F&& f, Phi&& phi, const EvalGrid& grid) {
    return error_report(std::forward<F>(f), std::forward<Phi>(phi), grid).cumulative_error;
}

/// Cumulative error split into the endpoint regions [-1,-0.5] u [0.5,1] and
/// the central region [-0.5,0.5]. The two parts sum to the cumulative error.
template <class F, class Phi>
[[nodiscard]] std::pair<double, double> partitioned_cumulative_error(F&& f, Phi&& phi,
                                                                     const EvalGrid& grid) {
    const auto report = error_report(std::forward<F>(f), std::forward<Phi>(phi), grid, true);
    return {*report.endpoint_part, *report.central_part};
}

/// Round to the given number of significant decimal digits, half away from
/// zero. Models data recorded with limited measurement precision.
[[nodiscard]] inline double round_to_significant(double y, int digits) {
    if (digits < 1) throw std::invalid_argument("significant digits must be at least 1");
    if (y == 0.0 || !std::isfinite(y)) return y;
    const int exp10 = static_cast<int>(std::floor(std::log10(std::abs(y))));
    const double scale = std::pow(10.0, digits - 1 - exp10);
    const double scaled = y * scale;
    if (!std::isfinite(scale) || !std::isfinite(scaled)) return y;
    return std::round(scaled) / scale;
}

}  // namespace swi
