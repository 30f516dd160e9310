// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swi/nodes.hpp"

namespace swi {

inline constexpr int kBenchmarkCount = 10;

namespace detail {

/// Rational bump at -c plus reciprocal-square-root bump at +c.
[[nodiscard]] inline double bump_pair(double x, double c) {
    const double u = x + c;
    const double v = x - c;
    return 1.0 / (1.0 + 1000.0 * u * u) + 1.0 / std::sqrt(1.0 + 1000.0 * v * v);
}

}  // namespace detail

/// The ten benchmark functions on [-1, 1], selected to stress interpolants
/// with features in the center, at the endpoints, and spread throughout.
[[nodiscard]] inline double benchmark(int id, double x) {
    switch (id) {
        case 1: return 1.0 / (1.0 + 25.0 * x * x);
        case 2: return std::tanh(10.0 * x);
        case 3: return detail::bump_pair(x, 0.5);
        case 4: return std::abs(x) + 0.5 * x - x * x;
        case 5: return std::exp(-5.0 * x * x) * std::sin(20.0 * x);
        case 6: return std::sin(50.0 * x) / (1.0 + 25.0 * x * x);
        case 7:
            return std::sin(30.0 * x) / (1.0 + 10.0 * x * x) *
                   std::sin(10.0 / (1.0 + 5.0 * x * x));
        case 8: return std::pow(std::cos(4.0 * std::numbers::pi * x), 19.0);
        case 9: return detail::bump_pair(x, 0.2);
        case 10: return detail::bump_pair(x, 0.8);
        default:
            throw std::invalid_argument("benchmark id must be in 1..10, got " +
                                        std::to_string(id));
    }
}

[[nodiscard]] inline std::string_view benchmark_description(int id) {
    switch (id) {
        case 1: return "Runge function 1/(1+25x^2)";
        case 2: return "steep hyperbolic tangent tanh(10x)";
        case 3: return "two-bump function, centers at +-0.5";
        case 4: return "asymmetric hump with a kink at 0";
        case 5: return "Gaussian-windowed oscillation";
        case 6: return "high-frequency oscillation with rational envelope";
        case 7: return "oscillation with sliding frequency";
        case 8: return "cos^19(4 pi x)";
        case 9: return "two-bump function, centers at +-0.2";
        case 10: return "two-bump function, centers at +-0.8";
        default:
            throw std::invalid_argument("benchmark id must be in 1..10, got " +
                                        std::to_string(id));
    }
}

/// Sample a benchmark at every node of a node set.
[[nodiscard]] inline SampleSet sample_benchmark(int id, NodeSet nodes) {
    std::vector<double> values(nodes.nodes.size());
    for (std::size_t i = 0; i < nodes.nodes.size(); ++i) values[i] = benchmark(id, nodes.nodes[i]);
    return SampleSet{std::move(nodes), std::move(values)};
}

}  // namespace swi
