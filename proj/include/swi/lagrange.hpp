// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swi/nodes.hpp"

namespace swi {

enum class WeightProvenance { Generic, ClosedFormCheb1, ClosedFormCheb2 };

/// Barycentric weights w_i for a node set of degree n. Any common nonzero
/// factor may be dropped: the barycentric quotient is scale invariant.
struct BarycentricWeights {
    int n;
    std::vector<double> weights;
    WeightProvenance provenance;
};

/// Thrown when the weight products over- or underflow to a nonfinite or zero
/// value. Equidistant node sets do this once n reaches the several hundreds;
/// the library fails loudly instead of returning garbage.
class NonfiniteWeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double kUlp1 = 2.220446049250313e-16;  // ulp(1) = 2^-52

/// Node-hit rule: x counts as coinciding with xi when the gap is within a few
/// rounding units. Resolves the removable singularity of barycentric forms.
[[nodiscard]] inline bool node_hit(double x, double xi) {
    return std::abs(x - xi) <= 4.0 * kUlp1 * std::max(1.0, std::abs(x));
}

inline void require_distinct(std::span<const double> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("degenerate node set: duplicate abscissae");
}

inline void require_matching_lengths(std::size_t nodes, std::size_t values) {
    if (nodes != values)
        throw std::invalid_argument("node and value counts differ: " + std::to_string(nodes) +
                                    " vs " + std::to_string(values));
}

}  // namespace detail

/// Classical Lagrange form, O(n^2) per evaluation. Kept as a test oracle and
/// for demonstrations of the equidistant blow-up; not a production path.
[[nodiscard]] inline double classical_lagrange_eval(const SampleSet& samples, double x) {
    const auto& xs = samples.nodes.nodes;
    const auto& ys = samples.values;
    detail::require_matching_lengths(xs.size(), ys.size());
    if (xs.size() < 2) throw std::invalid_argument("need at least two sample points");
    detail::require_distinct(xs);

    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double basis = 1.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= (x - xs[j]) / (xs[i] - xs[j]);
        }
        acc += ys[i] * basis;
    }
    return acc;
}

/// w_i = 1 / prod_{j != i} (x_i - x_j) for arbitrary distinct nodes.
[[nodiscard]] inline BarycentricWeights generic_barycentric_weights(const NodeSet& nodes) {
    const auto& xs = nodes.nodes;
    if (xs.size() < 2) throw std::invalid_argument("need at least two nodes");
    detail::require_distinct(xs);

    std::vector<double> w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j != i) prod *= xs[i] - xs[j];
        }
        w[i] = 1.0 / prod;
        if (!std::isfinite(w[i]) || w[i] == 0.0)
            throw NonfiniteWeightError("barycentric weight " + std::to_string(i) +
                                       " is not finite and nonzero; node set is too "
                                       "ill-conditioned for generic weights");
    }
    return BarycentricWeights{nodes.n, std::move(w), WeightProvenance::Generic};
}

/// Closed-form weights for Chebyshev nodes, with the i-independent factors
/// cancelled: w_i = (-1)^i sin((2i+1)pi/(2(n+1))) for kind 1,
/// w_i = (-1)^i (1/2 at the ends, 1 inside) for kind 2.
[[nodiscard]] inline BarycentricWeights closed_form_cheb_weights(int kind, int n) {
    detail::require_kind(kind);
    detail::require_degree(n);
    const double pi = std::numbers::pi;
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        if (kind == 1)
            w[i] = sign * std::sin((2.0 * i + 1.0) * pi / (2.0 * (n + 1)));
        else
            w[i] = sign * ((i == 0 || i == n) ? 0.5 : 1.0);
    }
    return BarycentricWeights{n, std::move(w),
                              kind == 1 ? WeightProvenance::ClosedFormCheb1
                                        : WeightProvenance::ClosedFormCheb2};
}

/// Barycentric quotient sum(w_i y_i / (x - x_i)) / sum(w_i / (x - x_i)),
/// O(n) per evaluation. Node hits return the stored ordinate directly.
[[nodiscard]] inline double barycentric_eval(const NodeSet& nodes, std::span<const double> values,
                                             const BarycentricWeights& weights, double x) {
    const auto& xs = nodes.nodes;
    detail::require_matching_lengths(xs.size(), values.size());
    detail::require_matching_lengths(xs.size(), weights.weights.size());

    for (std::size_t i = 0; i < xs.size(); ++i)
        if (detail::node_hit(x, xs[i])) return values[i];

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double q = weights.weights[i] / (x - xs[i]);
        num += q * values[i];
        den += q;
    }
    return num / den;
}

}  // namespace swi
