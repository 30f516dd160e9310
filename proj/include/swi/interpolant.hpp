// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "swi/chebyshev.hpp"
#include "swi/lagrange.hpp"
#include "swi/nodes.hpp"
#include "swi/symmetric_wave.hpp"

namespace swi {

/// A built evaluator: method tag plus whatever precomputed state the method
/// needs. Immutable after construction and safe to evaluate concurrently.
class Interpolant {
public:
    struct Classical {
        SampleSet samples;
    };
    struct Barycentric {
        SampleSet samples;
        BarycentricWeights weights;
    };
    struct Chebyshev {
        ChebCoefficients coeffs;
    };
    struct Average {
        std::vector<Interpolant> parts;
    };
    using State = std::variant<Classical, Barycentric, Chebyshev, SwiInterpolant, Average>;

    explicit Interpolant(State state) : state_(std::move(state)) {}

    [[nodiscard]] double operator()(double x) const {
        return std::visit(
            [x](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Classical>)
                    return classical_lagrange_eval(s.samples, x);
                else if constexpr (std::is_same_v<T, Barycentric>)
                    return barycentric_eval(s.samples.nodes, s.samples.values, s.weights, x);
                else if constexpr (std::is_same_v<T, Chebyshev>)
                    return cheb_eval(s.coeffs, x);
                else if constexpr (std::is_same_v<T, SwiInterpolant>)
                    return swi_eval(s, x);
                else {
                    double acc = 0.0;
                    for (const auto& part : s.parts) acc += part(x);
                    return acc / static_cast<double>(s.parts.size());
                }
            },
            state_);
    }

    [[nodiscard]] std::string_view method_name() const {
        return std::visit(
            [](const auto& s) -> std::string_view {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Classical>)
                    return "classical";
                else if constexpr (std::is_same_v<T, Barycentric>)
                    return "bary";
                else if constexpr (std::is_same_v<T, Chebyshev>)
                    return s.coeffs.kind == 1 ? "ci1" : "ci2";
                else if constexpr (std::is_same_v<T, SwiInterpolant>)
                    return s.kind == 1 ? "swi1" : "swi2";
                else
                    return "average";
            },
            state_);
    }

private:
    State state_;
};

/// Classical Lagrange interpolant of arbitrary distinct samples.
[[nodiscard]] inline Interpolant classical_interpolant(SampleSet samples) {
    detail::require_matching_lengths(samples.nodes.nodes.size(), samples.values.size());
    detail::require_distinct(samples.nodes.nodes);
    return Interpolant(Interpolant::Classical{std::move(samples)});
}

/// Barycentric interpolant with generic weights computed from the nodes.
[[nodiscard]] inline Interpolant barycentric_interpolant(SampleSet samples) {
    detail::require_matching_lengths(samples.nodes.nodes.size(), samples.values.size());
    auto weights = generic_barycentric_weights(samples.nodes);
    return Interpolant(Interpolant::Barycentric{std::move(samples), std::move(weights)});
}

/// Chebyshev interpolant of samples taken at the Chebyshev nodes of the given
/// kind, in node index order.
[[nodiscard]] inline Interpolant chebyshev_interpolant(int kind, const SampleSet& samples) {
    detail::require_kind(kind);
    const NodeFamily expected = (kind == 1) ? NodeFamily::Cheb1 : NodeFamily::Cheb2;
    if (samples.nodes.family != expected)
        throw std::invalid_argument("sample node family does not match the Chebyshev kind");
    detail::require_matching_lengths(samples.nodes.nodes.size(), samples.values.size());
    return Interpolant(Interpolant::Chebyshev{cheb_transform(kind, samples.values)});
}

/// Symmetric wave interpolant of equidistant samples.
[[nodiscard]] inline Interpolant swi_interpolant(int kind, SampleSet samples,
                                                 SwiForm form = SwiForm::TrigSum) {
    return Interpolant(swi_build(kind, std::move(samples), form));
}

/// Pointwise average of two or more interpolants.
[[nodiscard]] inline Interpolant average_interpolant(std::vector<Interpolant> parts) {
    if (parts.size() < 2) throw std::invalid_argument("average needs at least two interpolants");
    return Interpolant(Interpolant::Average{std::move(parts)});
}

}  // namespace swi
