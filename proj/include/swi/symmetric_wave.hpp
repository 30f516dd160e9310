// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "swi/chebyshev.hpp"
#include "swi/lagrange.hpp"
#include "swi/nodes.hpp"

namespace swi {

enum class SwiForm { TrigSum, Barycentric };

/// Symmetric wave interpolant of equidistant samples. The coefficients are
/// the Chebyshev coefficients of the mapped samples: the sine mapping carries
/// x_i onto z_i index for index, so the transform consumes the y_i directly
/// and the mapped function is never materialized.
struct SwiInterpolant {
    int kind;
    int n;
    SampleSet samples;
    ChebCoefficients coeffs;
    SwiForm form = SwiForm::TrigSum;
};

[[nodiscard]] inline SwiInterpolant swi_build(int kind, SampleSet samples,
                                              SwiForm form = SwiForm::TrigSum) {
    detail::require_kind(kind);
    if (samples.nodes.family != NodeFamily::Equidistant)
        throw std::invalid_argument("swi_build requires samples on equidistant nodes");
    detail::require_matching_lengths(samples.nodes.nodes.size(), samples.values.size());
    ChebCoefficients coeffs = cheb_transform(kind, samples.values);
    const int n = samples.nodes.n;
    return SwiInterpolant{kind, n, std::move(samples), std::move(coeffs), form};
}

/// Closed trigonometric sum, the default evaluation path: it has no
/// singularities and needs no arccosine.
///   q_n(x) = sum_k delta_k c_k cos(k pi/2 + k beta x),
/// with beta = n pi/(2(n+1)) for kind 1 and pi/2 for kind 2.
[[nodiscard]] inline double swi_eval_trig(const SwiInterpolant& interp, double x) {
    detail::require_unit_range(x, "swi evaluation point");
    const double theta = 0.5 * std::numbers::pi + detail::mapping_slope(interp.kind, interp.n) * x;
    const auto& c = interp.coeffs.c;
    double acc = 0.5 * c[0];
    for (int k = 1; k <= interp.n; ++k)
        acc += cheb_delta(interp.kind, interp.n, k) * c[k] * std::cos(k * theta);
    return acc;
}

/// Barycentric rational form, written directly in x. Equivalent to the trig
/// sum by uniqueness of polynomial interpolation; kept as an independent
/// route for cross-validation and O(n) evaluation. At sample nodes (which
/// include x = +-1 for kind 2, where single denominators vanish) the node-hit
/// rule returns the stored ordinate.
[[nodiscard]] inline double swi_eval_barycentric(const SwiInterpolant& interp, double x) {
    detail::require_unit_range(x, "swi evaluation point");
    const auto& xs = interp.samples.nodes.nodes;
    const auto& ys = interp.samples.values;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (detail::node_hit(x, xs[i])) return ys[i];

    const int n = interp.n;
    const double pi = std::numbers::pi;
    const double s = std::sin(detail::mapping_slope(interp.kind, n) * x);
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= n; ++i) {
        double weight;
        double node_cos;
        if (interp.kind == 1) {
            const double phase = (2.0 * i + 1.0) * pi / (2.0 * (n + 1));
            weight = std::sin(phase);
            node_cos = std::cos(phase);
        } else {
            weight = (i == 0 || i == n) ? 0.5 : 1.0;
            node_cos = std::cos(i * pi / n);
        }
        const double d = s + node_cos;
        if (d == 0.0) return ys[i];  // x maps exactly onto the i-th Chebyshev node
        const double sign = (i % 2 == 0) ? -1.0 : 1.0;
        const double q = sign * weight / d;
        num += q * ys[i];
        den += q;
    }
    return num / den;
}

/// Evaluate through the form selected at build time.
[[nodiscard]] inline double swi_eval(const SwiInterpolant& interp, double x) {
    return interp.form == SwiForm::TrigSum ? swi_eval_trig(interp, x)
                                           : swi_eval_barycentric(interp, x);
}

}  // namespace swi
