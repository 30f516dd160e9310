// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "swi/nodes.hpp"

namespace swi {

/// Interpolation coefficients c_k in the T_k basis, together with the kind
/// that fixes the implied delta weights (1/2 at k = 0, and also at k = n for
/// kind 2).
struct ChebCoefficients {
    int kind;
    int n;
    std::vector<double> c;
};

[[nodiscard]] inline double cheb_delta(int kind, int n, int k) {
    return (k == 0 || (kind == 2 && k == n)) ? 0.5 : 1.0;
}

/// T_k(z) by the three-term recurrence. The trig form cos(k arccos z) is used
/// only as a test oracle; the recurrence avoids arccos near z = +-1.
[[nodiscard]] inline double chebyshev_T(int k, double z) {
    if (k < 0) throw std::invalid_argument("polynomial index must be nonnegative");
    detail::require_unit_range(z, "chebyshev_T argument");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = z;
    for (int j = 1; j < k; ++j) {
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Coefficients of the interpolant through values[i] at the Chebyshev nodes
/// z_i of the given kind, by direct O(n^2) cosine sums:
///   c_k = 2/(n+1) sum_i y_i cos(k(2i+1)pi/(2(n+1)))          (kind 1)
///   c_k = 2/n sum_i delta_i y_i cos(k i pi/n)                (kind 2)
/// values must be indexed to match make_nodes(kind, n) positionally.
[[nodiscard]] inline ChebCoefficients cheb_transform(int kind, std::span<const double> values) {
    detail::require_kind(kind);
    if (values.size() < 2) throw std::invalid_argument("need at least two sample values");
    const int n = static_cast<int>(values.size()) - 1;
    const double pi = std::numbers::pi;

    // The cosine arguments are integer multiples of a fixed angle; reduce the
    // integer modulo the period so arguments stay in [0, 2 pi).
    const std::int64_t period = (kind == 1) ? 4 * (static_cast<std::int64_t>(n) + 1)
                                            : 2 * static_cast<std::int64_t>(n);
    const double angle = (kind == 1) ? pi / (2.0 * (n + 1)) : pi / n;
    std::vector<double> cos_table(static_cast<std::size_t>(period));
    for (std::int64_t m = 0; m < period; ++m) cos_table[m] = std::cos(m * angle);

    const double scale = (kind == 1) ? 2.0 / (n + 1) : 2.0 / n;
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const std::int64_t idx = (kind == 1) ? static_cast<std::int64_t>(k) * (2 * i + 1)
                                                 : static_cast<std::int64_t>(k) * i;
            const double weight = (kind == 2) ? cheb_delta(2, n, i) : 1.0;
            acc += weight * values[i] * cos_table[idx % period];
        }
        c[k] = scale * acc;
    }
    return ChebCoefficients{kind, n, std::move(c)};
}

/// sum_k delta_k c_k T_k(z), accumulated over the T_k recurrence.
[[nodiscard]] inline double cheb_eval(const ChebCoefficients& coeffs, double z) {
    detail::require_unit_range(z, "cheb_eval argument");
    const int n = coeffs.n;
    double acc = 0.5 * coeffs.c[0];
    double prev = 1.0;
    double cur = z;
    for (int k = 1; k <= n; ++k) {
        acc += cheb_delta(coeffs.kind, n, k) * coeffs.c[k] * cur;
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return acc;
}

}  // namespace swi
