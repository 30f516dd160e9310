// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace swi {

/// Node families supported by the library. Chebyshev sets are stored in
/// index order (decreasing abscissae), never sorted ascending: the positional
/// pairing x_i <-> z_i is what the sine mappings preserve. Custom tags
/// user-supplied abscissae that fit no structured family; make_nodes never
/// produces it and the structured interpolants reject it.
enum class NodeFamily { Equidistant, Cheb1, Cheb2, Custom };

/// Ordered abscissae in [-1, 1] with their family tag. Degree n means n + 1
/// points.
struct NodeSet {
    NodeFamily family;
    int n;
    std::vector<double> nodes;
};

/// A node set paired with ordinate values, values[i] belonging to nodes[i].
struct SampleSet {
    NodeSet nodes;
    std::vector<double> values;
};

namespace detail {

inline void require_degree(int n) {
    if (n < 1)
        throw std::invalid_argument("degree must be at least 1, got " + std::to_string(n));
}

inline void require_kind(int kind) {
    if (kind != 1 && kind != 2)
        throw std::invalid_argument("mapping kind must be 1 or 2, got " + std::to_string(kind));
}

inline void require_unit_range(double v, const char* what) {
    if (!(std::abs(v) <= 1.0))
        throw std::domain_error(std::string(what) + " must lie in [-1, 1]");
}

/// Slope of the sine mapping: n pi / (2(n+1)) for kind 1, pi/2 for kind 2.
[[nodiscard]] inline double mapping_slope(int kind, int n) {
    const double pi = std::numbers::pi;
    return kind == 1 ? n * pi / (2.0 * (n + 1)) : 0.5 * pi;
}

}  // namespace detail

/// Generate the n+1 nodes of the requested family. Chebyshev formulas are
/// evaluated trigonometrically so large n does not accumulate drift.
[[nodiscard]] inline NodeSet make_nodes(NodeFamily family, int n) {
    detail::require_degree(n);
    const double pi = std::numbers::pi;
    std::vector<double> pts(static_cast<std::size_t>(n) + 1);
    switch (family) {
        case NodeFamily::Equidistant:
            for (int i = 0; i <= n; ++i) pts[i] = -1.0 + 2.0 * i / n;
            break;
        case NodeFamily::Cheb1:
            for (int i = 0; i <= n; ++i) pts[i] = std::cos((2.0 * i + 1.0) * pi / (2.0 * (n + 1)));
            break;
        case NodeFamily::Cheb2:
            for (int i = 0; i <= n; ++i) pts[i] = std::cos(i * pi / n);
            // cos can land an ulp inside the interval; z = +-1 must be nodes.
            pts[0] = 1.0;
            pts[static_cast<std::size_t>(n)] = -1.0;
            break;
        case NodeFamily::Custom:
            throw std::invalid_argument("Custom node sets carry user abscissae; build them directly");
    }
    return NodeSet{family, n, std::move(pts)};
}

/// kappa_1(x) = -sin(n pi x / (2(n+1))), kappa_2(x) = -sin(pi x / 2).
/// Carries the equidistant point x_i onto the Chebyshev point z_i of the
/// requested kind, index for index.
[[nodiscard]] inline double kappa(int kind, int n, double x) {
    detail::require_kind(kind);
    detail::require_degree(n);
    detail::require_unit_range(x, "kappa argument");
    return -std::sin(detail::mapping_slope(kind, n) * x);
}

/// Functional inverse of kappa. For kind 1 the image of [-1, 1] is
/// [-(n+1)/n, (n+1)/n], slightly wider than the unit interval.
[[nodiscard]] inline double tau(int kind, int n, double z) {
    detail::require_kind(kind);
    detail::require_degree(n);
    detail::require_unit_range(z, "tau argument");
    return -std::asin(z) / detail::mapping_slope(kind, n);
}

/// Affine change of variable between a user interval [a, b] and [-1, 1].
class IntervalMap {
public:
    IntervalMap(double a, double b) : a_(a), b_(b) {
        if (!(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
    }

    [[nodiscard]] double to_unit(double x_user) const {
        return (2.0 * x_user - (a_ + b_)) / (b_ - a_);
    }
    [[nodiscard]] double from_unit(double x) const {
        return 0.5 * ((b_ - a_) * x + (a_ + b_));
    }

    [[nodiscard]] double a() const { return a_; }
    [[nodiscard]] double b() const { return b_; }

private:
    double a_;
    double b_;
};

}  // namespace swi
