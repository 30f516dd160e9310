// SPDX-License-Identifier: Apache-2.0
//
// Minimal library walkthrough: interpolate the Runge function on 13
// equidistant points and compare against the Chebyshev baselines.

#include <cstdio>

#include "swi/all.hpp"

int main() {
    const int n = 12;
    const swi::EvalGrid grid;
    auto runge = [](double x) { return swi::benchmark(1, x); };

    std::printf("interpolating 1/(1+25x^2) with %d points\n\n", n + 1);
    std::printf("%-16s %12s %12s\n", "method", "max err", "area err");
    for (swi::Method method : {swi::Method::Swi1, swi::Method::Swi2, swi::Method::Ci1,
                               swi::Method::Ci2, swi::Method::ClassicalEquid}) {
        const swi::SweepRecord rec = swi::sweep_point(1, method, n, grid);
        std::printf("%-16s %12.4e %12.4e\n", std::string(swi::method_token(method)).c_str(),
                    rec.max_error, rec.cumulative_error);
    }

    const swi::SwiInterpolant q =
        swi::swi_build(1, swi::sample_benchmark(1, swi::make_nodes(swi::NodeFamily::Equidistant, n)));
    std::printf("\nswi1 at a few points:\n");
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
        std::printf("  q(%+.2f) = %+.6f   f(%+.2f) = %+.6f\n", x, swi::swi_eval_trig(q, x), x,
                    runge(x));
    return 0;
}
