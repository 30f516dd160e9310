// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "swi/csv.hpp"
#include "swi/harness.hpp"

using namespace swi;

namespace {
const EvalGrid kGrid;  // default 10001-point grid, shared across cases
}

TEST_CASE("sweep of SWI1 on the Runge function stays below the classical baseline") {
    const std::vector<Method> methods{Method::Swi1, Method::ClassicalEquid};
    const auto records = run_sweep(1, methods, 10, 40, 1, EvalGrid(2001));
    REQUIRE(records.size() == 62);
    for (std::size_t i = 0; i < 31; ++i) {
        const SweepRecord& swi1 = records[i];
        const SweepRecord& classical = records[i + 31];
        CHECK(swi1.method == Method::Swi1);
        CHECK(classical.method == Method::ClassicalEquid);
        CHECK(swi1.n == classical.n);
        CHECK(swi1.max_error < classical.max_error);
    }
}

TEST_CASE("four-method sweep of the Runge function reaches 1e-3 at the expected degrees") {
    const std::vector<Method> methods{Method::Swi1, Method::Swi2, Method::Ci1, Method::Ci2};
    const auto records = run_sweep(1, methods, 10, 40, 1, kGrid);
    REQUIRE(records.size() == 4 * 31);
    auto family_best_at = [&](int n, bool swi) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : records) {
            const bool is_swi = r.method == Method::Swi1 || r.method == Method::Swi2;
            if (r.n == n && is_swi == swi) best = std::min(best, r.max_error);
        }
        return best;
    };
    CHECK(family_best_at(24, true) < 1e-3);
    CHECK(family_best_at(34, false) < 1e-3);
    for (const auto& r : records) {
        CHECK(r.max_error >= 0.0);
        CHECK(r.cumulative_error >= 0.0);
        CHECK(!r.endpoint_part.has_value());
    }
}

TEST_CASE("sweep validates its range and method list") {
    const std::vector<Method> methods{Method::Swi1};
    CHECK_THROWS_AS((void)run_sweep(1, methods, 0, 10, 1, kGrid), std::invalid_argument);
    CHECK_THROWS_AS((void)run_sweep(1, methods, 10, 5, 1, kGrid), std::invalid_argument);
    CHECK_THROWS_AS((void)run_sweep(1, methods, 5, 10, 0, kGrid), std::invalid_argument);
    CHECK_THROWS_AS((void)run_sweep(1, std::vector<Method>{}, 5, 10, 1, kGrid),
                    std::invalid_argument);
}

TEST_CASE("large-n sweep of the Gaussian-windowed oscillation decays toward zero") {
    const std::vector<Method> methods{Method::Swi1};
    const auto records = run_sweep(5, methods, 100, 1000, 100, kGrid);
    REQUIRE(records.size() == 10);
    // Non-increasing until the curve bottoms out at rounding level, where
    // sub-1e-12 jitter does not count as growth.
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        CHECK((records[i + 1].max_error <= records[i].max_error ||
               records[i + 1].max_error < 1e-12));
        CHECK((records[i + 1].cumulative_error <= records[i].cumulative_error ||
               records[i + 1].cumulative_error < 1e-12));
    }
    CHECK(records.back().max_error < 1e-6);
    CHECK(records.back().cumulative_error < 1e-6);
}

TEST_CASE("partition sweep fills both parts and they sum to the cumulative error") {
    const std::vector<Method> methods{Method::AvgSwi};
    const auto records = run_sweep(9, methods, 30, 36, 3, kGrid, true);
    REQUIRE(records.size() == 3);
    for (const auto& r : records) {
        REQUIRE(r.endpoint_part.has_value());
        REQUIRE(r.central_part.has_value());
        CHECK(std::abs(*r.endpoint_part + *r.central_part - r.cumulative_error) <=
              1e-12 * r.cumulative_error);
    }
}

TEST_CASE("minimal degree search matches the expected first crossings") {
    const MinimalDegreeRecord swi_max =
        minimal_degree(1, Family::Swi, Metric::Max, 0.1, 100, kGrid);
    CHECK(std::abs(swi_max.degree - 8) <= 2);

    const MinimalDegreeRecord ci_cum =
        minimal_degree(1, Family::Ci, Metric::Cumulative, 0.001, 100, kGrid);
    CHECK(std::abs(ci_cum.degree - 33) <= 2);
}

TEST_CASE("minimal degree has first-crossing semantics") {
    const MinimalDegreeRecord rec = minimal_degree(1, Family::Swi, Metric::Max, 0.1, 100, kGrid);
    const auto best_at = [&](int n) {
        return std::min(sweep_point(1, Method::Swi1, n, kGrid).max_error,
                        sweep_point(1, Method::Swi2, n, kGrid).max_error);
    };
    CHECK(best_at(rec.degree) < 0.1);
    if (rec.degree > 1) CHECK(best_at(rec.degree - 1) >= 0.1);
}

TEST_CASE("minimal degree is non-increasing as epsilon grows") {
    for (int fid : {1, 5}) {
        for (Family family : {Family::Ci, Family::Swi}) {
            for (Metric metric : {Metric::Max, Metric::Cumulative}) {
                const int d_coarse = minimal_degree(fid, family, metric, 0.1, 100, kGrid).degree;
                const int d_mid = minimal_degree(fid, family, metric, 0.01, 100, kGrid).degree;
                const int d_fine = minimal_degree(fid, family, metric, 0.001, 100, kGrid).degree;
                CHECK(d_coarse <= d_mid);
                CHECK(d_mid <= d_fine);
            }
        }
    }
}

TEST_CASE("unreached searches raise an error carrying the best error seen") {
    try {
        (void)minimal_degree(1, Family::Swi, Metric::Max, 1e-9, 20, kGrid);
        FAIL("expected NotReachedError");
    } catch (const NotReachedError& e) {
        CHECK(e.best_error() > 1e-9);
        CHECK(std::isfinite(e.best_error()));
    }
    CHECK_THROWS_AS((void)minimal_degree(1, Family::Swi, Metric::Max, -0.5, 20, kGrid),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)minimal_degree(1, Family::Swi, Metric::Max, 0.1, 1, kGrid),
                    std::invalid_argument);
}

TEST_CASE("one scan resolves several epsilon cells consistently") {
    const std::vector<MinimalDegreeQuery> queries{
        {Metric::Max, 0.1}, {Metric::Max, 0.01}, {Metric::Cumulative, 0.1}};
    const auto scan = minimal_degree_scan(1, Family::Swi, queries, 100, kGrid);
    REQUIRE(scan.degree.size() == 3);
    for (std::size_t q = 0; q < queries.size(); ++q) {
        REQUIRE(scan.degree[q].has_value());
        const MinimalDegreeRecord single = minimal_degree(1, Family::Swi, queries[q].metric,
                                                          queries[q].epsilon, 100, kGrid);
        CHECK(*scan.degree[q] == single.degree);
    }
}

TEST_CASE("robustness run with generous digits detects no deviation") {
    const RobustnessRecord rec = robustness_run(1, 1, 12, 16, kGrid);
    CHECK(rec.max_deviation < 1e-10);
}

TEST_CASE("rounding the Runge samples to two digits barely moves the interpolant") {
    // regression values frozen from the first verified run
    const RobustnessRecord kind1 = robustness_run(1, 1, 12, 2, kGrid);
    CHECK(kind1.max_deviation == doctest::Approx(0.0047073538301464213).epsilon(1e-9));
    const RobustnessRecord kind2 = robustness_run(1, 2, 12, 2, kGrid);
    CHECK(kind2.max_deviation == doctest::Approx(0.0047351603613355331).epsilon(1e-9));
    CHECK(kind1.max_deviation < 6.0e-3);
    CHECK(kind2.max_deviation < 6.0e-3);
}

TEST_CASE("robustness of a constant is exactly the rounding gap") {
    // A constant interpolant maps rounded constants to rounded constants.
    const int n = 8;
    const double c = 0.12345;
    SampleSet exact{make_nodes(NodeFamily::Equidistant, n), std::vector<double>(n + 1, c)};
    SampleSet rounded = exact;
    for (double& y : rounded.values) y = round_to_significant(y, 2);
    const SwiInterpolant q = swi_build(1, std::move(exact));
    const SwiInterpolant qr = swi_build(1, std::move(rounded));
    double dev = 0.0;
    for (double x : kGrid.points())
        dev = std::max(dev, std::abs(swi_eval_trig(q, x) - swi_eval_trig(qr, x)));
    CHECK(dev == doctest::Approx(std::abs(c - 0.12)).epsilon(1e-10));
}

TEST_CASE("sweep CSV round-trips bit-exactly and deterministically") {
    const std::vector<Method> methods{Method::Swi1, Method::Ci2};
    auto records = run_sweep(3, methods, 5, 9, 2, EvalGrid(501), true);
    std::ostringstream first;
    export_csv(std::span<const SweepRecord>(records), first);
    std::ostringstream second;
    export_csv(std::span<const SweepRecord>(records), second);
    CHECK(first.str() == second.str());

    std::istringstream in(first.str());
    const auto parsed = parse_sweep_csv(in);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].function_id == records[i].function_id);
        CHECK(parsed[i].method == records[i].method);
        CHECK(parsed[i].n == records[i].n);
        CHECK(parsed[i].max_error == records[i].max_error);
        CHECK(parsed[i].cumulative_error == records[i].cumulative_error);
        CHECK(parsed[i].endpoint_part == records[i].endpoint_part);
        CHECK(parsed[i].central_part == records[i].central_part);
    }
}

TEST_CASE("empty record lists export as a bare header") {
    std::ostringstream out;
    export_csv(std::span<const MinimalDegreeRecord>(), out);
    CHECK(out.str() == std::string(kMinimalDegreeCsvHeader) + "\n");

    std::ostringstream sweep_out;
    const SweepRecord one{2, Method::AvgCi, 7, 0.125, 0.25, {}, {}};
    export_csv(std::span<const SweepRecord>(&one, 1), sweep_out);
    CHECK(sweep_out.str() ==
          std::string(kSweepCsvHeader) + "\n2,avg_ci,7,0.125,0.25,,\n");
}

TEST_CASE("minimal-degree and robustness CSV round-trip") {
    std::vector<MinimalDegreeRecord> degs{
        {1, Metric::Max, 0.1, Family::Swi, 8},
        {10, Metric::Cumulative, 0.001, Family::Ci, 96},
    };
    std::ostringstream out;
    export_csv(std::span<const MinimalDegreeRecord>(degs), out);
    std::istringstream in(out.str());
    const auto parsed = parse_minimal_degree_csv(in);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[1].epsilon == degs[1].epsilon);
    CHECK(parsed[1].family == Family::Ci);
    CHECK(parsed[0].metric == Metric::Max);
    CHECK(parsed[0].degree == 8);

    std::vector<RobustnessRecord> robs{{1, 2, 12, 0.0123456789012345678}};
    std::ostringstream rout;
    export_csv(std::span<const RobustnessRecord>(robs), rout);
    std::istringstream rin(rout.str());
    const auto rparsed = parse_robustness_csv(rin);
    REQUIRE(rparsed.size() == 1);
    CHECK(rparsed[0].max_deviation == robs[0].max_deviation);
    CHECK(rparsed[0].kind == 2);
}

TEST_CASE("built interpolants expose their method tag") {
    auto runge = [](double x) { return benchmark(1, x); };
    CHECK(build_method(Method::Ci1, runge, 6).method_name() == "ci1");
    CHECK(build_method(Method::Ci2, runge, 6).method_name() == "ci2");
    CHECK(build_method(Method::Swi1, runge, 6).method_name() == "swi1");
    CHECK(build_method(Method::Swi2, runge, 6).method_name() == "swi2");
    CHECK(build_method(Method::AvgSwi, runge, 6).method_name() == "average");
    CHECK(build_method(Method::ClassicalEquid, runge, 6).method_name() == "classical");
    const SampleSet s = sample_benchmark(1, make_nodes(NodeFamily::Equidistant, 6));
    CHECK(barycentric_interpolant(s).method_name() == "bary");
}

TEST_CASE("method tokens round-trip") {
    for (Method m : {Method::Ci1, Method::Ci2, Method::Swi1, Method::Swi2, Method::AvgCi,
                     Method::AvgSwi, Method::ClassicalEquid})
        CHECK(method_from_token(method_token(m)) == m);
    CHECK_THROWS_AS((void)method_from_token("nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)metric_from_token("sup"), std::invalid_argument);
    CHECK_THROWS_AS((void)family_from_token("both"), std::invalid_argument);
}
