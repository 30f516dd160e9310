// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "swi/benchmarks.hpp"
#include "swi/interpolant.hpp"
#include "swi/metrics.hpp"

namespace swi {

enum class Method { Ci1, Ci2, Swi1, Swi2, AvgCi, AvgSwi, ClassicalEquid };
enum class Metric { Max, Cumulative };
enum class Family { Ci, Swi };

[[nodiscard]] constexpr std::string_view method_token(Method m) {
    switch (m) {
        case Method::Ci1: return "ci1";
        case Method::Ci2: return "ci2";
        case Method::Swi1: return "swi1";
        case Method::Swi2: return "swi2";
        case Method::AvgCi: return "avg_ci";
        case Method::AvgSwi: return "avg_swi";
        case Method::ClassicalEquid: return "classical_equid";
    }
    return "?";
}

[[nodiscard]] inline Method method_from_token(std::string_view token) {
    for (Method m : {Method::Ci1, Method::Ci2, Method::Swi1, Method::Swi2, Method::AvgCi,
                     Method::AvgSwi, Method::ClassicalEquid})
        if (method_token(m) == token) return m;
    throw std::invalid_argument("unknown method '" + std::string(token) + "'");
}

[[nodiscard]] constexpr std::string_view metric_token(Metric m) {
    return m == Metric::Max ? "max" : "cumulative";
}

[[nodiscard]] inline Metric metric_from_token(std::string_view token) {
    if (token == "max") return Metric::Max;
    if (token == "cumulative") return Metric::Cumulative;
    throw std::invalid_argument("unknown metric '" + std::string(token) + "'");
}

[[nodiscard]] constexpr std::string_view family_token(Family f) {
    return f == Family::Ci ? "ci" : "swi";
}

[[nodiscard]] inline Family family_from_token(std::string_view token) {
    if (token == "ci") return Family::Ci;
    if (token == "swi") return Family::Swi;
    throw std::invalid_argument("unknown family '" + std::string(token) + "'");
}

/// One point of an error-versus-degree sweep.
struct SweepRecord {
    int function_id;
    Method method;
    int n;
    double max_error;
    double cumulative_error;
    std::optional<double> endpoint_part;
    std::optional<double> central_part;
};

/// One cell of the minimal-degree table: the smallest degree at which the
/// family-best error (min over the family's two kinds) first drops below
/// epsilon.
struct MinimalDegreeRecord {
    int function_id;
    Metric metric;
    double epsilon;
    Family family;
    int degree;
};

/// Sup-grid deviation between an interpolant of exact samples and one of
/// samples rounded to a given number of significant digits.
struct RobustnessRecord {
    int function_id;
    int kind;
    int n;
    double max_deviation;
};

/// Raised when the minimal-degree search exhausts its range; carries the best
/// family error seen so the caller can report how close the search came.
class NotReachedError : public std::runtime_error {
public:
    NotReachedError(const std::string& what, double best_error)
        : std::runtime_error(what), best_error_(best_error) {}
    [[nodiscard]] double best_error() const { return best_error_; }

private:
    double best_error_;
};

namespace detail {

[[nodiscard]] inline int harness_thread_count() {
    if (const char* env = std::getenv("SWI_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(0..count-1), possibly on several threads. Each index writes only
/// its own output slot, so results are identical for any thread count.
template <class Fn>
void parallel_for_index(int count, Fn&& fn) {
    const int threads = std::min(harness_thread_count(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            if (failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Build the interpolant a harness method uses for a target function:
/// CI methods sample at Chebyshev nodes, SWI and classical methods at
/// equidistant nodes, AVG methods average the two kinds of their family.
template <class F>
[[nodiscard]] Interpolant build_method(Method method, F&& f, int n) {
    auto sample = [&](NodeFamily family) {
        NodeSet nodes = make_nodes(family, n);
        std::vector<double> values(nodes.nodes.size());
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(nodes.nodes[i]);
        return SampleSet{std::move(nodes), std::move(values)};
    };
    switch (method) {
        case Method::Ci1: return chebyshev_interpolant(1, sample(NodeFamily::Cheb1));
        case Method::Ci2: return chebyshev_interpolant(2, sample(NodeFamily::Cheb2));
        case Method::Swi1: return swi_interpolant(1, sample(NodeFamily::Equidistant));
        case Method::Swi2: return swi_interpolant(2, sample(NodeFamily::Equidistant));
        case Method::AvgCi: {
            std::vector<Interpolant> parts;
            parts.push_back(chebyshev_interpolant(1, sample(NodeFamily::Cheb1)));
            parts.push_back(chebyshev_interpolant(2, sample(NodeFamily::Cheb2)));
            return average_interpolant(std::move(parts));
        }
        case Method::AvgSwi: {
            std::vector<Interpolant> parts;
            parts.push_back(swi_interpolant(1, sample(NodeFamily::Equidistant)));
            parts.push_back(swi_interpolant(2, sample(NodeFamily::Equidistant)));
            return average_interpolant(std::move(parts));
        }
        case Method::ClassicalEquid: return classical_interpolant(sample(NodeFamily::Equidistant));
    }
    throw std::invalid_argument("unknown method");
}

/// Errors of one (benchmark, method, degree) combination.
[[nodiscard]] inline SweepRecord sweep_point(int function_id, Method method, int n,
                                             const EvalGrid& grid, bool with_partition = false) {
    const Interpolant interp =
        build_method(method, [function_id](double x) { return benchmark(function_id, x); }, n);
    const ErrorReport report = error_report(
        [function_id](double x) { return benchmark(function_id, x); }, interp, grid,
        with_partition);
    return SweepRecord{function_id, method,           n,
                       report.max_error, report.cumulative_error,
                       report.endpoint_part, report.central_part};
}

/// Error sweep over degrees n_from..n_to (step `step`) for each method.
/// Work is parallel over (method, n) pairs; records come back in (method, n)
/// order regardless of scheduling.
[[nodiscard]] inline std::vector<SweepRecord> run_sweep(int function_id,
                                                        std::span<const Method> methods,
                                                        int n_from, int n_to, int step,
                                                        const EvalGrid& grid,
                                                        bool with_partition = false) {
    if (methods.empty()) throw std::invalid_argument("method list must not be empty");
    if (n_from < 1 || n_to < n_from || step < 1)
        throw std::invalid_argument("invalid degree range");
    std::vector<int> degrees;
    for (int n = n_from; n <= n_to; n += step) degrees.push_back(n);

    std::vector<SweepRecord> records(methods.size() * degrees.size(),
                                     SweepRecord{0, Method::Ci1, 0, 0.0, 0.0, {}, {}});
    detail::parallel_for_index(static_cast<int>(records.size()), [&](int idx) {
        const Method method = methods[static_cast<std::size_t>(idx) / degrees.size()];
        const int n = degrees[static_cast<std::size_t>(idx) % degrees.size()];
        records[static_cast<std::size_t>(idx)] =
            sweep_point(function_id, method, n, grid, with_partition);
    });
    return records;
}

namespace detail {

/// Family-best errors (min over the family's two kinds) at one degree.
struct FamilyErrors {
    double max_error;
    double cumulative_error;
    [[nodiscard]] double metric(Metric m) const {
        return m == Metric::Max ? max_error : cumulative_error;
    }
};

[[nodiscard]] inline FamilyErrors family_errors(int function_id, Family family, int n,
                                                const EvalGrid& grid) {
    const Method first = family == Family::Ci ? Method::Ci1 : Method::Swi1;
    const Method second = family == Family::Ci ? Method::Ci2 : Method::Swi2;
    const SweepRecord a = sweep_point(function_id, first, n, grid);
    const SweepRecord b = sweep_point(function_id, second, n, grid);
    return FamilyErrors{std::min(a.max_error, b.max_error),
                        std::min(a.cumulative_error, b.cumulative_error)};
}

}  // namespace detail

/// One minimal-degree query: first degree whose family-best `metric` error
/// drops below `epsilon`.
struct MinimalDegreeQuery {
    Metric metric;
    double epsilon;
};

/// Outcome of a scan: per query, the first-crossing degree (if reached within
/// n_max) and the best error encountered during the scan.
struct MinimalDegreeScan {
    std::vector<std::optional<int>> degree;
    std::vector<double> best_error;
};

/// Scan n = 1, 2, 3, ... up to n_max, resolving every query in one pass.
/// Crossing detection walks the raw error curve in degree order (no
/// smoothing), so wiggly curves resolve to their true first crossing.
[[nodiscard]] inline MinimalDegreeScan minimal_degree_scan(int function_id, Family family,
                                                           std::span<const MinimalDegreeQuery> queries,
                                                           int n_max, const EvalGrid& grid) {
    if (queries.empty()) throw std::invalid_argument("query list must not be empty");
    for (const auto& q : queries)
        if (!(q.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");

    MinimalDegreeScan scan;
    scan.degree.assign(queries.size(), std::nullopt);
    scan.best_error.assign(queries.size(), std::numeric_limits<double>::infinity());

    const int block = std::max(2 * detail::harness_thread_count(), 4);
    std::vector<detail::FamilyErrors> errors;
    for (int base = 1; base <= n_max; base += block) {
        const int count = std::min(block, n_max - base + 1);
        errors.assign(static_cast<std::size_t>(count), detail::FamilyErrors{0.0, 0.0});
        detail::parallel_for_index(count, [&](int i) {
            errors[static_cast<std::size_t>(i)] = detail::family_errors(function_id, family, base + i, grid);
        });
        for (int i = 0; i < count; ++i) {
            bool all_resolved = true;
            for (std::size_t q = 0; q < queries.size(); ++q) {
                const double err = errors[static_cast<std::size_t>(i)].metric(queries[q].metric);
                scan.best_error[q] = std::min(scan.best_error[q], err);
                if (!scan.degree[q] && err < queries[q].epsilon) scan.degree[q] = base + i;
                all_resolved = all_resolved && scan.degree[q].has_value();
            }
            if (all_resolved) return scan;
        }
    }
    return scan;
}

/// Single-cell minimal-degree search. Throws NotReachedError (carrying the
/// best error seen) when no degree up to n_max gets below epsilon.
[[nodiscard]] inline MinimalDegreeRecord minimal_degree(int function_id, Family family,
                                                        Metric metric, double epsilon, int n_max,
                                                        const EvalGrid& grid) {
    const MinimalDegreeQuery query{metric, epsilon};
    const auto scan = minimal_degree_scan(function_id, family, std::span(&query, 1), n_max, grid);
    if (!scan.degree[0])
        throw NotReachedError("minimal degree not reached within n_max = " +
                                  std::to_string(n_max) + " (best error " +
                                  std::to_string(scan.best_error[0]) + ")",
                              scan.best_error[0]);
    return MinimalDegreeRecord{function_id, metric, epsilon, family, *scan.degree[0]};
}

/// Deviation between interpolants of exact and of rounded samples.
[[nodiscard]] inline RobustnessRecord robustness_run(int function_id, int kind, int n, int digits,
                                                     const EvalGrid& grid) {
    detail::require_kind(kind);
    detail::require_degree(n);
    if (digits < 1) throw std::invalid_argument("digits must be at least 1");

    SampleSet exact = sample_benchmark(function_id, make_nodes(NodeFamily::Equidistant, n));
    SampleSet rounded = exact;
    for (double& y : rounded.values) y = round_to_significant(y, digits);

    const SwiInterpolant q = swi_build(kind, std::move(exact));
    const SwiInterpolant q_rounded = swi_build(kind, std::move(rounded));
    double deviation = 0.0;
    for (double x : grid.points())
        deviation = std::max(deviation, std::abs(swi_eval_trig(q, x) - swi_eval_trig(q_rounded, x)));
    return RobustnessRecord{function_id, kind, n, deviation};
}

}  // namespace swi
