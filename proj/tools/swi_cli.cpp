// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: build interpolants on benchmark functions or user
// data files, run error sweeps, minimal-degree searches, robustness and
// partition studies, and write the results as CSV.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "swi/all.hpp"

namespace {

/// Raised for defective input data files; maps to exit code 2.
class DataFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int default_grid_points() {
    if (const char* env = std::getenv("SWI_GRID_POINTS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return swi::kDefaultGridPoints;
}

struct OutputTarget {
    std::string path;  // empty means stdout

    template <class WriteFn>
    void write(WriteFn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream file(path);
        if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
        fn(file);
        file.flush();
        if (!file) throw std::runtime_error("failed while writing '" + path + "'");
    }
};

struct DegreeRange {
    int from = 0;
    int to = 0;
    int step = 1;
};

DegreeRange parse_degree_range(const std::string& text) {
    DegreeRange range;
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--n-range", "expected A..B or A..B:step, got '" + text + "'");
    const auto colon = text.find(':', dots + 2);
    try {
        range.from = std::stoi(text.substr(0, dots));
        const std::string to_part = colon == std::string::npos
                                        ? text.substr(dots + 2)
                                        : text.substr(dots + 2, colon - dots - 2);
        range.to = std::stoi(to_part);
        if (colon != std::string::npos) range.step = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n-range", "expected A..B or A..B:step, got '" + text + "'");
    }
    if (range.from < 1 || range.to < range.from || range.step < 1)
        throw CLI::ValidationError("--n-range", "need 1 <= A <= B and step >= 1");
    return range;
}

std::pair<double, double> parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--interval", "expected a,b, got '" + text + "'");
    try {
        const double a = std::stod(text.substr(0, comma));
        const double b = std::stod(text.substr(comma + 1));
        if (!(a < b)) throw std::invalid_argument("a >= b");
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--interval", "expected a,b with a < b, got '" + text + "'");
    }
}

struct DataFile {
    std::vector<double> xs;
    std::vector<double> ys;
};

/// Two whitespace- or comma-separated columns; '#' starts a comment;
/// abscissae must ascend strictly.
DataFile load_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataFileError("cannot open data file '" + path + "'");
    DataFile data;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream row(line);
        double x = 0.0;
        double y = 0.0;
        if (!(row >> x)) continue;  // blank or comment-only line
        if (!(row >> y))
            throw DataFileError("data file '" + path + "' line " + std::to_string(line_no) +
                                ": expected two numeric columns");
        double extra = 0.0;
        if (row >> extra)
            throw DataFileError("data file '" + path + "' line " + std::to_string(line_no) +
                                ": expected exactly two columns");
        data.xs.push_back(x);
        data.ys.push_back(y);
    }
    if (data.xs.size() < 2) throw DataFileError("data file '" + path + "' needs at least 2 rows");
    for (std::size_t i = 0; i + 1 < data.xs.size(); ++i)
        if (!(data.xs[i] < data.xs[i + 1]))
            throw DataFileError("data file '" + path + "': abscissae must ascend strictly");
    return data;
}

void require_equidistant(const std::vector<double>& xs, const std::string& method) {
    const std::size_t n = xs.size() - 1;
    const double mean = (xs.back() - xs.front()) / static_cast<double>(n);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double h = xs[i + 1] - xs[i];
        if (std::abs(h - mean) > 1e-8 * mean)
            throw DataFileError("method '" + method + "' needs equidistant abscissae; spacing " +
                                std::to_string(h) + " at row " + std::to_string(i + 1) +
                                " deviates from the mean " + std::to_string(mean) +
                                " by more than 1e-8 relative");
    }
}

void require_chebyshev_spacing(const std::vector<double>& unit_xs, int kind,
                               const std::string& method) {
    const int n = static_cast<int>(unit_xs.size()) - 1;
    const swi::NodeSet expected =
        swi::make_nodes(kind == 1 ? swi::NodeFamily::Cheb1 : swi::NodeFamily::Cheb2, n);
    for (int i = 0; i <= n; ++i) {
        // Data files ascend; Chebyshev index order descends.
        if (std::abs(unit_xs[n - i] - expected.nodes[i]) > 1e-6)
            throw DataFileError("method '" + method +
                                "' needs abscissae at the matching Chebyshev nodes "
                                "(ascending); deviation at row " +
                                std::to_string(n - i) + " exceeds 1e-6");
    }
}

struct InterpolateOptions {
    std::string method = "swi1";
    int function_id = 0;
    std::string data_path;
    int n = 0;
    std::vector<double> at;
    bool dense_grid = false;
    std::string interval;
    int grid_points = default_grid_points();
    OutputTarget out;
};

/// Builds the evaluator and the coordinate map for `interpolate`, from either
/// a benchmark function or a data file.
struct PreparedInterpolation {
    swi::Interpolant interpolant;
    swi::IntervalMap map;  // user coordinates <-> [-1, 1]
};

PreparedInterpolation prepare_benchmark(const InterpolateOptions& opt) {
    const swi::IntervalMap map = opt.interval.empty()
                                     ? swi::IntervalMap(-1.0, 1.0)
                                     : [&] {
                                           const auto [a, b] = parse_interval(opt.interval);
                                           return swi::IntervalMap(a, b);
                                       }();
    if (opt.n < 1) throw CLI::ValidationError("--n", "degree must be at least 1");
    auto f = [&](double x) { return swi::benchmark(opt.function_id, x); };
    const std::string& m = opt.method;
    if (m == "classical")
        return {swi::classical_interpolant(
                    swi::sample_benchmark(opt.function_id,
                                          swi::make_nodes(swi::NodeFamily::Equidistant, opt.n))),
                map};
    if (m == "bary")
        return {swi::barycentric_interpolant(
                    swi::sample_benchmark(opt.function_id,
                                          swi::make_nodes(swi::NodeFamily::Equidistant, opt.n))),
                map};
    if (m == "ci1" || m == "ci2")
        return {swi::build_method(m == "ci1" ? swi::Method::Ci1 : swi::Method::Ci2, f, opt.n), map};
    if (m == "swi1" || m == "swi2")
        return {swi::build_method(m == "swi1" ? swi::Method::Swi1 : swi::Method::Swi2, f, opt.n),
                map};
    throw CLI::ValidationError("--method",
                               "expected one of classical, bary, ci1, ci2, swi1, swi2");
}

PreparedInterpolation prepare_data(const InterpolateOptions& opt) {
    const DataFile data = load_data_file(opt.data_path);
    if (!opt.interval.empty())
        throw CLI::ValidationError("--interval",
                                   "the interval is inferred from the data file abscissae");
    const swi::IntervalMap map(data.xs.front(), data.xs.back());
    const int n = static_cast<int>(data.xs.size()) - 1;

    std::vector<double> unit_xs(data.xs.size());
    for (std::size_t i = 0; i < data.xs.size(); ++i) unit_xs[i] = map.to_unit(data.xs[i]);
    unit_xs.front() = -1.0;
    unit_xs.back() = 1.0;

    const std::string& m = opt.method;
    if (m == "swi1" || m == "swi2") {
        require_equidistant(data.xs, m);
        // Nominally equidistant data snaps onto the canonical unit nodes.
        swi::SampleSet samples{swi::make_nodes(swi::NodeFamily::Equidistant, n), data.ys};
        return {swi::swi_interpolant(m == "swi1" ? 1 : 2, std::move(samples)), map};
    }
    if (m == "ci1" || m == "ci2") {
        const int kind = m == "ci1" ? 1 : 2;
        require_chebyshev_spacing(unit_xs, kind, m);
        const swi::NodeFamily family = kind == 1 ? swi::NodeFamily::Cheb1 : swi::NodeFamily::Cheb2;
        // Reverse into Chebyshev index order (decreasing abscissae).
        std::vector<double> ys(data.ys.rbegin(), data.ys.rend());
        swi::SampleSet samples{swi::make_nodes(family, n), std::move(ys)};
        return {swi::chebyshev_interpolant(kind, samples), map};
    }
    if (m == "classical" || m == "bary") {
        swi::SampleSet samples{swi::NodeSet{swi::NodeFamily::Custom, n, std::move(unit_xs)},
                               data.ys};
        return {m == "classical" ? swi::classical_interpolant(std::move(samples))
                                 : swi::barycentric_interpolant(std::move(samples)),
                map};
    }
    throw CLI::ValidationError("--method",
                               "expected one of classical, bary, ci1, ci2, swi1, swi2");
}

void run_interpolate(const InterpolateOptions& opt) {
    const PreparedInterpolation prepared =
        opt.data_path.empty() ? prepare_benchmark(opt) : prepare_data(opt);
    if (opt.at.empty() && !opt.dense_grid)
        throw CLI::ValidationError("--at", "give at least one query point or --dense-grid");

    std::vector<double> queries = opt.at;
    if (opt.dense_grid) {
        const swi::EvalGrid grid(opt.grid_points);
        for (double x : grid.points()) queries.push_back(prepared.map.from_unit(x));
    }
    opt.out.write([&](std::ostream& os) {
        os << "x,value\n";
        for (double x_user : queries) {
            double x = prepared.map.to_unit(x_user);
            // from_unit(to_unit(.)) can overshoot the endpoints by an ulp
            if (x > 1.0 && x < 1.0 + 1e-12) x = 1.0;
            if (x < -1.0 && x > -1.0 - 1e-12) x = -1.0;
            os << swi::detail::format_double(x_user) << ','
               << swi::detail::format_double(prepared.interpolant(x)) << '\n';
        }
    });
}

struct SweepOptions {
    int function_id = 0;
    std::string n_range;
    std::vector<std::string> methods;
    int grid_points = default_grid_points();
    OutputTarget out;
    bool with_partition = false;
};

void run_sweep_command(const SweepOptions& opt, const std::vector<std::string>& default_methods) {
    const DegreeRange range = parse_degree_range(opt.n_range);
    const auto& tokens = opt.methods.empty() ? default_methods : opt.methods;
    std::vector<swi::Method> methods;
    for (const auto& token : tokens) methods.push_back(swi::method_from_token(token));
    const swi::EvalGrid grid(opt.grid_points);
    const auto records = swi::run_sweep(opt.function_id, methods, range.from, range.to, range.step,
                                        grid, opt.with_partition);
    opt.out.write([&](std::ostream& os) {
        swi::export_csv(std::span<const swi::SweepRecord>(records), os);
    });
}

struct MinDegreeOptions {
    int function_id = 0;
    std::vector<std::string> families;
    std::vector<std::string> metrics;
    std::vector<double> epsilons;
    int n_max = 700;
    int grid_points = default_grid_points();
    OutputTarget out;
};

int run_min_degree(const MinDegreeOptions& opt) {
    const std::vector<std::string> families =
        opt.families.empty() ? std::vector<std::string>{"ci", "swi"} : opt.families;
    const std::vector<std::string> metrics =
        opt.metrics.empty() ? std::vector<std::string>{"max", "cumulative"} : opt.metrics;
    const std::vector<double> epsilons =
        opt.epsilons.empty() ? std::vector<double>{0.1, 0.01, 0.001} : opt.epsilons;
    const swi::EvalGrid grid(opt.grid_points);

    std::vector<swi::MinimalDegreeQuery> queries;
    for (const auto& metric : metrics)
        for (double eps : epsilons) queries.push_back({swi::metric_from_token(metric), eps});

    std::vector<swi::MinimalDegreeRecord> records;
    bool all_reached = true;
    for (const auto& family_token : families) {
        const swi::Family family = swi::family_from_token(family_token);
        const auto scan =
            swi::minimal_degree_scan(opt.function_id, family, queries, opt.n_max, grid);
        for (std::size_t q = 0; q < queries.size(); ++q) {
            if (scan.degree[q]) {
                records.push_back(swi::MinimalDegreeRecord{opt.function_id, queries[q].metric,
                                                           queries[q].epsilon, family,
                                                           *scan.degree[q]});
            } else {
                all_reached = false;
                std::cerr << "not reached: function " << opt.function_id << ", "
                          << swi::family_token(family) << ", "
                          << swi::metric_token(queries[q].metric) << ", epsilon "
                          << queries[q].epsilon << " within n_max " << opt.n_max
                          << " (best error " << scan.best_error[q] << ")\n";
            }
        }
    }
    opt.out.write([&](std::ostream& os) {
        swi::export_csv(std::span<const swi::MinimalDegreeRecord>(records), os);
    });
    return all_reached ? 0 : 2;
}

struct Table2Options {
    std::vector<int> functions;
    std::vector<double> epsilons;
    int n_max = 700;
    int grid_points = default_grid_points();
    OutputTarget out;
};

/// Wide CSV, one row per function; unreached cells carry the '-' sentinel.
void run_table2(const Table2Options& opt) {
    std::vector<int> functions = opt.functions;
    if (functions.empty())
        for (int fid = 1; fid <= swi::kBenchmarkCount; ++fid) functions.push_back(fid);
    const std::vector<double> epsilons =
        opt.epsilons.empty() ? std::vector<double>{0.1, 0.01, 0.001} : opt.epsilons;
    const swi::EvalGrid grid(opt.grid_points);

    std::vector<swi::MinimalDegreeQuery> queries;
    for (swi::Metric metric : {swi::Metric::Max, swi::Metric::Cumulative})
        for (double eps : epsilons) queries.push_back({metric, eps});

    std::ostringstream header;
    header << "function";
    for (const auto& q : queries) {
        std::ostringstream eps;
        eps << q.epsilon;
        header << ',' << swi::metric_token(q.metric) << '_' << eps.str() << "_ci";
        header << ',' << swi::metric_token(q.metric) << '_' << eps.str() << "_swi";
    }

    std::vector<std::string> rows;
    for (int fid : functions) {
        const auto ci = swi::minimal_degree_scan(fid, swi::Family::Ci, queries, opt.n_max, grid);
        const auto sw = swi::minimal_degree_scan(fid, swi::Family::Swi, queries, opt.n_max, grid);
        std::ostringstream row;
        row << fid;
        for (std::size_t q = 0; q < queries.size(); ++q) {
            row << ',';
            if (ci.degree[q])
                row << *ci.degree[q];
            else
                row << '-';
            row << ',';
            if (sw.degree[q])
                row << *sw.degree[q];
            else
                row << '-';
        }
        rows.push_back(row.str());
    }
    opt.out.write([&](std::ostream& os) {
        os << header.str() << '\n';
        for (const auto& row : rows) os << row << '\n';
    });
}

struct RobustnessOptions {
    int function_id = 0;
    int n = 12;
    int digits = 2;
    std::vector<std::string> methods;
    int grid_points = default_grid_points();
    OutputTarget out;
};

void run_robustness(const RobustnessOptions& opt) {
    const std::vector<std::string> methods =
        opt.methods.empty() ? std::vector<std::string>{"swi1", "swi2"} : opt.methods;
    const swi::EvalGrid grid(opt.grid_points);
    std::vector<swi::RobustnessRecord> records;
    for (const auto& m : methods) {
        if (m != "swi1" && m != "swi2")
            throw CLI::ValidationError("--method", "robustness supports swi1 and swi2");
        records.push_back(
            swi::robustness_run(opt.function_id, m == "swi1" ? 1 : 2, opt.n, opt.digits, grid));
    }
    opt.out.write([&](std::ostream& os) {
        swi::export_csv(std::span<const swi::RobustnessRecord>(records), os);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric wave interpolation: stable global interpolation on "
                 "equidistant points, with Chebyshev and Lagrange baselines and a "
                 "benchmark harness"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    const std::string grid_help =
        "odd evaluation grid size on [-1,1] (env SWI_GRID_POINTS overrides the default)";

    InterpolateOptions interp;
    CLI::App* cmd_interp = app.add_subcommand(
        "interpolate", "evaluate one interpolant at query points or on the dense grid");
    cmd_interp->add_option("--method", interp.method,
                           "classical | bary | ci1 | ci2 | swi1 | swi2");
    CLI::Option* fopt = cmd_interp->add_option("--function", interp.function_id,
                                               "benchmark function id (1..10)");
    CLI::Option* dopt = cmd_interp->add_option("--data", interp.data_path,
                                               "two-column data file (x y, '#' comments)");
    CLI::Option* nopt = cmd_interp->add_option("--n", interp.n, "polynomial degree");
    cmd_interp->add_option("--at", interp.at, "query point (repeatable)");
    cmd_interp->add_flag("--dense-grid", interp.dense_grid, "also evaluate on the dense grid");
    cmd_interp->add_option("--interval", interp.interval,
                           "a,b: interpolate the benchmark rescaled onto [a,b]");
    cmd_interp->add_option("--grid-points", interp.grid_points, grid_help);
    cmd_interp->add_option("--out", interp.out.path, "output CSV path (default stdout)");
    fopt->excludes(dopt);
    nopt->excludes(dopt);

    SweepOptions sweep;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "errors versus degree for the selected methods");
    cmd_sweep->add_option("--function", sweep.function_id, "benchmark function id (1..10)")
        ->required();
    cmd_sweep->add_option("--n-range", sweep.n_range, "degree range A..B[:step]")->required();
    cmd_sweep->add_option("--method", sweep.methods,
                          "ci1 | ci2 | swi1 | swi2 | avg_ci | avg_swi | classical_equid "
                          "(repeatable; default ci1 ci2 swi1 swi2)");
    cmd_sweep->add_option("--grid-points", sweep.grid_points, grid_help);
    cmd_sweep->add_option("--out", sweep.out.path, "output CSV path (default stdout)");

    MinDegreeOptions mindeg;
    CLI::App* cmd_mindeg = app.add_subcommand(
        "min-degree", "smallest degree whose family-best error first drops below epsilon");
    cmd_mindeg->add_option("--function", mindeg.function_id, "benchmark function id (1..10)")
        ->required();
    cmd_mindeg->add_option("--family", mindeg.families, "ci | swi (repeatable; default both)");
    cmd_mindeg->add_option("--metric", mindeg.metrics,
                           "max | cumulative (repeatable; default both)");
    cmd_mindeg->add_option("--epsilon", mindeg.epsilons,
                           "error threshold (repeatable; default 0.1 0.01 0.001)");
    cmd_mindeg->add_option("--n-max", mindeg.n_max, "search limit");
    cmd_mindeg->add_option("--grid-points", mindeg.grid_points, grid_help);
    cmd_mindeg->add_option("--out", mindeg.out.path, "output CSV path (default stdout)");

    Table2Options table2;
    CLI::App* cmd_table2 = app.add_subcommand(
        "table2", "minimal-degree table over all benchmark functions (CI and SWI side by side)");
    cmd_table2->add_option("--function", table2.functions,
                           "benchmark function id (repeatable; default all ten)");
    cmd_table2->add_option("--epsilon", table2.epsilons,
                           "error threshold (repeatable; default 0.1 0.01 0.001)");
    cmd_table2->add_option("--n-max", table2.n_max, "search limit per cell");
    cmd_table2->add_option("--grid-points", table2.grid_points, grid_help);
    cmd_table2->add_option("--out", table2.out.path, "output CSV path (default stdout)");

    RobustnessOptions robust;
    CLI::App* cmd_robust = app.add_subcommand(
        "robustness", "deviation of the interpolant when samples are rounded to few digits");
    cmd_robust->add_option("--function", robust.function_id, "benchmark function id (1..10)")
        ->required();
    cmd_robust->add_option("--n", robust.n, "polynomial degree");
    cmd_robust->add_option("--digits", robust.digits, "significant digits kept in the samples");
    cmd_robust->add_option("--method", robust.methods, "swi1 | swi2 (repeatable; default both)");
    cmd_robust->add_option("--grid-points", robust.grid_points, grid_help);
    cmd_robust->add_option("--out", robust.out.path, "output CSV path (default stdout)");

    SweepOptions partition;
    partition.with_partition = true;
    partition.n_range = "30..120";
    CLI::App* cmd_partition = app.add_subcommand(
        "partition", "cumulative error split into endpoint and central regions");
    cmd_partition->add_option("--function", partition.function_id, "benchmark function id (1..10)")
        ->required();
    cmd_partition->add_option("--n-range", partition.n_range, "degree range A..B[:step]");
    cmd_partition->add_option("--method", partition.methods,
                              "methods to partition (repeatable; default avg_ci avg_swi)");
    cmd_partition->add_option("--grid-points", partition.grid_points, grid_help);
    cmd_partition->add_option("--out", partition.out.path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_interp->parsed()) {
            if (interp.data_path.empty() && interp.function_id == 0)
                throw CLI::ValidationError("--function", "give --function or --data");
            run_interpolate(interp);
        } else if (cmd_sweep->parsed()) {
            run_sweep_command(sweep, {"ci1", "ci2", "swi1", "swi2"});
        } else if (cmd_mindeg->parsed()) {
            return run_min_degree(mindeg);
        } else if (cmd_table2->parsed()) {
            run_table2(table2);
        } else if (cmd_robust->parsed()) {
            run_robustness(robust);
        } else if (cmd_partition->parsed()) {
            run_sweep_command(partition, {"avg_ci", "avg_swi"});
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const swi::NotReachedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
