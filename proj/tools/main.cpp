// Command-line front end: runs the benchmark problems, reproduces their
// error tables, estimates convergence orders, and emits CSV for scripting.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockivp/analysis.hpp"
#include "blockivp/problems.hpp"
#include "blockivp/solver.hpp"

namespace {

using namespace blockivp;

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 1,
    kUnknownProblem = 2,
    kSolverFailure = 3,
};

struct RunRequest {
    std::string problem;
    int blocks = 0;          // 0: registry default
    int points = 5;
    double newton_tol = 1e-12;
    int max_iter = 25;
    std::string output_format = "table";
    std::string compare = "auto";  // exact | oracle | none | auto
    int oracle_steps = 0;          // 0: registry default
    std::string out_path;
};

// Round-trip-exact doubles; to_chars is locale-independent by definition.
std::string g17(double v) {
    char buf[64];
    const auto result =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

int map_exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownProblem:
            return kUnknownProblem;
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidInterval:
        case ErrorCode::InvalidCount:
        case ErrorCode::MissingNode:
            return kArgumentError;
        default:
            return kSolverFailure;
    }
}

SolverConfig make_config(const RunRequest& req, const BenchmarkEntry& entry) {
    SolverConfig config;
    config.points_per_block = req.points;
    config.block_count = req.blocks > 0 ? req.blocks : entry.default_blocks;
    config.newton_tol = req.newton_tol;
    config.newton_max_iter = req.max_iter;
    return config;
}

void write_csv(std::ostream& os, const BenchmarkEntry& entry, const Trajectory& traj,
               const std::optional<ErrorReport>& report,
               const std::function<Eigen::VectorXd(double)>& reference) {
    os << "t,component,value,reference,abs_error\n";
    for (std::size_t i = 0; i < entry.reporting_times.size(); ++i) {
        const double t = entry.reporting_times[i];
        const Eigen::VectorXd value = traj.state_at(t);
        Eigen::VectorXd ref;
        if (report) ref = reference(t);
        for (int c = 0; c < traj.dimension; ++c) {
            os << g17(t) << ',' << c << ',' << g17(value(c)) << ',';
            if (report) {
                os << g17(ref(c)) << ','
                   << g17(report->pointwise(static_cast<Eigen::Index>(i), c));
            } else {
                os << ',';
            }
            os << '\n';
        }
    }
}

void write_table(std::ostream& os, const BenchmarkEntry& entry, const Trajectory& traj,
                 const std::optional<ErrorReport>& report) {
    os << "# " << entry.name << ": blocks=" << traj.config.block_count
       << " points=" << traj.config.points_per_block << '\n';
    os << "t";
    for (int c = 0; c < traj.dimension; ++c) {
        os << "\tx" << (traj.dimension > 1 ? std::to_string(c + 1) : "");
        if (report) os << "\tE" << (traj.dimension > 1 ? std::to_string(c + 1) : "");
    }
    os << '\n';
    for (std::size_t i = 0; i < entry.reporting_times.size(); ++i) {
        const double t = entry.reporting_times[i];
        const Eigen::VectorXd value = traj.state_at(t);
        os << t;
        for (int c = 0; c < traj.dimension; ++c) {
            os << '\t' << sci(value(c));
            if (report) os << '\t' << sci(report->pointwise(static_cast<Eigen::Index>(i), c));
        }
        os << '\n';
    }
    if (report) {
        os << "||E|| = " << sci(report->norm) << " ("
           << (report->norm_kind == NormKind::Frobenius ? "frobenius" : "euclidean")
           << ")\n";
    }
}

int cmd_run(const RunRequest& req) {
    BenchmarkEntry entry = problems::get(req.problem);
    const SolverConfig config = make_config(req, entry);
    const Trajectory traj = march(entry.problem, config);

    std::string compare = req.compare;
    if (compare == "auto") compare = entry.problem.exact ? "exact" : "oracle";
    if (compare == "exact" && !entry.problem.exact) {
        throw Error(ErrorCode::InvalidArgument,
                    req.problem + " has no exact solution; use --compare oracle");
    }

    std::optional<ErrorReport> report;
    std::function<Eigen::VectorXd(double)> reference;
    Trajectory oracle;
    if (compare == "exact") {
        report = error_report(traj, entry);
        reference = entry.problem.exact;
    } else if (compare == "oracle") {
        const int steps = req.oracle_steps > 0 ? req.oracle_steps : entry.default_oracle_steps;
        oracle = rk4_reference(entry.problem, steps);
        report = error_report(traj, entry, oracle);
        reference = [&oracle](double t) { return oracle.state_at(t); };
    } else if (compare != "none") {
        throw Error(ErrorCode::InvalidArgument, "unknown --compare mode: " + compare);
    }

    std::ostringstream body;
    if (req.output_format == "csv") {
        write_csv(body, entry, traj, report, reference);
    } else if (req.output_format == "table") {
        write_table(body, entry, traj, report);
    } else {
        throw Error(ErrorCode::InvalidArgument,
                    "unknown --output format: " + req.output_format);
    }

    if (!req.out_path.empty()) {
        std::ofstream file(req.out_path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::InvalidArgument, "cannot open " + req.out_path);
        }
        file << body.str();
    } else {
        std::cout << body.str();
    }
    return kOk;
}

int cmd_order(const RunRequest& req, int refinements) {
    BenchmarkEntry entry = problems::get(req.problem);
    SolverConfig config = make_config(req, entry);
    if (req.blocks == 0) config.block_count = 2;

    const int steps = req.oracle_steps > 0 ? req.oracle_steps : entry.default_oracle_steps;
    const OrderEstimate est =
        empirical_order(entry.problem, config, refinements, steps);

    std::cout << "# " << entry.name << ": points=" << config.points_per_block
              << " base blocks=" << config.block_count << '\n';
    std::cout << "h\terror\n";
    for (std::size_t i = 0; i < est.errors.size(); ++i) {
        std::cout << sci(est.step_sizes[i]) << '\t' << sci(est.errors[i]) << '\n';
    }
    std::cout << "slopes:";
    for (std::size_t i = 0; i < est.slopes.size(); ++i) {
        if (est.slope_degenerate[i]) {
            std::cout << " degenerate";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " %.3f", est.slopes[i]);
            std::cout << buf;
        }
    }
    std::cout << '\n';
    if (est.degenerate) {
        std::cout << "estimated order: degenerate (errors at rounding floor)\n";
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", est.estimated_order);
        std::cout << "estimated order: " << buf << '\n';
    }
    return kOk;
}

int cmd_list() {
    for (const auto& name : problems::list()) std::cout << name << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-implicit collocation solver for initial value problems"};
    app.require_subcommand(1);

    RunRequest req;
    int refinements = 3;

    auto* run = app.add_subcommand("run", "Solve a benchmark and report errors");
    run->add_option("problem,--problem", req.problem, "Benchmark name (see `list`)")
        ->required();
    run->add_option("--blocks", req.blocks, "Number of blocks (default: per problem)");
    run->add_option("--points", req.points, "Unknowns per block N");
    run->add_option("--newton-tol", req.newton_tol, "Newton update tolerance");
    run->add_option("--max-iter", req.max_iter, "Newton iteration cap");
    run->add_option("--compare", req.compare, "exact | oracle | none")
        ->check(CLI::IsMember({"exact", "oracle", "none", "auto"}));
    run->add_option("--oracle-steps", req.oracle_steps, "RK4 steps per unit time");
    run->add_option("--output", req.output_format, "table | csv")
        ->check(CLI::IsMember({"table", "csv"}));
    run->add_option("--out", req.out_path, "Write the report to a file");

    auto* order = app.add_subcommand("order", "Estimate the convergence order");
    order->add_option("problem,--problem", req.problem, "Benchmark name")->required();
    order->add_option("--points", req.points, "Unknowns per block N");
    order->add_option("--refinements", refinements, "Number of runs (>= 2)");
    order->add_option("--blocks", req.blocks, "Base block count (default 2)");
    order->add_option("--newton-tol", req.newton_tol, "Newton update tolerance");
    order->add_option("--max-iter", req.max_iter, "Newton iteration cap");
    order->add_option("--oracle-steps", req.oracle_steps, "RK4 steps per unit time");

    auto* list = app.add_subcommand("list", "Print the benchmark names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kArgumentError;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (order->parsed()) {
            if (refinements < 2) {
                std::cerr << "error: --refinements must be at least 2\n";
                return kArgumentError;
            }
            return cmd_order(req, refinements);
        }
        return cmd_run(req);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return map_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSolverFailure;
    }
}
