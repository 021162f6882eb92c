#include "blockivp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blockivp {

namespace {

constexpr double kDegenerateError = 1e-14;

double aggregate_norm(const Eigen::MatrixXd& pointwise) {
    return std::sqrt(pointwise.array().square().sum());
}

ErrorReport report_against(const Trajectory& traj,
                           const std::vector<double>& reporting_times,
                           const std::function<Eigen::VectorXd(double)>& reference,
                           NormKind kind) {
    ErrorReport report;
    report.times = reporting_times;
    report.norm_kind = kind;
    report.pointwise.resize(static_cast<Eigen::Index>(reporting_times.size()),
                            traj.dimension);
    for (std::size_t i = 0; i < reporting_times.size(); ++i) {
        const double t = reporting_times[i];
        const Eigen::VectorXd diff = traj.state_at(t) - reference(t);
        report.pointwise.row(static_cast<Eigen::Index>(i)) = diff.cwiseAbs();
    }
    report.norm = aggregate_norm(report.pointwise);
    return report;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Trajectory rk4_reference(const IvpProblem& problem, int steps_per_unit) {
    if (steps_per_unit < 1) {
        throw Error(ErrorCode::InvalidArgument, "steps per unit must be >= 1");
    }
    const double a = problem.t_start;
    const double b = problem.t_end;
    const int steps = static_cast<int>(std::ceil((b - a) * steps_per_unit));
    const double h = (b - a) / steps;
    const int m = problem.dimension;

    Trajectory traj;
    traj.dimension = m;
    traj.domain_start = a;
    traj.domain_end = b;
    traj.initial = problem.initial;
    traj.times.reserve(static_cast<std::size_t>(steps));
    traj.block_index.assign(static_cast<std::size_t>(steps), 0);
    traj.values.resize(steps, m);

    Eigen::VectorXd x = problem.initial;
    for (int i = 0; i < steps; ++i) {
        const double t = a + i * h;
        const Eigen::VectorXd k1 = problem.rhs(x, t);
        const Eigen::VectorXd k2 = problem.rhs(x + 0.5 * h * k1, t + 0.5 * h);
        const Eigen::VectorXd k3 = problem.rhs(x + 0.5 * h * k2, t + 0.5 * h);
        const Eigen::VectorXd k4 = problem.rhs(x + h * k3, t + h);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!x.allFinite()) {
            throw Error(ErrorCode::NonFiniteState,
                        "reference integration overflowed at t = " + std::to_string(t + h));
        }
        traj.times.push_back(i + 1 < steps ? a + (i + 1) * h : b);
        traj.values.row(i) = x;
    }
    return traj;
}

ErrorReport error_report(const Trajectory& traj, const BenchmarkEntry& entry) {
    if (!entry.problem.exact) {
        throw Error(ErrorCode::InvalidArgument,
                    entry.name + " has no exact solution; compare to an oracle");
    }
    return report_against(traj, entry.reporting_times, entry.problem.exact,
                          entry.norm_kind);
}

ErrorReport error_report(const Trajectory& traj, const BenchmarkEntry& entry,
                         const Trajectory& oracle) {
    return report_against(
        traj, entry.reporting_times,
        [&oracle](double t) { return oracle.state_at(t); }, entry.norm_kind);
}

OrderEstimate empirical_order(const IvpProblem& problem,
                              const SolverConfig& base_config, int refinements,
                              int oracle_steps_per_unit) {
    if (refinements < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "need at least two refinements for a slope");
    }

    std::function<Eigen::VectorXd(double)> reference = problem.exact;
    Trajectory oracle;
    if (!reference) {
        oracle = rk4_reference(problem, oracle_steps_per_unit);
        reference = [&oracle](double t) { return oracle.state_at(t); };
    }

    // Errors are sampled at the coarsest partition's block boundaries; finer
    // runs share those nodes since the block count doubles each time.
    const int base_blocks = base_config.block_count;
    std::vector<double> reporting;
    const double width = problem.t_end - problem.t_start;
    for (int k = 1; k <= base_blocks; ++k) {
        reporting.push_back(k == base_blocks ? problem.t_end
                                             : problem.t_start + width * k / base_blocks);
    }

    OrderEstimate est;
    int blocks = base_blocks;
    for (int r = 0; r < refinements; ++r, blocks *= 2) {
        SolverConfig config = base_config;
        config.block_count = blocks;
        config.boundaries.clear();
        const Trajectory traj = march(problem, config);
        const NormKind kind =
            problem.dimension == 1 ? NormKind::Euclidean : NormKind::Frobenius;
        est.errors.push_back(report_against(traj, reporting, reference, kind).norm);
        est.step_sizes.push_back(width / blocks / base_config.points_per_block);
    }

    std::vector<double> usable;
    for (std::size_t i = 0; i + 1 < est.errors.size(); ++i) {
        const bool degenerate = est.errors[i] < kDegenerateError ||
                                est.errors[i + 1] < kDegenerateError;
        est.slope_degenerate.push_back(degenerate);
        if (degenerate) {
            est.slopes.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            est.slopes.push_back(std::log2(est.errors[i] / est.errors[i + 1]));
            usable.push_back(est.slopes.back());
        }
    }
    est.degenerate = usable.empty();
    est.estimated_order =
        est.degenerate ? std::numeric_limits<double>::quiet_NaN() : median(usable);
    return est;
}

double stability_probe(const IvpProblem& problem, const SolverConfig& config,
                       double delta) {
    if (!(delta > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "perturbation must be positive");
    }
    const Trajectory base = march(problem, config);
    IvpProblem perturbed = problem;
    perturbed.initial = problem.initial.array() + delta;
    const Trajectory shifted = march(perturbed, config);
    return (shifted.values - base.values).cwiseAbs().maxCoeff() / delta;
}

}  // namespace blockivp
