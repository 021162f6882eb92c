#pragma once

#include <vector>

#include <Eigen/Dense>

#include "blockivp/problems.hpp"
#include "blockivp/solver.hpp"

namespace blockivp {

/// Pointwise absolute errors at the reporting times plus their aggregate
/// norm (Euclidean over times for scalar problems, Frobenius over
/// times x components otherwise).
struct ErrorReport {
    std::vector<double> times;
    Eigen::MatrixXd pointwise;  // times.size() x dimension, entrywise >= 0
    double norm = 0.0;
    NormKind norm_kind = NormKind::Euclidean;
};

/// Empirical convergence order from successive halvings of the block width.
struct OrderEstimate {
    std::vector<double> step_sizes;       // node spacing per run, decreasing
    std::vector<double> errors;           // matching error norms
    std::vector<double> slopes;           // log2(e_i / e_{i+1}); NaN when degenerate
    std::vector<bool> slope_degenerate;   // pair involves an error below 1e-14
    double estimated_order = 0.0;         // median of the usable slopes
    bool degenerate = false;              // no usable slope at all
};

/// Classic fixed-step fourth-order Runge-Kutta reference run. The step is
/// (b-a)/ceil((b-a)*steps_per_unit); node times exclude the anchor, matching
/// the Trajectory convention. Throws NonFiniteState if the state overflows.
Trajectory rk4_reference(const IvpProblem& problem, int steps_per_unit);

/// Errors of `traj` against the entry's exact solution.
ErrorReport error_report(const Trajectory& traj, const BenchmarkEntry& entry);

/// Errors of `traj` against an oracle trajectory (looked up at the entry's
/// reporting times).
ErrorReport error_report(const Trajectory& traj, const BenchmarkEntry& entry,
                         const Trajectory& oracle);

/// Runs march at M, 2M, 4M, ... blocks and fits slopes to the error norms
/// measured at the coarsest partition's block boundaries. Falls back to an
/// RK4 reference when the problem has no exact solution.
OrderEstimate empirical_order(const IvpProblem& problem,
                              const SolverConfig& base_config, int refinements,
                              int oracle_steps_per_unit = 100000);

/// Amplification ||traj(alpha + delta) - traj(alpha)||_inf / delta of a
/// uniform perturbation of the initial condition.
double stability_probe(const IvpProblem& problem, const SolverConfig& config,
                       double delta);

}  // namespace blockivp
