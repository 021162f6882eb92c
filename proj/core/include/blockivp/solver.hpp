#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "blockivp/diffmat.hpp"
#include "blockivp/errors.hpp"

namespace blockivp {

using RhsFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>;
using JacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&, double)>;
using TimeFn = std::function<Eigen::VectorXd(double)>;

/// Initial value problem x' = f(x, t), x(a) = alpha on [a, b].
struct IvpProblem {
    int dimension = 1;
    RhsFn rhs;
    JacobianFn jacobian;     // optional analytic d f_i / d x_j
    double t_start = 0.0;
    double t_end = 1.0;
    Eigen::VectorXd initial;
    TimeFn exact;            // optional closed-form solution

    /// Marks f(x, t) = A x + phi(t); enables the direct linear block solve.
    struct LinearPart {
        Eigen::MatrixXd matrix;
        TimeFn forcing;
    };
    std::optional<LinearPart> linear_part;
};

enum class JacobianMode {
    Analytic,          // use problem.jacobian when present, else differences
    FiniteDifference,  // always use forward differences
};

struct SolverConfig {
    int points_per_block = 5;       // N unknowns per block (N+1 nodes)
    int block_count = 1;            // uniform partition when boundaries empty
    std::vector<double> boundaries; // optional explicit partition of [a, b]
    double newton_tol = 1e-12;
    int newton_max_iter = 25;
    JacobianMode jacobian_mode = JacobianMode::Analytic;
    double fd_epsilon = 0.0;        // 0: sqrt(eps) * max(1, |x_j|) per column
};

/// Solution of one block system D xi - f_xi = -alpha d.
struct BlockSolution {
    Eigen::MatrixXd xi;         // N x m, row j-1 holds the state at node t_j
    int iterations = 0;         // Newton iterations (0 on the linear path)
    double residual_norm = 0.0; // final max-norm of the assembled residual
};

/// Approximate solution at the interior nodes of every block.
///
/// The anchor (t_start, initial) is implicit: times begin at the first
/// interior node of the first block and end exactly at t_end.
struct Trajectory {
    std::vector<double> times;
    Eigen::MatrixXd values;         // times.size() x dimension
    std::vector<int> block_index;   // originating block, 0-based
    int dimension = 1;
    double domain_start = 0.0;
    double domain_end = 0.0;
    Eigen::VectorXd initial;
    SolverConfig config;

    std::size_t size() const { return times.size(); }

    /// Index of the node matching `t` within `tol`; throws MissingNode.
    std::size_t index_of_time(double t, double tol = 1e-9) const;

    Eigen::VectorXd state_at(double t, double tol = 1e-9) const;
};

/// Forward-difference Jacobian estimate with a fixed step per column.
Eigen::MatrixXd fd_jacobian(const RhsFn& rhs, const Eigen::VectorXd& x, double t,
                            double eps);

/// Direct solve of the affine block system
///   (D (x) I - I (x) A) xi = -(d (x) alpha) + phi_stacked
/// in node-major stacking; reduces to (D - kappa I) xi = -alpha d + phi for
/// scalar problems. Throws SingularSystem when a pivot falls below
/// 1e3 * eps * ||K||, which signals an eigenvalue collision with D.
BlockSolution solve_block_linear(const DiffMatrices& matrices,
                                 const Eigen::MatrixXd& A, const TimeFn& phi,
                                 const Eigen::VectorXd& alpha);

/// Newton iteration on the block system: each sweep solves
///   (D (x) I - blockdiag(J_j)) eta = -(D xi - f_xi + alpha d)
/// starting from xi identically equal to alpha, stopping when
/// ||eta||_inf <= newton_tol * max(1, ||xi||_inf).
BlockSolution solve_block_newton(const DiffMatrices& matrices,
                                 const IvpProblem& problem,
                                 const Eigen::VectorXd& alpha,
                                 const SolverConfig& config);

/// Marches block-by-block across [t_start, t_end]; each block's last value
/// becomes the next block's anchor. Block failures are rethrown with the
/// failing block identified.
Trajectory march(const IvpProblem& problem, const SolverConfig& config);

}  // namespace blockivp
