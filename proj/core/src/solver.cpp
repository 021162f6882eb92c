#include "blockivp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace blockivp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// LU solve with an explicit smallest-pivot check; Eigen's partial-pivot LU
// happily factors singular matrices, so the guard lives here.
Eigen::VectorXd solve_checked(const Eigen::MatrixXd& K, const Eigen::VectorXd& rhs) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
    const double scale = K.cwiseAbs().maxCoeff();
    const double pivot_floor = 1e3 * kEps * scale;
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() <= pivot_floor) {
        throw Error(ErrorCode::SingularSystem,
                    "block system is numerically singular (pivot below " +
                        std::to_string(pivot_floor) + ")");
    }
    return lu.solve(rhs);
}

// K = D (x) I_m - blockdiag(J_1..J_N), node-major stacking.
Eigen::MatrixXd assemble_system(const Eigen::MatrixXd& D,
                                const std::vector<Eigen::MatrixXd>& node_jacobians,
                                int m) {
    const int n = static_cast<int>(D.rows());
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n * m, n * m);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            for (int c = 0; c < m; ++c) K(j * m + c, k * m + c) = D(j, k);
        }
        K.block(j * m, j * m, m, m) -= node_jacobians[static_cast<std::size_t>(j)];
    }
    return K;
}

Eigen::VectorXd column_scaled_fd_jacobian_eps(const Eigen::VectorXd& x, double fixed) {
    const int m = static_cast<int>(x.size());
    Eigen::VectorXd eps(m);
    const double root = std::sqrt(kEps);
    for (int j = 0; j < m; ++j) {
        eps(j) = fixed > 0.0 ? fixed : root * std::max(1.0, std::abs(x(j)));
    }
    return eps;
}

Eigen::MatrixXd node_jacobian(const IvpProblem& problem, const SolverConfig& config,
                              const Eigen::VectorXd& x, double t) {
    if (config.jacobian_mode == JacobianMode::Analytic && problem.jacobian) {
        return problem.jacobian(x, t);
    }
    const int m = problem.dimension;
    const Eigen::VectorXd eps = column_scaled_fd_jacobian_eps(x, config.fd_epsilon);
    const Eigen::VectorXd base = problem.rhs(x, t);
    Eigen::MatrixXd jac(m, m);
    Eigen::VectorXd xp = x;
    for (int j = 0; j < m; ++j) {
        xp(j) = x(j) + eps(j);
        jac.col(j) = (problem.rhs(xp, t) - base) / eps(j);
        xp(j) = x(j);
    }
    return jac;
}

void validate_config(const SolverConfig& config, const IvpProblem& problem) {
    if (config.points_per_block < 1) {
        throw Error(ErrorCode::InvalidArgument, "points per block must be >= 1");
    }
    if (!(config.newton_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "newton tolerance must be positive");
    }
    if (config.newton_max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "newton max iterations must be >= 1");
    }
    if (config.boundaries.empty()) {
        if (config.block_count < 1) {
            throw Error(ErrorCode::InvalidArgument, "block count must be >= 1");
        }
        return;
    }
    const auto& b = config.boundaries;
    const double span = std::max({1.0, std::abs(problem.t_start), std::abs(problem.t_end)});
    if (b.size() < 2 || std::abs(b.front() - problem.t_start) > 1e-12 * span ||
        std::abs(b.back() - problem.t_end) > 1e-12 * span) {
        throw Error(ErrorCode::InvalidArgument,
                    "explicit boundaries must run from t_start to t_end");
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (!(b[i] < b[i + 1])) {
            throw Error(ErrorCode::InvalidArgument,
                        "explicit boundaries must be strictly increasing");
        }
    }
}

}  // namespace

std::size_t Trajectory::index_of_time(double t, double tol) const {
    auto it = std::lower_bound(times.begin(), times.end(), t - tol);
    if (it != times.end() && std::abs(*it - t) <= tol) {
        return static_cast<std::size_t>(it - times.begin());
    }
    std::ostringstream msg;
    msg << "time " << t << " is not a trajectory node";
    throw Error(ErrorCode::MissingNode, msg.str());
}

Eigen::VectorXd Trajectory::state_at(double t, double tol) const {
    return values.row(static_cast<Eigen::Index>(index_of_time(t, tol)));
}

Eigen::MatrixXd fd_jacobian(const RhsFn& rhs, const Eigen::VectorXd& x, double t,
                            double eps) {
    const int m = static_cast<int>(x.size());
    const Eigen::VectorXd base = rhs(x, t);
    Eigen::MatrixXd jac(m, m);
    Eigen::VectorXd xp = x;
    for (int j = 0; j < m; ++j) {
        xp(j) = x(j) + eps;
        jac.col(j) = (rhs(xp, t) - base) / eps;
        xp(j) = x(j);
    }
    return jac;
}

BlockSolution solve_block_linear(const DiffMatrices& matrices,
                                 const Eigen::MatrixXd& A, const TimeFn& phi,
                                 const Eigen::VectorXd& alpha) {
    const int n = matrices.nodes.interior_count();
    const int m = static_cast<int>(alpha.size());
    const auto& t = matrices.nodes.nodes;

    const std::vector<Eigen::MatrixXd> jac(static_cast<std::size_t>(n), A);
    const Eigen::MatrixXd K = assemble_system(matrices.interior, jac, m);

    // D xi - (A xi + phi) = -alpha d  =>  K xi = -(d (x) alpha) + phi_stacked
    Eigen::VectorXd rhs(n * m);
    for (int j = 0; j < n; ++j) {
        rhs.segment(j * m, m) =
            -matrices.coupling(j) * alpha + phi(t[static_cast<std::size_t>(j) + 1]);
    }

    const Eigen::VectorXd xi = solve_checked(K, rhs);

    BlockSolution sol;
    sol.xi.resize(n, m);
    for (int j = 0; j < n; ++j) sol.xi.row(j) = xi.segment(j * m, m);
    sol.iterations = 0;
    sol.residual_norm = (K * xi - rhs).cwiseAbs().maxCoeff();
    return sol;
}

BlockSolution solve_block_newton(const DiffMatrices& matrices,
                                 const IvpProblem& problem,
                                 const Eigen::VectorXd& alpha,
                                 const SolverConfig& config) {
    const int n = matrices.nodes.interior_count();
    const int m = problem.dimension;
    const auto& t = matrices.nodes.nodes;
    const Eigen::MatrixXd& D = matrices.interior;
    const Eigen::VectorXd& d = matrices.coupling;

    // xi^(0): every node value equals the anchor.
    Eigen::MatrixXd xi(n, m);
    for (int j = 0; j < n; ++j) xi.row(j) = alpha;

    const auto residual = [&](const Eigen::MatrixXd& state) {
        Eigen::MatrixXd f(n, m);
        for (int j = 0; j < n; ++j) {
            f.row(j) = problem.rhs(state.row(j), t[static_cast<std::size_t>(j) + 1]);
        }
        Eigen::MatrixXd r = D * state - f;
        for (int j = 0; j < n; ++j) r.row(j) += d(j) * alpha.transpose();
        return r;
    };

    BlockSolution sol;
    for (int iter = 1; iter <= config.newton_max_iter; ++iter) {
        std::vector<Eigen::MatrixXd> jac;
        jac.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            jac.push_back(node_jacobian(problem, config, xi.row(j),
                                        t[static_cast<std::size_t>(j) + 1]));
        }
        const Eigen::MatrixXd K = assemble_system(D, jac, m);
        const Eigen::MatrixXd r = residual(xi);

        Eigen::VectorXd rhs(n * m);
        for (int j = 0; j < n; ++j) rhs.segment(j * m, m) = -r.row(j);
        const Eigen::VectorXd eta = solve_checked(K, rhs);

        for (int j = 0; j < n; ++j) xi.row(j) += eta.segment(j * m, m);
        sol.iterations = iter;

        if (!xi.allFinite()) {
            throw Error(ErrorCode::NewtonDivergence,
                        "newton iterate became non-finite");
        }
        const double step = eta.cwiseAbs().maxCoeff();
        const double scale = std::max(1.0, xi.cwiseAbs().maxCoeff());
        if (step <= config.newton_tol * scale) {
            sol.xi = xi;
            sol.residual_norm = residual(xi).cwiseAbs().maxCoeff();
            return sol;
        }
    }
    throw Error(ErrorCode::NewtonDivergence,
                "newton did not converge in " +
                    std::to_string(config.newton_max_iter) + " iterations");
}

Trajectory march(const IvpProblem& problem, const SolverConfig& config) {
    validate_config(config, problem);
    if (!(problem.t_start < problem.t_end)) {
        throw Error(ErrorCode::InvalidInterval, "problem domain is empty");
    }
    if (problem.initial.size() != problem.dimension) {
        throw Error(ErrorCode::InvalidArgument,
                    "initial condition size does not match dimension");
    }

    std::vector<double> bounds = config.boundaries;
    if (bounds.empty()) {
        const int blocks = config.block_count;
        bounds.resize(static_cast<std::size_t>(blocks) + 1);
        const double width = problem.t_end - problem.t_start;
        for (int i = 0; i <= blocks; ++i) {
            bounds[static_cast<std::size_t>(i)] = problem.t_start + width * i / blocks;
        }
        bounds.front() = problem.t_start;
        bounds.back() = problem.t_end;
    }
    const int blocks = static_cast<int>(bounds.size()) - 1;
    const int n = config.points_per_block;
    const int m = problem.dimension;

    Trajectory traj;
    traj.dimension = m;
    traj.domain_start = problem.t_start;
    traj.domain_end = problem.t_end;
    traj.initial = problem.initial;
    traj.config = config;
    traj.times.reserve(static_cast<std::size_t>(blocks) * n);
    traj.block_index.reserve(static_cast<std::size_t>(blocks) * n);
    traj.values.resize(static_cast<Eigen::Index>(blocks) * n, m);

    Eigen::VectorXd alpha = problem.initial;
    for (int b = 0; b < blocks; ++b) {
        const auto lo = bounds[static_cast<std::size_t>(b)];
        const auto hi = bounds[static_cast<std::size_t>(b) + 1];
        try {
            const NodeSet nodes = equispaced_nodes(lo, hi, n + 1);
            const DiffMatrices dm = differentiation_matrices(nodes);
            const BlockSolution sol =
                problem.linear_part
                    ? solve_block_linear(dm, problem.linear_part->matrix,
                                         problem.linear_part->forcing, alpha)
                    : solve_block_newton(dm, problem, alpha, config);
            for (int j = 0; j < n; ++j) {
                traj.times.push_back(nodes.nodes[static_cast<std::size_t>(j) + 1]);
                traj.block_index.push_back(b);
                traj.values.row(static_cast<Eigen::Index>(b) * n + j) = sol.xi.row(j);
            }
            alpha = sol.xi.row(n - 1);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "block " << (b + 1) << " of " << blocks << " on [" << lo << ", "
                << hi << "]: " << to_string(e.code()) << ": " << e.what();
            throw Error(e.code(), msg.str());
        }
    }
    return traj;
}

}  // namespace blockivp
