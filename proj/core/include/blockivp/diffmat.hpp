#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "blockivp/errors.hpp"

namespace blockivp {

/// Ordered collocation nodes of one block.
///
/// Nodes are strictly increasing, at least two of them. `h` is the largest
/// adjacent gap; `is_equispaced` is set when all gaps agree with `h` to a
/// relative 1e-12.
struct NodeSet {
    std::vector<double> nodes;
    double h = 0.0;
    bool is_equispaced = false;

    /// Number of interior nodes N (one less than the node count).
    int interior_count() const { return static_cast<int>(nodes.size()) - 1; }

    int size() const { return static_cast<int>(nodes.size()); }

    double front() const { return nodes.front(); }
    double back() const { return nodes.back(); }

    /// Validates and wraps a strictly increasing point sequence.
    /// Throws DuplicateNode when a gap falls below 1e3*eps*max|t| and
    /// InvalidArgument when the sequence is not increasing or too short.
    static NodeSet from_points(std::vector<double> points);
};

/// Uniform nodes on [a, b], first node exactly a, last exactly b.
NodeSet equispaced_nodes(double a, double b, int count);

/// Lagrange differentiation matrices on a node set.
///
/// `full` is the (N+1)x(N+1) matrix mapping function values at the nodes to
/// derivative values at the same nodes, exact on polynomials of degree <= N.
/// `interior` is the N x N sub-block over nodes t_1..t_N and `coupling` the
/// first column below the corner, carrying the anchor value into the block
/// system.
struct DiffMatrices {
    Eigen::MatrixXd full;
    Eigen::MatrixXd interior;
    Eigen::VectorXd coupling;
    NodeSet nodes;
};

/// Builds the differentiation matrices for `nodes`.
///
/// Off-diagonal entries are P'(t_j) / ((t_j - t_k) P'(t_k)) with
/// P'(t_j) = prod_{l != j} (t_j - t_l); the diagonal is sum_{l != j}
/// 1/(t_j - t_l). The direct product is stable for the small node counts
/// used here (N <= ~20).
DiffMatrices differentiation_matrices(const NodeSet& nodes);

/// h * interior for equispaced nodes; the result depends only on N.
/// Throws NotEquispaced otherwise.
Eigen::MatrixXd scaled_interior(const NodeSet& nodes);

/// Eigenvalues of (T - t_0 I) * interior with T = diag(t_1..t_N), sorted by
/// real part. For any strictly increasing node set these are 1..N, which is
/// what makes the interior matrix invertible.
std::vector<std::complex<double>> shifted_spectrum(const DiffMatrices& matrices);

}  // namespace blockivp
