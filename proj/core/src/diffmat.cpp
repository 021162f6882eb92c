#include "blockivp/diffmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blockivp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest admissible node gap; below this the P' ratios in the entry
// formula lose too many digits to cancellation. max|t| is positive for any
// strictly increasing pair.
double min_gap(const std::vector<double>& points) {
    double max_abs = 0.0;
    for (double t : points) max_abs = std::max(max_abs, std::abs(t));
    return 1e3 * kEps * max_abs;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInterval: return "invalid-interval";
        case ErrorCode::InvalidCount: return "invalid-count";
        case ErrorCode::DuplicateNode: return "duplicate-node";
        case ErrorCode::NotEquispaced: return "not-equispaced";
        case ErrorCode::SingularSystem: return "singular-system";
        case ErrorCode::NewtonDivergence: return "newton-divergence";
        case ErrorCode::UnknownProblem: return "unknown-problem";
        case ErrorCode::MissingNode: return "missing-node";
        case ErrorCode::NonFiniteState: return "non-finite-state";
        case ErrorCode::InvalidArgument: return "invalid-argument";
    }
    return "unknown-error";
}

NodeSet NodeSet::from_points(std::vector<double> points) {
    if (points.size() < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "node set needs at least two points");
    }
    const double tiny = min_gap(points);
    double h = 0.0;
    double min_h = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
        const double gap = points[j + 1] - points[j];
        if (gap <= 0.0) {
            throw Error(ErrorCode::InvalidArgument,
                        "nodes must be strictly increasing");
        }
        if (gap < tiny) {
            throw Error(ErrorCode::DuplicateNode,
                        "adjacent nodes closer than " + std::to_string(tiny));
        }
        h = std::max(h, gap);
        min_h = std::min(min_h, gap);
    }
    NodeSet set;
    set.h = h;
    set.is_equispaced = (h - min_h) <= 1e-12 * h;
    set.nodes = std::move(points);
    return set;
}

NodeSet equispaced_nodes(double a, double b, int count) {
    if (!(a < b)) {
        throw Error(ErrorCode::InvalidInterval, "interval start must precede end");
    }
    if (count < 2) {
        throw Error(ErrorCode::InvalidCount, "need at least two nodes");
    }
    std::vector<double> pts(static_cast<std::size_t>(count));
    const double width = b - a;
    for (int j = 0; j < count; ++j) {
        pts[static_cast<std::size_t>(j)] = a + width * j / (count - 1);
    }
    pts.front() = a;
    pts.back() = b;
    NodeSet set = NodeSet::from_points(std::move(pts));
    set.is_equispaced = true;
    return set;
}

DiffMatrices differentiation_matrices(const NodeSet& nodes) {
    const auto& t = nodes.nodes;
    const int n1 = nodes.size();
    const double tiny = min_gap(t);
    for (int j = 0; j + 1 < n1; ++j) {
        if (t[j + 1] - t[j] < tiny) {
            throw Error(ErrorCode::DuplicateNode, "node gap underflows");
        }
    }

    // P'(t_j) = prod_{l != j} (t_j - t_l)
    Eigen::VectorXd pprime = Eigen::VectorXd::Ones(n1);
    for (int j = 0; j < n1; ++j) {
        for (int l = 0; l < n1; ++l) {
            if (l != j) pprime(j) *= t[j] - t[l];
        }
    }

    DiffMatrices out;
    out.full.resize(n1, n1);
    for (int j = 0; j < n1; ++j) {
        for (int k = 0; k < n1; ++k) {
            if (j == k) {
                double diag = 0.0;
                for (int l = 0; l < n1; ++l) {
                    if (l != j) diag += 1.0 / (t[j] - t[l]);
                }
                out.full(j, j) = diag;
            } else {
                out.full(j, k) = pprime(j) / ((t[j] - t[k]) * pprime(k));
            }
        }
    }
    const int n = n1 - 1;
    out.interior = out.full.block(1, 1, n, n);
    out.coupling = out.full.block(1, 0, n, 1);
    out.nodes = nodes;
    return out;
}

Eigen::MatrixXd scaled_interior(const NodeSet& nodes) {
    if (!nodes.is_equispaced) {
        throw Error(ErrorCode::NotEquispaced,
                    "scaled interior matrix requires equispaced nodes");
    }
    return nodes.h * differentiation_matrices(nodes).interior;
}

std::vector<std::complex<double>> shifted_spectrum(const DiffMatrices& matrices) {
    const auto& t = matrices.nodes.nodes;
    const int n = matrices.nodes.interior_count();
    Eigen::MatrixXd shifted(n, n);
    for (int j = 0; j < n; ++j) {
        shifted.row(j) = (t[static_cast<std::size_t>(j) + 1] - t[0]) *
                         matrices.interior.row(j);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(shifted);
    std::vector<std::complex<double>> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return values;
}

}  // namespace blockivp
