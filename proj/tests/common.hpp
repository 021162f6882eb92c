#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "blockivp/solver.hpp"

namespace blockivp::testing {

inline Eigen::VectorXd scalar(double v) {
    Eigen::VectorXd out(1);
    out(0) = v;
    return out;
}

// Scalar IVP from plain double-valued callables.
template <typename Rhs>
IvpProblem scalar_problem(Rhs rhs, double a, double b, double alpha) {
    IvpProblem p;
    p.dimension = 1;
    p.t_start = a;
    p.t_end = b;
    p.initial = scalar(alpha);
    p.rhs = [rhs](const Eigen::VectorXd& x, double t) { return scalar(rhs(x(0), t)); };
    return p;
}

// x' = -x, x(0) = 1 on [0, 1]; exact e^{-t}.
inline IvpProblem decay_problem() {
    IvpProblem p = scalar_problem([](double x, double) { return -x; }, 0.0, 1.0, 1.0);
    p.jacobian = [](const Eigen::VectorXd&, double) {
        Eigen::MatrixXd j(1, 1);
        j(0, 0) = -1.0;
        return j;
    };
    p.exact = [](double t) { return scalar(std::exp(-t)); };
    return p;
}

// Jittered uniform grid on [lo, hi]: random node sets with a guaranteed
// minimum gap so the entry formula stays well conditioned.
inline std::vector<double> jittered_nodes(std::mt19937& rng, int interior, double lo,
                                          double hi) {
    const int count = interior + 1;
    const double spacing = (hi - lo) / interior;
    std::uniform_real_distribution<double> jitter(-0.3 * spacing, 0.3 * spacing);
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        double t = lo + spacing * j;
        if (j > 0 && j < count - 1) t += jitter(rng);
        pts[static_cast<std::size_t>(j)] = t;
    }
    return pts;
}

inline double poly_eval(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
}

inline double poly_deriv(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 1;) v = v * t + coeffs[i] * static_cast<double>(i);
    return v;
}

}  // namespace blockivp::testing
