#include "blockivp/problems.hpp"

#include <cmath>

namespace blockivp::problems {

namespace {

Eigen::VectorXd scalar(double v) {
    Eigen::VectorXd out(1);
    out(0) = v;
    return out;
}

// x' = -100 x + 10, x(0) = 1, exact (1 + 9 e^{-100 t}) / 10.
BenchmarkEntry example1() {
    BenchmarkEntry e;
    e.name = "example1";
    e.problem.dimension = 1;
    e.problem.t_start = 0.0;
    e.problem.t_end = 0.2;
    e.problem.initial = scalar(1.0);
    e.problem.rhs = [](const Eigen::VectorXd& x, double) {
        return scalar(-100.0 * x(0) + 10.0);
    };
    e.problem.jacobian = [](const Eigen::VectorXd&, double) {
        Eigen::MatrixXd j(1, 1);
        j(0, 0) = -100.0;
        return j;
    };
    e.problem.exact = [](double t) { return scalar((1.0 + 9.0 * std::exp(-100.0 * t)) / 10.0); };
    Eigen::MatrixXd a(1, 1);
    a(0, 0) = -100.0;
    e.problem.linear_part = IvpProblem::LinearPart{a, [](double) { return scalar(10.0); }};
    for (int k = 1; k <= 10; ++k) e.reporting_times.push_back(0.02 * k);
    e.paper_norm = 7.14e-5;
    e.norm_kind = NormKind::Euclidean;
    e.default_blocks = 10;
    e.default_oracle_steps = 100000;
    return e;
}

// x' = 100 x, x(0) = 1, exact e^{100 t}.
BenchmarkEntry example2() {
    BenchmarkEntry e;
    e.name = "example2";
    e.problem.dimension = 1;
    e.problem.t_start = 0.0;
    e.problem.t_end = 0.1;
    e.problem.initial = scalar(1.0);
    e.problem.rhs = [](const Eigen::VectorXd& x, double) { return scalar(100.0 * x(0)); };
    e.problem.jacobian = [](const Eigen::VectorXd&, double) {
        Eigen::MatrixXd j(1, 1);
        j(0, 0) = 100.0;
        return j;
    };
    e.problem.exact = [](double t) { return scalar(std::exp(100.0 * t)); };
    Eigen::MatrixXd a(1, 1);
    a(0, 0) = 100.0;
    e.problem.linear_part = IvpProblem::LinearPart{a, [](double) { return scalar(0.0); }};
    for (int k = 1; k <= 5; ++k) e.reporting_times.push_back(0.02 * k);
    e.paper_norm = 8.03;
    e.norm_kind = NormKind::Euclidean;
    e.default_blocks = 10;
    e.default_oracle_steps = 100000;
    return e;
}

// x' = 5 e^{5t} (x - t)^2 + 1, x(0) = -1, exact t - e^{-5t}.
BenchmarkEntry example3() {
    BenchmarkEntry e;
    e.name = "example3";
    e.problem.dimension = 1;
    e.problem.t_start = 0.0;
    e.problem.t_end = 1.0;
    e.problem.initial = scalar(-1.0);
    e.problem.rhs = [](const Eigen::VectorXd& x, double t) {
        const double w = x(0) - t;
        return scalar(5.0 * std::exp(5.0 * t) * w * w + 1.0);
    };
    e.problem.jacobian = [](const Eigen::VectorXd& x, double t) {
        Eigen::MatrixXd j(1, 1);
        j(0, 0) = 10.0 * std::exp(5.0 * t) * (x(0) - t);
        return j;
    };
    e.problem.exact = [](double t) { return scalar(t - std::exp(-5.0 * t)); };
    for (int k = 1; k <= 5; ++k) e.reporting_times.push_back(0.2 * k);
    e.paper_norm = 6.7e-9;
    e.norm_kind = NormKind::Euclidean;
    e.default_blocks = 5;
    e.default_oracle_steps = 10000;
    return e;
}

// x1' = -0.1 x1 - 199.9 x2, x2' = -200 x2; stiff pair of decay scales.
BenchmarkEntry example4() {
    BenchmarkEntry e;
    e.name = "example4";
    e.problem.dimension = 2;
    e.problem.t_start = 0.0;
    e.problem.t_end = 50.0;
    e.problem.initial = Eigen::Vector2d(2.0, 1.0);
    Eigen::MatrixXd a(2, 2);
    a << -0.1, -199.9, 0.0, -200.0;
    e.problem.rhs = [a](const Eigen::VectorXd& x, double) -> Eigen::VectorXd { return a * x; };
    e.problem.jacobian = [a](const Eigen::VectorXd&, double) { return a; };
    e.problem.exact = [](double t) {
        return Eigen::Vector2d(std::exp(-0.1 * t) + std::exp(-200.0 * t),
                               std::exp(-200.0 * t));
    };
    e.problem.linear_part = IvpProblem::LinearPart{
        a, [](double) -> Eigen::VectorXd { return Eigen::Vector2d::Zero(); }};
    for (int k = 1; k <= 5; ++k) e.reporting_times.push_back(10.0 * k);
    e.paper_norm = 1.1256e-3;
    e.norm_kind = NormKind::Frobenius;
    e.default_blocks = 50;
    e.default_oracle_steps = 100000;
    return e;
}

// Lotka-Volterra predator-prey system; no closed form, compared to the
// RK4 oracle.
BenchmarkEntry example5() {
    BenchmarkEntry e;
    e.name = "example5";
    e.problem.dimension = 2;
    e.problem.t_start = 0.0;
    e.problem.t_end = 1.0;
    e.problem.initial = Eigen::Vector2d(0.1, 0.1);
    e.problem.rhs = [](const Eigen::VectorXd& x, double) {
        return Eigen::Vector2d(x(0) * (0.76 - 0.45 * x(1)),
                               -x(1) * (0.18 - 0.82 * x(0)));
    };
    e.problem.jacobian = [](const Eigen::VectorXd& x, double) {
        Eigen::MatrixXd j(2, 2);
        j << 0.76 - 0.45 * x(1), -0.45 * x(0), 0.82 * x(1), -0.18 + 0.82 * x(0);
        return j;
    };
    for (int k = 1; k <= 4; ++k) e.reporting_times.push_back(0.25 * k);
    e.norm_kind = NormKind::Frobenius;
    e.default_blocks = 4;
    e.default_oracle_steps = 10000;
    return e;
}

}  // namespace

BenchmarkEntry get(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    if (name == "example3") return example3();
    if (name == "example4") return example4();
    if (name == "example5") return example5();
    throw Error(ErrorCode::UnknownProblem, "unknown benchmark problem: " + name);
}

std::vector<std::string> list() {
    return {"example1", "example2", "example3", "example4", "example5"};
}

}  // namespace blockivp::problems
