#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockivp/solver.hpp"

namespace blockivp {

enum class NormKind { Euclidean, Frobenius };

/// One benchmark problem plus the metadata needed to reproduce its table.
struct BenchmarkEntry {
    std::string name;
    IvpProblem problem;
    std::vector<double> reporting_times;
    std::optional<double> paper_norm;   // published error norm, when any
    NormKind norm_kind = NormKind::Euclidean;
    int default_blocks = 1;             // partition matching the table grid
    int default_oracle_steps = 10000;   // RK4 steps per unit time
};

namespace problems {

/// Benchmark registry lookup; throws UnknownProblem for anything outside
/// example1..example5.
BenchmarkEntry get(const std::string& name);

std::vector<std::string> list();

}  // namespace problems
}  // namespace blockivp
