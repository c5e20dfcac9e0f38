#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "mbqc/errors.hpp"

namespace mbqc {

struct ProbabilityDistribution {
    Eigen::VectorXd probabilities;
    std::vector<std::string> labels;  // optional; empty or one per entry
};

/// Validates (entries in [0,1], sum 1 within 1e-10) and wraps.
ProbabilityDistribution make_distribution(Eigen::VectorXd probabilities,
                                          std::vector<std::string> labels = {});

void validate_distribution(const Eigen::VectorXd& probabilities);

enum class EntropyBase { Bits, Nats };

/// -Σ p log p with 0 log 0 := 0.
double shannon_entropy(const ProbabilityDistribution& d, EntropyBase base = EntropyBase::Bits);

}  // namespace mbqc
