#include "mbqc/distribution.hpp"

#include <cmath>
#include <numbers>

namespace mbqc {

void validate_distribution(const Eigen::VectorXd& probabilities) {
    if (probabilities.size() == 0) {
        throw ValidationError("probability distribution is empty");
    }
    if (probabilities.minCoeff() < 0.0) {
        throw ValidationError("probability distribution has a negative entry");
    }
    if (probabilities.maxCoeff() > 1.0 + 1e-10) {
        throw ValidationError("probability distribution has an entry above 1");
    }
    if (std::abs(probabilities.sum() - 1.0) > 1e-10) {
        throw ValidationError("probabilities sum to " + std::to_string(probabilities.sum()) +
                              ", expected 1");
    }
}

ProbabilityDistribution make_distribution(Eigen::VectorXd probabilities,
                                          std::vector<std::string> labels) {
    validate_distribution(probabilities);
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != probabilities.size()) {
        throw ValidationError("label count does not match distribution size");
    }
    return {std::move(probabilities), std::move(labels)};
}

double shannon_entropy(const ProbabilityDistribution& d, EntropyBase base) {
    validate_distribution(d.probabilities);
    double h = 0.0;
    for (Eigen::Index i = 0; i < d.probabilities.size(); ++i) {
        const double p = d.probabilities(i);
        if (p > 0.0) h -= p * std::log2(p);
    }
    return base == EntropyBase::Bits ? h : h * std::numbers::ln2;
}

}  // namespace mbqc
