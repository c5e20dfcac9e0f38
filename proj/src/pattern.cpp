#include "mbqc/pattern.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <string>

namespace mbqc {

std::vector<int> MeasurementPattern::measured_qubits() const {
    std::vector<int> out;
    out.reserve(steps.size());
    for (const auto& step : steps) out.push_back(step.qubit);
    return out;
}

std::vector<int> MeasurementPattern::sorted_outputs() const {
    std::vector<int> out = outputs;
    std::sort(out.begin(), out.end());
    return out;
}

void MeasurementPattern::validate() const {
    const int total = layout.num_qubits();
    std::set<int> seen;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& step = steps[i];
        if (step.qubit < 0 || step.qubit >= total) {
            throw ValidationError("step " + std::to_string(i) + " measures qubit " +
                                  std::to_string(step.qubit) + " outside the layout");
        }
        if (!seen.insert(step.qubit).second) {
            throw ValidationError("qubit " + std::to_string(step.qubit) + " measured twice");
        }
        for (const auto* domain : {&step.s_domain, &step.t_domain}) {
            for (int dep : *domain) {
                if (dep == step.qubit || !seen.contains(dep)) {
                    throw ValidationError("step " + std::to_string(i) +
                                          " depends on qubit " + std::to_string(dep) +
                                          " which is not measured strictly earlier");
                }
            }
        }
    }
    std::set<int> outs(outputs.begin(), outputs.end());
    if (outs.size() != outputs.size()) {
        throw ValidationError("duplicate output qubit");
    }
    for (int q : outs) {
        if (q < 0 || q >= total) {
            throw ValidationError("output qubit " + std::to_string(q) + " outside the layout");
        }
        if (seen.contains(q)) {
            throw ValidationError("qubit " + std::to_string(q) + " is both measured and output");
        }
    }
    if (static_cast<int>(seen.size() + outs.size()) != total) {
        throw ValidationError("measured qubits and outputs must cover the layout");
    }
    for (const auto* corrections : {&x_corrections, &z_corrections}) {
        for (const auto& [output, domain] : *corrections) {
            if (!outs.contains(output)) {
                throw ValidationError("correction set for qubit " + std::to_string(output) +
                                      " which is not an output");
            }
            for (int dep : domain) {
                if (!seen.contains(dep)) {
                    throw ValidationError("correction references unmeasured qubit " +
                                          std::to_string(dep));
                }
            }
        }
    }
}

int OutcomeRecord::at(int qubit) const {
    const auto it = outcomes.find(qubit);
    if (it == outcomes.end()) {
        throw ValidationError("outcome record is missing qubit " + std::to_string(qubit));
    }
    return it->second;
}

int OutcomeRecord::parity_over(const std::vector<int>& domain) const {
    int parity = 0;
    for (int q : domain) parity ^= at(q);
    return parity;
}

double adapted_angle(const PatternStep& step, const OutcomeRecord& outcomes) {
    const int s = outcomes.parity_over(step.s_domain);
    const int t = outcomes.parity_over(step.t_domain);
    return (s ? -1.0 : 1.0) * step.base_angle + std::numbers::pi * t;
}

PauliOperator PauliFrame::as_pauli() const {
    PauliOperator p = PauliOperator::identity(static_cast<int>(bits.size()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        p.set_x(static_cast<int>(k), bits[k].first);
        p.set_z(static_cast<int>(k), bits[k].second);
    }
    return p;
}

PauliFrame pauli_frame(const MeasurementPattern& pattern, const OutcomeRecord& outcomes) {
    PauliFrame frame;
    frame.output_qubits = pattern.sorted_outputs();
    frame.bits.reserve(frame.output_qubits.size());
    auto parity_for = [&](const std::map<int, std::vector<int>>& corrections, int qubit) {
        const auto it = corrections.find(qubit);
        return it == corrections.end() ? 0 : outcomes.parity_over(it->second);
    };
    for (int q : frame.output_qubits) {
        frame.bits.emplace_back(parity_for(pattern.x_corrections, q),
                                parity_for(pattern.z_corrections, q));
    }
    return frame;
}

}  // namespace mbqc
