#include "mbqc/reports.hpp"

#include <numbers>

#include "mbqc/json_writer.hpp"
#include "mbqc/version.hpp"

namespace mbqc {

namespace {

void header(JsonWriter& w, const char* schema, std::uint64_t seed) {
    w.key("schema").value(schema);
    w.key("tool_version").value(kToolVersion);
    w.key("seed").value(seed);
}

void write_frame(JsonWriter& w, const PauliFrame& frame) {
    w.key("frame").begin_array();
    for (std::size_t k = 0; k < frame.output_qubits.size(); ++k) {
        w.begin_object();
        w.key("qubit").value(frame.output_qubits[k]);
        w.key("a_x").value(frame.bits[k].first);
        w.key("a_z").value(frame.bits[k].second);
        w.end_object();
    }
    w.end_array();
    w.key("byproduct").value(frame.as_pauli().to_string());
}

void write_outcomes(JsonWriter& w, const MeasurementPattern& pattern,
                    const OutcomeRecord& record) {
    w.key("outcomes").begin_object();
    for (const auto& step : pattern.steps) {
        w.key(std::to_string(step.qubit)).value(record.at(step.qubit));
    }
    w.end_object();
    w.key("probability").value(record.probability);
}

}  // namespace

std::string run_report_json(const RunResult& result, const MeasurementPattern& pattern,
                            std::uint64_t seed) {
    JsonWriter w;
    w.begin_object();
    header(w, "run/1", seed);
    write_outcomes(w, pattern, result.outcomes);
    write_frame(w, result.frame);
    // Amplitudes only at small output sizes; large registers are summarized by
    // the outcome record alone.
    if (result.output_state.num_qubits() <= 10) {
        w.key("output_state").begin_array();
        for (Eigen::Index i = 0; i < result.output_state.dim(); ++i) {
            const Complex a = result.output_state.amplitude(i);
            w.begin_array().value(a.real()).value(a.imag()).end_array();
        }
        w.end_array();
    }
    w.end_object();
    return w.str();
}

std::string enumerate_report_json(const TrajectoryEnsemble& ensemble, std::uint64_t seed) {
    JsonWriter w;
    w.begin_object();
    header(w, "enumerate/1", seed);
    w.key("measured_qubits").value(static_cast<int>(ensemble.pattern.steps.size()));
    w.key("trajectories").begin_array();
    for (const auto& traj : ensemble.trajectories) {
        w.begin_object();
        std::string bits;
        for (const auto& step : ensemble.pattern.steps) {
            bits.push_back(traj.outcomes.at(step.qubit) ? '1' : '0');
        }
        w.key("outcomes").value(bits);
        w.key("probability").value(traj.outcomes.probability);
        w.key("byproduct").value(traj.frame.as_pauli().to_string());
        w.end_object();
    }
    w.end_array();
    w.key("entropy_bits").value(shannon_entropy(ensemble.probabilities(), EntropyBase::Bits));
    w.end_object();
    return w.str();
}

std::string no_signaling_report_json(const verify::NoSignalingReport& report,
                                     std::uint64_t seed) {
    JsonWriter w;
    w.begin_object();
    header(w, "verify/1", seed);
    w.key("check").value("no_signaling");
    w.key("r").value(report.r);
    for (const auto& [name, angles] :
         {std::pair<const char*, const std::vector<double>*>{"angles_a", &report.angles_a},
          {"angles_b", &report.angles_b}}) {
        w.key(name).begin_array();
        for (double a : *angles) w.value(a);
        w.end_array();
    }
    w.key("bob_region").begin_array();
    for (int q : report.bob_region.qubits) w.value(q);
    w.end_array();
    w.key("distance").value(report.distance);
    w.key("tolerance").value(report.tolerance);
    w.key("pass").value(report.pass);
    w.end_object();
    return w.str();
}

std::string otp_report_json(const verify::OtpReport& report) {
    JsonWriter w;
    w.begin_object();
    header(w, "verify/1", report.seed);
    w.key("check").value("one_time_pad");
    w.key("n_logical").value(report.n_logical);
    w.key("entropy_bits").value(report.entropy_bits);
    w.key("entropy_floor_bits").value(2.0 * report.n_logical);
    w.key("max_deviation").value(report.max_deviation);
    w.key("sample_count").value(report.sample_count);
    w.key("tolerance").value(report.tolerance);
    w.key("encryption_pass").value(report.encryption_pass);
    w.key("entropy_bound_pass").value(report.entropy_bound_pass);
    w.key("pass").value(report.pass);
    w.end_object();
    return w.str();
}

std::string decomposition_report_json(const verify::DecompositionReport& report,
                                      std::uint64_t seed) {
    JsonWriter w;
    w.begin_object();
    header(w, "verify/1", seed);
    w.key("check").value("decomposition");
    w.key("r").value(report.r);
    w.key("fidelities").begin_array();
    for (double f : report.fidelities) w.value(f);
    w.end_array();
    w.key("min_fidelity").value(report.min_fidelity);
    w.key("tolerance").value(report.tolerance);
    w.key("pass").value(report.pass);
    w.end_object();
    return w.str();
}

std::string heat_report_json(const thermo::HeatReport& report, std::uint64_t seed) {
    JsonWriter w;
    w.begin_object();
    header(w, "thermo/1", seed);
    if (report.natural_units) {
        w.key("temperature").value(report.temperature);
    } else {
        w.key("temperature_K").value(report.temperature);
    }
    w.key("register_qubits").value(report.register_qubits);
    w.key("resource_qubits").value(report.resource_qubits);
    w.key("measured_layers").value(report.measured_layers);
    w.key("entropy_bits").value(report.entropy_bits);
    w.key("eq3_floor_bits").value(report.eq3_floor_bits);
    if (report.natural_units) {
        // Natural units report heats as multiples of ln 2.
        w.key("heat_ln2").value(report.cluster_policy_heat / std::numbers::ln2);
        w.key("floor_heat_ln2").value(report.landauer_floor_heat / std::numbers::ln2);
        w.key("eq3_floor_heat_ln2").value(report.eq3_floor_heat / std::numbers::ln2);
    } else {
        w.key("heat_J").value(report.cluster_policy_heat);
        w.key("floor_heat_J").value(report.landauer_floor_heat);
        w.key("eq3_floor_heat_J").value(report.eq3_floor_heat);
    }
    w.key("erased_bits").value(report.erased_bits);
    w.key("steady_stored_bits").value(report.steady_stored_bits);
    w.key("per_register_qubit_bits").value(report.per_register_qubit_bits);
    w.key("per_resource_qubit_bits").value(report.per_resource_qubit_bits);
    w.key("meets_eq3_floor").value(report.meets_eq3_floor);
    w.key("pass").value(report.pass);
    w.end_object();
    return w.str();
}

}  // namespace mbqc
