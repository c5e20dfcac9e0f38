#pragma once

#include <string>
#include <vector>

#include "mbqc/distribution.hpp"
#include "mbqc/engine.hpp"

namespace mbqc::thermo {

struct PhysicalConstants {
    double boltzmann_k = 1.380649e-23;  // J/K
    bool natural_units = false;

    static PhysicalConstants si() { return {}; }
    static PhysicalConstants natural() { return {1.0, true}; }
};

/// bits * k * T * ln 2.
double landauer_heat(double bits, double temperature, const PhysicalConstants& c = {});

enum class MemoryEventKind { Store, Erase };

struct MemoryEvent {
    std::string label;
    MemoryEventKind kind = MemoryEventKind::Store;
    long long bits = 0;
};

/// Classical-memory store/erase log. Only erasure costs heat; the accumulated
/// heat is erased_bits_total * kT ln 2 by construction.
class ThermoLedger {
public:
    explicit ThermoLedger(double temperature, PhysicalConstants constants = {});

    void store(const std::string& label, long long bits);
    void erase(const std::string& label, long long bits);  // cannot exceed stored_bits
    void apply(const MemoryEvent& event);

    long long stored_bits() const { return stored_bits_; }
    long long erased_bits_total() const { return erased_bits_total_; }
    double heat_joules() const;
    double temperature() const { return temperature_; }
    const PhysicalConstants& constants() const { return constants_; }
    const std::vector<MemoryEvent>& events() const { return events_; }

private:
    double temperature_;
    PhysicalConstants constants_;
    long long stored_bits_ = 0;
    long long erased_bits_total_ = 0;
    std::vector<MemoryEvent> events_;
};

/// The cluster two-layer memory policy: after layer t is measured its n bits
/// are stored, and from the third layer on the bits of layer t-2 are erased;
/// whatever is still held (the final Pauli frame) is erased at run end unless
/// erase_final_frame is false. Steady-state footprint: 2 bits per register
/// qubit.
struct ClusterMemoryTrace {
    std::vector<MemoryEvent> plan;
    std::vector<long long> stored_after_layer;  // after layer t's store+erase, t = 1..r
    ThermoLedger ledger;                        // the plan applied end to end
};

ClusterMemoryTrace cluster_memory_trace(const MeasurementPattern& pattern,
                                        const ClusterLayout& layout, double temperature,
                                        const PhysicalConstants& c = {},
                                        bool erase_final_frame = true);

/// Σ exp(-E / kT).
double partition_function(const std::vector<double>& levels, double temperature,
                          const PhysicalConstants& c = {});

/// One memory state per outcome; state 0 doubles as the standard (erased)
/// state.
struct MemoryModel {
    std::vector<std::vector<double>> level_sets;  // energy levels per outcome (J)
    double temperature = 300.0;
};

struct SagawaUedaBound {
    double delta_f = 0.0;       // kT ln Z_0 - Σ_j p_j kT ln Z_j
    double min_work = 0.0;      // kT H_nats - delta_f, the floor on W_eras
    double entropy_nats = 0.0;
};

SagawaUedaBound sagawa_ueda_bound(const MemoryModel& model, const ProbabilityDistribution& p,
                                  const PhysicalConstants& c = {});

struct HeatReport {
    double temperature = 300.0;
    bool natural_units = false;
    int register_qubits = 0;   // n
    int resource_qubits = 0;   // n m
    int measured_layers = 0;   // r
    double entropy_bits = 0.0;
    double eq3_floor_bits = 0.0;        // 2n
    double landauer_floor_heat = 0.0;   // kT ln2 * entropy_bits
    double eq3_floor_heat = 0.0;        // kT ln2 * 2n
    double cluster_policy_heat = 0.0;   // from the two-layer policy
    long long erased_bits = 0;
    long long steady_stored_bits = 0;
    double per_register_qubit_bits = 0.0;  // steady memory per register qubit
    double per_resource_qubit_bits = 0.0;  // erased bits per lattice site
    bool meets_eq3_floor = false;
    bool pass = false;  // cluster policy heat covers the Landauer floor
};

/// Heat accounting for a full trajectory ensemble: the Shannon entropy of the
/// outcome distribution, the Landauer and Eq.-(3) floors, and the heat the
/// cluster two-layer policy actually dissipates.
HeatReport mbqc_heat_report(const TrajectoryEnsemble& ensemble, const ClusterLayout& layout,
                            double temperature, const PhysicalConstants& c = {});

}  // namespace mbqc::thermo
