#pragma once

#include <stdexcept>

namespace mbqc {

// Request exceeds the dense-simulation capacity caps (24 statevector qubits,
// 12 density-matrix qubits, 16 enumerated measurements).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: non-unitary gates, invalid probability
// distributions, broken pattern structure, unparseable files.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Qubit index out of range, or two indices that must differ coincide.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A forced measurement outcome whose branch probability is numerically zero.
struct ImpossibleBranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation defined only for lattice-structured resources/patterns.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mbqc
