#include "mbqc/lattice_program.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mbqc {

namespace {

// Only same-row horizontal and same-column vertical edges keep the layer
// teleportation structure intact.
void check_lattice_edges(const ClusterLayout& layout) {
    for (const auto& [a, b] : layout.edges) {
        const bool horizontal =
            layout.row_of(a) == layout.row_of(b) && layout.col_of(b) == layout.col_of(a) + 1;
        const bool vertical = layout.col_of(a) == layout.col_of(b);
        if (!horizontal && !vertical) {
            throw UnsupportedError("layout has a non-lattice edge (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
        }
    }
    if (!layout.has_all_horizontal_edges()) {
        throw UnsupportedError("layout is missing a horizontal wire edge");
    }
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

void LatticeProgram::validate() const {
    check_lattice_edges(layout);
    if (measured_cols < 0 || measured_cols > layout.cols - 1) {
        throw ValidationError("measured_cols must satisfy 0 <= r <= cols-1");
    }
    if (static_cast<int>(column_angles.size()) != measured_cols) {
        throw ValidationError("need one angle list per measured column");
    }
    for (const auto& angles : column_angles) {
        if (static_cast<int>(angles.size()) != layout.rows) {
            throw ValidationError("need one angle per row in every measured column");
        }
    }
}

MeasurementPattern to_pattern(const LatticeProgram& program) {
    program.validate();
    const ClusterLayout& layout = program.layout;
    const int rows = layout.rows;
    const int r = program.measured_cols;

    MeasurementPattern pattern;
    pattern.layout = layout;
    for (int col = 0; col < r; ++col) {
        const auto vertical = layout.vertical_edges_in_column(col);
        for (int row = 0; row < rows; ++row) {
            PatternStep step;
            step.qubit = layout.qubit_index(row, col);
            step.base_angle = program.column_angles[col][row];
            if (col >= 1) step.s_domain.push_back(layout.qubit_index(row, col - 1));
            if (col >= 2) step.t_domain.push_back(layout.qubit_index(row, col - 2));
            if (col >= 1) {
                // The current column's vertical CZ layer routes the neighbors'
                // X byproducts into Z byproducts on this wire.
                for (const auto& [a, b] : vertical) {
                    int other = -1;
                    if (a == step.qubit) other = b;
                    if (b == step.qubit) other = a;
                    if (other >= 0) {
                        step.t_domain.push_back(layout.qubit_index(layout.row_of(other), col - 1));
                    }
                }
            }
            step.t_domain = sorted_unique(std::move(step.t_domain));
            pattern.steps.push_back(std::move(step));
        }
    }
    for (int col = r; col < layout.cols; ++col) {
        for (int row = 0; row < rows; ++row) {
            pattern.outputs.push_back(layout.qubit_index(row, col));
        }
    }
    if (r >= 1) {
        for (int row = 0; row < rows; ++row) {
            const int frontier = layout.qubit_index(row, r);
            pattern.x_corrections[frontier] = {layout.qubit_index(row, r - 1)};
            if (r >= 2) {
                pattern.z_corrections[frontier] = {layout.qubit_index(row, r - 2)};
            }
        }
    }
    pattern.validate();
    return pattern;
}

LatticeProgram prefix(const LatticeProgram& program, int r) {
    program.validate();
    if (r < 0 || r > program.measured_cols) {
        throw ValidationError("prefix length exceeds the program");
    }
    LatticeProgram out = program;
    out.measured_cols = r;
    out.column_angles.resize(static_cast<std::size_t>(r));
    return out;
}

StateVector intended_state(const LatticeProgram& program, const StateVector& input) {
    program.validate();
    if (input.num_qubits() != program.layout.rows) {
        throw ValidationError("oracle input must have one qubit per row");
    }
    StateVector state = input;
    for (int col = 0; col < program.measured_cols; ++col) {
        for (const auto& [a, b] : program.layout.vertical_edges_in_column(col)) {
            apply_cz_in_place(state, program.layout.row_of(a), program.layout.row_of(b));
        }
        for (int row = 0; row < program.layout.rows; ++row) {
            apply_single_qubit_gate_in_place(
                state, row, hadamard_gate() * phase_gate(-program.column_angles[col][row]));
        }
    }
    return state;
}

LatticeProgram wire_identity_program(int cols, int rows) {
    if (cols < 2) {
        throw ValidationError("a wire needs at least 2 columns");
    }
    LatticeProgram program;
    program.layout = ClusterLayout::horizontal_wires(rows, cols);
    program.measured_cols = cols - 1;
    program.column_angles.assign(static_cast<std::size_t>(cols - 1),
                                 std::vector<double>(static_cast<std::size_t>(rows), 0.0));
    if (program.layout.num_qubits() > kMaxStateQubits) {
        throw CapacityError("wire program exceeds the statevector capacity");
    }
    return program;
}

LatticeProgram rz_program(double alpha, int rows) {
    LatticeProgram program = wire_identity_program(3, rows);
    // H P(0) H P(-(-alpha)) = P(alpha) per wire.
    for (int row = 0; row < rows; ++row) program.column_angles[0][static_cast<std::size_t>(row)] = -alpha;
    return program;
}

LatticeProgram euler_rotation_program(double alpha, double beta, double gamma, int rows) {
    LatticeProgram program = wire_identity_program(5, rows);
    const double base[4] = {-alpha, -beta, -gamma, 0.0};
    for (int col = 0; col < 4; ++col) {
        for (int row = 0; row < rows; ++row) {
            program.column_angles[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] =
                base[col];
        }
    }
    return program;
}

MeasurementPattern builtin_pattern(const std::string& name, const std::vector<double>& args,
                                   int rows) {
    if (name == "wire_identity") {
        if (args.size() != 1) {
            throw ValidationError("wire_identity takes one argument (column count)");
        }
        const double m = args[0];
        if (m != std::floor(m) || m < 2) {
            throw ValidationError("wire_identity column count must be an integer >= 2");
        }
        return to_pattern(wire_identity_program(static_cast<int>(m), rows));
    }
    if (name == "rz") {
        if (args.size() != 1) {
            throw ValidationError("rz takes one argument (alpha)");
        }
        return to_pattern(rz_program(args[0], rows));
    }
    if (name == "euler_rotation") {
        if (args.size() != 3) {
            throw ValidationError("euler_rotation takes three arguments (alpha, beta, gamma)");
        }
        return to_pattern(euler_rotation_program(args[0], args[1], args[2], rows));
    }
    throw ValidationError("unknown builtin pattern '" + name + "'");
}

LatticeProgram infer_lattice_program(const MeasurementPattern& pattern) {
    pattern.validate();
    check_lattice_edges(pattern.layout);
    const ClusterLayout& layout = pattern.layout;
    const int rows = layout.rows;
    if (pattern.steps.size() % static_cast<std::size_t>(rows) != 0) {
        throw UnsupportedError("measured qubits do not form whole columns");
    }
    const int r = static_cast<int>(pattern.steps.size()) / rows;

    LatticeProgram program;
    program.layout = layout;
    program.measured_cols = r;
    program.column_angles.assign(static_cast<std::size_t>(r),
                                 std::vector<double>(static_cast<std::size_t>(rows), 0.0));
    for (std::size_t i = 0; i < pattern.steps.size(); ++i) {
        const auto& step = pattern.steps[i];
        const int col = static_cast<int>(i) / rows;
        const int row = static_cast<int>(i) % rows;
        if (step.qubit != layout.qubit_index(row, col)) {
            throw UnsupportedError("steps are not in column-major layer order");
        }
        program.column_angles[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] =
            step.base_angle;
    }

    // The program must reproduce the pattern's dependency and correction
    // structure exactly (up to domain ordering).
    MeasurementPattern rebuilt = to_pattern(program);
    auto same_domain = [](std::vector<int> a, std::vector<int> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    for (std::size_t i = 0; i < pattern.steps.size(); ++i) {
        if (!same_domain(pattern.steps[i].s_domain, rebuilt.steps[i].s_domain) ||
            !same_domain(pattern.steps[i].t_domain, rebuilt.steps[i].t_domain)) {
            throw UnsupportedError("step dependencies do not match the lattice convention");
        }
    }
    if (pattern.sorted_outputs() != rebuilt.sorted_outputs()) {
        throw UnsupportedError("outputs do not match the remaining columns");
    }
    auto same_corrections = [&](const std::map<int, std::vector<int>>& a,
                                const std::map<int, std::vector<int>>& b) {
        for (int q : pattern.sorted_outputs()) {
            std::vector<int> da, db;
            if (auto it = a.find(q); it != a.end()) da = it->second;
            if (auto it = b.find(q); it != b.end()) db = it->second;
            if (!same_domain(da, db)) return false;
        }
        return true;
    };
    if (!same_corrections(pattern.x_corrections, rebuilt.x_corrections) ||
        !same_corrections(pattern.z_corrections, rebuilt.z_corrections)) {
        throw UnsupportedError("correction sets do not match the lattice convention");
    }
    return program;
}

}  // namespace mbqc
