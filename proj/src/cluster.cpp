#include "mbqc/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mbqc {

namespace {

std::vector<std::pair<int, int>> normalize_edges(int num_qubits,
                                                 std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw ValidationError("edge joins a qubit to itself");
        }
        if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
            throw ValidationError("edge references a qubit outside the layout");
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw ValidationError("duplicate edge in layout");
    }
    return edges;
}

void check_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("layout needs rows >= 1 and cols >= 1");
    }
}

}  // namespace

std::vector<std::pair<int, int>> lattice_edges(int rows, int cols) {
    check_grid(rows, cols);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                  static_cast<std::size_t>(rows - 1) * cols);
    auto idx = [rows](int row, int col) { return col * rows + row; };
    for (int col = 0; col < cols; ++col) {
        for (int row = 0; row < rows; ++row) {
            if (col + 1 < cols) edges.emplace_back(idx(row, col), idx(row, col + 1));
            if (row + 1 < rows) edges.emplace_back(idx(row, col), idx(row + 1, col));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

ClusterLayout ClusterLayout::lattice(int rows, int cols) {
    return {rows, cols, lattice_edges(rows, cols)};
}

ClusterLayout ClusterLayout::custom(int rows, int cols, std::vector<std::pair<int, int>> edges) {
    check_grid(rows, cols);
    return {rows, cols, normalize_edges(rows * cols, std::move(edges))};
}

ClusterLayout ClusterLayout::lattice_with_extra(int rows, int cols,
                                                const std::vector<std::pair<int, int>>& extra) {
    auto edges = lattice_edges(rows, cols);
    edges.insert(edges.end(), extra.begin(), extra.end());
    return custom(rows, cols, std::move(edges));
}

ClusterLayout ClusterLayout::horizontal_wires(int rows, int cols) {
    check_grid(rows, cols);
    std::vector<std::pair<int, int>> edges;
    auto idx = [rows](int row, int col) { return col * rows + row; };
    for (int col = 0; col + 1 < cols; ++col) {
        for (int row = 0; row < rows; ++row) {
            edges.emplace_back(idx(row, col), idx(row, col + 1));
        }
    }
    return custom(rows, cols, std::move(edges));
}

bool ClusterLayout::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<int> ClusterLayout::neighbors(int qubit) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == qubit) out.push_back(b);
        if (b == qubit) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> ClusterLayout::vertical_edges_in_column(int col) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) {
        if (col_of(e.first) == col && col_of(e.second) == col) out.push_back(e);
    }
    return out;
}

bool ClusterLayout::has_all_horizontal_edges() const {
    for (int col = 0; col + 1 < cols; ++col) {
        for (int row = 0; row < rows; ++row) {
            if (!has_edge(qubit_index(row, col), qubit_index(row, col + 1))) return false;
        }
    }
    return true;
}

Region region(const ClusterLayout& layout, RegionKind kind, int r) {
    if (r < 1 || r > layout.cols - 1) {
        throw ValidationError("region index r must satisfy 1 <= r <= cols-1, got " +
                              std::to_string(r));
    }
    Region out{kind, r, {}};
    const int first = kind == RegionKind::Alice ? 0 : r * layout.rows;
    const int last = kind == RegionKind::Alice ? r * layout.rows : layout.num_qubits();
    out.qubits.reserve(static_cast<std::size_t>(last - first));
    for (int q = first; q < last; ++q) out.qubits.push_back(q);
    return out;
}

StateVector build_cluster(const ClusterLayout& layout) {
    if (layout.num_qubits() > kMaxStateQubits) {
        throw CapacityError("cluster of " + std::to_string(layout.num_qubits()) +
                            " qubits exceeds the statevector capacity");
    }
    StateVector state = new_plus_state(layout.num_qubits());
    for (const auto& [a, b] : layout.edges) {
        apply_cz_in_place(state, a, b);
    }
    return state;
}

StateVector encode_input(const StateVector& input, const ClusterLayout& layout) {
    if (input.num_qubits() != layout.rows) {
        throw ValidationError("input must have exactly rows = " + std::to_string(layout.rows) +
                              " qubits");
    }
    const int total = layout.num_qubits();
    if (total > kMaxStateQubits) {
        throw CapacityError("resource of " + std::to_string(total) +
                            " qubits exceeds the statevector capacity");
    }
    // Column 0 occupies the low index bits, so the resource is
    // |+...+> ⊗ input with the input in the least significant block.
    const Eigen::Index in_dim = input.dim();
    const Eigen::Index rest_dim = Eigen::Index{1} << (total - layout.rows);
    const double plus_amp = std::pow(2.0, -0.5 * (total - layout.rows));
    Eigen::VectorXcd amps(in_dim * rest_dim);
    for (Eigen::Index y = 0; y < rest_dim; ++y) {
        amps.segment(y * in_dim, in_dim) = plus_amp * input.amplitudes();
    }
    StateVector state = StateVector::from_amplitudes(std::move(amps));
    for (const auto& [a, b] : layout.edges) {
        apply_cz_in_place(state, a, b);
    }
    return state;
}

}  // namespace mbqc
