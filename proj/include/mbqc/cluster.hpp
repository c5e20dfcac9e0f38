#pragma once

#include <utility>
#include <vector>

#include "mbqc/state.hpp"

namespace mbqc {

/// Qubits on an n x m grid, column-major: qubit(row, col) = col * rows + row,
/// so every column (layer) is a contiguous index range. The edge set defaults
/// to the nearest-neighbor square lattice but arbitrary graphs are accepted.
struct ClusterLayout {
    int rows = 1;
    int cols = 1;
    std::vector<std::pair<int, int>> edges;  // normalized: first < second, sorted, unique

    static ClusterLayout lattice(int rows, int cols);
    static ClusterLayout custom(int rows, int cols, std::vector<std::pair<int, int>> edges);
    /// Default lattice plus user edges (the pattern-file form).
    static ClusterLayout lattice_with_extra(int rows, int cols,
                                            const std::vector<std::pair<int, int>>& extra);
    /// Horizontal chains only: n independent wires.
    static ClusterLayout horizontal_wires(int rows, int cols);

    int num_qubits() const { return rows * cols; }
    int qubit_index(int row, int col) const { return col * rows + row; }
    int row_of(int qubit) const { return qubit % rows; }
    int col_of(int qubit) const { return qubit / rows; }

    bool has_edge(int a, int b) const;
    std::vector<int> neighbors(int qubit) const;
    /// Edges joining two qubits of the given column.
    std::vector<std::pair<int, int>> vertical_edges_in_column(int col) const;
    /// True when every (row, col)-(row, col+1) edge exists for cols 0..cols-2.
    bool has_all_horizontal_edges() const;

    bool operator==(const ClusterLayout&) const = default;
};

std::vector<std::pair<int, int>> lattice_edges(int rows, int cols);

enum class RegionKind { Alice, Bob };  // Alice <-> C_r (first r layers), Bob <-> O_r

struct Region {
    RegionKind kind = RegionKind::Alice;
    int r = 1;
    std::vector<int> qubits;  // ascending
};

/// C_r = columns 0..r-1, O_r = columns r..cols-1; requires 1 <= r <= cols-1.
Region region(const ClusterLayout& layout, RegionKind kind, int r);

/// |+>^{nm} followed by CZ on every edge.
StateVector build_cluster(const ClusterLayout& layout);

/// Places `input` on column 0, |+> everywhere else, then CZ on every edge.
/// With a |+>^n input this coincides with build_cluster.
StateVector encode_input(const StateVector& input, const ClusterLayout& layout);

}  // namespace mbqc
