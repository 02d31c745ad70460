#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qmatball/admissible.hpp"
#include "qmatball/soibelman.hpp"
#include "qmatball/tensor_operator.hpp"

namespace qmatball {

enum class CellColor { White, Light, Dark };

struct Cell {
    CellColor color = CellColor::White;
    double phase = 0.0;  // meaningful for Light only
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// n x n cells; rows counted from the top and labelled on the right, columns from the left.
class GridDiagram {
public:
    GridDiagram() = default;
    explicit GridDiagram(int n) : n_(n), cells_(static_cast<std::size_t>(n * n)) {}

    int n() const { return n_; }
    const Cell& at(int row, int col) const { return cells_[index(row, col)]; }
    Cell& at(int row, int col) { return cells_[index(row, col)]; }

    /// Tensor factor (1-based) of the Fock representation that sits in this cell.
    int factor_index(int row, int col) const { return (col - 1) * n_ + (n_ - row + 1); }

    /// (row, col) of the white cells ordered by factor index.
    std::vector<std::pair<int, int>> white_cells() const;

    friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 1 || row > n_ || col < 1 || col > n_) throw InvalidInput("grid cell out of range");
        return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
    }
    int n_ = 0;
    std::vector<Cell> cells_;
};

/// Row j: n-k_j-1 dark cells, one light(phi_j) cell (dark when k_j is at its bound), k_j white cells.
GridDiagram grid_from_string(const AdmissibleString& s);
/// Inverse of grid_from_string; throws InvalidInput for colorings that no admissible string produces.
AdmissibleString string_from_grid(const GridDiagram& g);

/// Glyph rows ('.' white, 'o' light, '#' dark) followed by the row label and, for light cells,
/// "phi=<value>"; a final line of column labels.
std::string render_ascii(const GridDiagram& g);
GridDiagram parse_ascii(const std::string& text);

enum class Arrow { VertPass, HorizPass, HookLeftUp, HookBottomRight };

std::string to_string(Arrow a);

struct PathStep {
    int row;
    int col;
    Arrow arrow;
    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Monotone staircase entering at the bottom of column k and leaving at the right of row j.
struct LatticePath {
    int k = 0;
    int j = 0;
    std::vector<PathStep> steps;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// All such paths; up-moves are explored before right-moves.
std::vector<LatticePath> enumerate_paths(int n, int k, int j);

inline Primitive arrow_primitive(Arrow a) {
    switch (a) {
        case Arrow::VertPass: return Primitive::T21;
        case Arrow::HorizPass: return Primitive::T12;
        case Arrow::HookLeftUp: return Primitive::T11;
        case Arrow::HookBottomRight: return Primitive::T22;
    }
    return Primitive::T21;
}

/// (-q)^{k-n} times the sum over paths of elementary tensors on the white cells; colored cells are
/// evaluated by tau_phi (tau_0 for dark) and removed from the tensor.
template <typename Scalar = double>
TensorOperator<Scalar> synthesize_z(const GridDiagram& grid, int k, int j, Scalar q, int N) {
    const int n = grid.n();
    if (k < 1 || k > n || j < 1 || j > n) throw InvalidInput("generator index out of range");
    const auto whites = grid.white_cells();
    std::vector<int> slot(static_cast<std::size_t>(n * n + 1), -1);
    for (std::size_t i = 0; i < whites.size(); ++i)
        slot[static_cast<std::size_t>(grid.factor_index(whites[i].first, whites[i].second))] = static_cast<int>(i);

    const TBlocks<Scalar> blocks(q, N);
    auto block_for = [&](Arrow a) -> const FactorPtr<Scalar>& {
        switch (a) {
            case Arrow::VertPass: return blocks(2, 1);
            case Arrow::HorizPass: return blocks(1, 2);
            case Arrow::HookLeftUp: return blocks(1, 1);
            case Arrow::HookBottomRight: break;
        }
        return blocks(2, 2);
    };

    const std::complex<Scalar> prefactor(std::pow(-q, k - n), 0);
    TensorOperator<Scalar> out(static_cast<int>(whites.size()), N);
    for (const auto& path : enumerate_paths(n, k, j)) {
        TensorTerm<Scalar> t{prefactor, std::vector<FactorPtr<Scalar>>(whites.size())};
        for (const auto& step : path.steps) {
            const Cell& cell = grid.at(step.row, step.col);
            if (cell.color == CellColor::White) {
                t.factors[static_cast<std::size_t>(slot[static_cast<std::size_t>(grid.factor_index(step.row, step.col))])] = block_for(step.arrow);
                continue;
            }
            const Scalar phi = cell.color == CellColor::Light ? static_cast<Scalar>(cell.phase) : Scalar(0);
            t.scalar *= *tau(block_for(step.arrow), phi);
        }
        out.add_term(std::move(t));
    }
    return out;
}

}  // namespace qmatball
