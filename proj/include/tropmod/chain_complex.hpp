#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace tropmod {

enum class Ring { Z2, Z };

std::string_view ring_name(Ring ring);

/// Column-major sparse integer matrix; every column is sorted by row and free of zeros.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    std::size_t nonzeros() const;
};

/// Cellular chain complex: `boundaries[d]` maps d-cells to (d-1)-cells; `boundaries[0]`
/// is the empty 0 x n0 matrix. Over Z2 every stored coefficient is 1.
struct ChainComplexData {
    Ring ring = Ring::Z2;
    std::vector<std::size_t> cell_counts;
    std::vector<SparseMatrix> boundaries;

    std::size_t top_dimension() const { return cell_counts.empty() ? 0 : cell_counts.size() - 1; }
};

/// Delta-complex given by ordered face lists: `faces[k][i]` are the k+1 faces (indices of
/// (k-1)-cells) of the k-cell i. Repeated faces and multi-edges are allowed.
struct DeltaComplexData {
    std::vector<std::vector<std::vector<std::uint32_t>>> faces;

    std::vector<std::size_t> f_vector() const;
    /// Z2: sum of faces mod 2. Z: alternating sum over the face order.
    ChainComplexData to_chain_complex(Ring ring) const;
};

} // namespace tropmod
