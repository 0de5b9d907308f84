#include "tropmod/chain_complex.hpp"

#include <map>

namespace tropmod {

std::string_view ring_name(Ring ring)
{
    return ring == Ring::Z2 ? "z2" : "z";
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& col : columns)
        n += col.size();
    return n;
}

std::vector<std::size_t> DeltaComplexData::f_vector() const
{
    std::vector<std::size_t> out;
    for (const auto& level : faces)
        out.push_back(level.size());
    return out;
}

ChainComplexData DeltaComplexData::to_chain_complex(Ring ring) const
{
    ChainComplexData c;
    c.ring = ring;
    c.cell_counts = f_vector();
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const std::size_t rows = k == 0 ? 0 : faces[k - 1].size();
        SparseMatrix m(rows, faces[k].size());
        if (k > 0) {
            for (std::size_t i = 0; i < faces[k].size(); ++i) {
                std::map<std::uint32_t, std::int64_t> acc;
                for (std::size_t r = 0; r < faces[k][i].size(); ++r)
                    acc[faces[k][i][r]] += ring == Ring::Z2 ? 1 : (r % 2 == 0 ? 1 : -1);
                for (auto [row, v] : acc) {
                    if (ring == Ring::Z2)
                        v &= 1;
                    if (v != 0)
                        m.columns[i].emplace_back(row, v);
                }
            }
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

} // namespace tropmod
