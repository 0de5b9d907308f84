#include "tropmod/homology.hpp"

#include "tropmod/error.hpp"

#include <map>
#include <sstream>

namespace tropmod {

std::string HomologyGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << 'Z';
        if (free_rank > 1)
            out << '^' << free_rank;
        first = false;
    }
    std::map<BigInt, std::size_t> counts;
    for (const BigInt& t : torsion)
        ++counts[t];
    for (const auto& [t, k] : counts) {
        out << (first ? "" : "+") << "Z_" << t.get_str();
        if (k > 1)
            out << '^' << k;
        first = false;
    }
    return out.str();
}

std::vector<std::size_t> HomologyResult::reduced_betti() const
{
    std::vector<std::size_t> out = betti;
    if (!out.empty() && out[0] > 0)
        --out[0];
    return out;
}

std::vector<HomologyGroup> HomologyResult::reduced_groups() const
{
    std::vector<HomologyGroup> out = groups;
    if (!out.empty() && out[0].free_rank > 0)
        --out[0].free_rank;
    return out;
}

void validate_complex(const ChainComplexData& c)
{
    if (c.boundaries.size() != c.cell_counts.size())
        throw Error(ErrorCode::NotAComplex, "one boundary matrix per dimension required");
    for (std::size_t d = 0; d < c.boundaries.size(); ++d) {
        const SparseMatrix& m = c.boundaries[d];
        const std::size_t expect_rows = d == 0 ? 0 : c.cell_counts[d - 1];
        if (m.cols != c.cell_counts[d] || m.rows != expect_rows || m.columns.size() != m.cols)
            throw Error(ErrorCode::NotAComplex, "boundary " + std::to_string(d) + " has the wrong shape");
        for (const auto& col : m.columns)
            for (auto [r, v] : col)
                if (r >= m.rows)
                    throw Error(ErrorCode::NotAComplex, "boundary " + std::to_string(d) + " row out of range");
    }
    for (std::size_t d = 2; d < c.boundaries.size(); ++d) {
        const SparseMatrix& lower = c.boundaries[d - 1];
        const SparseMatrix& upper = c.boundaries[d];
        for (std::size_t j = 0; j < upper.cols; ++j) {
            std::map<std::uint32_t, std::int64_t> acc;
            for (auto [mid, coeff] : upper.columns[j])
                for (auto [row, v] : lower.columns[mid])
                    acc[row] += coeff * v;
            for (auto [row, v] : acc) {
                if (c.ring == Ring::Z2 ? (v % 2 != 0) : (v != 0))
                    throw Error(ErrorCode::NotAComplex, "boundary of boundary is nonzero in dimension " + std::to_string(d));
            }
        }
    }
}

HomologyResult homology(const ChainComplexData& c, Ring ring)
{
    if (ring == Ring::Z && c.ring == Ring::Z2)
        throw Error(ErrorCode::BadParameter, "integral homology needs an integral complex");
    validate_complex(c);

    const std::size_t dims = c.cell_counts.size();
    HomologyResult result;
    result.ring = ring;
    std::vector<std::size_t> rank(dims + 1, 0);
    std::vector<SnfResult> snf(dims + 1);
    for (std::size_t d = 1; d < dims; ++d) {
        if (ring == Ring::Z2) {
            rank[d] = gf2_rank_auto(c.boundaries[d]);
        } else {
            snf[d] = smith_normal_form(c.boundaries[d]);
            rank[d] = snf[d].rank;
        }
    }
    for (std::size_t d = 0; d < dims; ++d) {
        result.betti.push_back(c.cell_counts[d] - rank[d] - rank[d + 1]);
        if (ring == Ring::Z) {
            HomologyGroup g;
            g.free_rank = result.betti.back();
            for (const BigInt& f : snf[d + 1].factors)
                if (f > 1)
                    g.torsion.push_back(f);
            result.groups.push_back(std::move(g));
        }
    }
    return result;
}

HomologyResult homology(const DeltaComplexData& c, Ring ring)
{
    return homology(c.to_chain_complex(ring), ring);
}

std::vector<std::size_t> z2_betti_from_integral(const HomologyResult& integral)
{
    auto even_torsion = [&](std::size_t d) {
        std::size_t n = 0;
        for (const BigInt& t : integral.groups[d].torsion)
            if (mpz_even_p(t.get_mpz_t()))
                ++n;
        return n;
    };
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < integral.groups.size(); ++d)
        out.push_back(integral.groups[d].free_rank + even_torsion(d) + (d > 0 ? even_torsion(d - 1) : 0));
    return out;
}

} // namespace tropmod
