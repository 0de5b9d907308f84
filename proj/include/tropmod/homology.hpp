#pragma once

#include "tropmod/chain_complex.hpp"
#include "tropmod/linalg.hpp"

#include <string>
#include <vector>

namespace tropmod {

/// Z^free_rank plus the cyclic torsion summands Z/t.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    /// `0`, `Z`, `Z^3+Z_2`, ...
    std::string to_string() const;
};

struct HomologyResult {
    Ring ring = Ring::Z2;
    /// Unreduced Betti numbers over the ring (free ranks over Z).
    std::vector<std::size_t> betti;
    /// Filled over Z only.
    std::vector<HomologyGroup> groups;

    /// Betti numbers with the augmentation removed from degree 0 (empty complexes stay 0).
    std::vector<std::size_t> reduced_betti() const;
    std::vector<HomologyGroup> reduced_groups() const;
};

/// Throws NotAComplex when some composite of boundaries is nonzero over the complex's ring.
void validate_complex(const ChainComplexData& c);

/// Z2 ranks over a Z complex are taken mod 2. Asking for Z over a Z2 complex throws
/// BadParameter.
HomologyResult homology(const ChainComplexData& c, Ring ring);
HomologyResult homology(const DeltaComplexData& c, Ring ring);

/// Z2 Betti numbers predicted from integral homology by the universal coefficient theorem.
std::vector<std::size_t> z2_betti_from_integral(const HomologyResult& integral);

} // namespace tropmod
