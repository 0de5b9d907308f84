#pragma once

#include "tropmod/chain_complex.hpp"
#include "tropmod/homology.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tropmod {

// Cubical structure on the m-torus: each circle has vertices + and - joined by edges i+ and
// i-. Conjugation swaps i+ and i-; X_{m+1} is the quotient.

enum class Symbol : std::uint8_t { P = 0, M = 1, IP = 2, IM = 3 };

enum class Space { Torus, Quotient };

std::string_view symbol_name(Symbol s);
std::string_view space_name(Space s); // "torus" / "xq"

/// A cell of T^m, packed two bits per position with position 1 most significant, so that
/// comparing keys is lexicographic order with P < M < IP < IM.
class TorusCell {
public:
    static constexpr int max_positions = 31;

    TorusCell() = default;
    explicit TorusCell(const std::vector<Symbol>& symbols);
    static TorusCell from_key(int m, std::uint64_t key) { return TorusCell(m, key); }

    int size() const { return m_; }
    std::uint64_t key() const { return key_; }
    Symbol at(int i) const { return static_cast<Symbol>((key_ >> shift(i)) & 3U); }
    TorusCell with(int i, Symbol s) const;
    std::vector<Symbol> symbols() const;

    int dimension() const;
    /// I-positions in increasing order (0-based).
    std::vector<int> interval_positions() const;
    bool is_canonical() const;

    /// Comma-joined symbol names, e.g. `i+,+,-`.
    std::string to_string() const;

    auto operator<=>(const TorusCell&) const = default;

private:
    TorusCell(int m, std::uint64_t key) : m_(m), key_(key) {}
    int shift(int i) const { return 2 * (m_ - 1 - i); }

    int m_ = 0;
    std::uint64_t key_ = 0;
};

/// Accepts `+`, `-` (also U+2212), `i+`, `i-`, comma separated, optionally in parentheses.
TorusCell parse_cell(std::string_view text);

TorusCell conjugate(const TorusCell& c);
TorusCell canonicalize(const TorusCell& c);

/// All d-cells in lexicographic order. BadDimension unless 0 <= d <= m.
std::vector<TorusCell> torus_cells(int m, int d);
/// Canonical representatives only.
std::vector<TorusCell> quotient_cells(int m, int d);

/// Sparse chain: sorted by cell, no zero coefficients. Over Z2 every coefficient is 1.
using Chain = std::vector<std::pair<TorusCell, std::int64_t>>;

/// NotACell for vertices, for non-canonical cells in the quotient.
Chain boundary(const TorusCell& c, Space space, Ring ring);
Chain boundary(const Chain& chain, Space space, Ring ring);

/// S holds 1-based positions. BadSubset when empty, repeated or out of range.
Chain sigma_cycle(int m, const std::vector<int>& subset);

Chain chain_map_q(const Chain& chain, Ring ring);

std::size_t default_max_m(Ring ring);

struct CubicalComplex {
    int m = 0;
    Space space = Space::Torus;
    std::vector<std::vector<TorusCell>> cells;
    ChainComplexData data;
};

/// ResourceLimit when m exceeds `max_m` (0 selects default_max_m(ring)).
CubicalComplex build_chain_complex(int m, Space space, Ring ring, std::size_t max_m = 0);

/// Link of a vertex of X_{m+1} as a Delta-complex; simplices in dimension k-1 are the
/// canonical k-cells incident to v, in quotient_cells order.
DeltaComplexData vertex_link(int m, const TorusCell& v);

/// Reduced Z2 Betti number of X_{m+1} predicted by the closed formula.
std::uint64_t betti_formula(int m, int i);
std::uint64_t binomial(int n, int k);

/// Reduced Z2 Betti numbers of X_{m+1} in degrees 0..m, by rank computation.
std::vector<std::size_t> quotient_reduced_betti(int m, std::size_t max_m = 0);

struct CheckReport {
    bool ok = true;
    /// One line per checked identity, in order.
    std::vector<std::string> lines;
    std::string first_failure;
};

/// Compares quotient_reduced_betti(m) with betti_formula(m, i) for 1 <= m <= m_max.
CheckReport check_formula(int m_max, std::size_t max_m = 0);

/// Checks b_i(X_{m+2}) = 2 b_i(X_{m+1}) + C(m, i-1) for 2 <= i <= m+1 and b_1 = 0, all
/// from rank computations, for m + 1 <= m_max. BadParameter when m_max < 2.
CheckReport check_recursion(int m_max, std::size_t max_m = 0);

struct ConjectureReport {
    int m = 0;
    std::vector<std::size_t> z2_reduced;
    std::vector<HomologyGroup> integral_reduced;
    /// Z2 Betti numbers recovered from the integral groups match the direct computation.
    bool uct_consistent = false;
    /// H_{2i} = Z_2^a + Z^b with a = b_{2i+1}, b = b_{2i} - a; every other group vanishes.
    bool pattern_holds = false;
    std::vector<std::string> mismatches;
};

ConjectureReport conjecture_report(int m, std::size_t max_m = 0);

/// Export format: header, per-dimension cell listing, then nonzero boundary entries
/// ordered by dimension, column, row.
std::string format_chain_complex(const CubicalComplex& c);

struct ParsedChainComplex {
    std::string space;
    int m = 0;
    std::vector<std::vector<std::string>> cell_labels;
    ChainComplexData data;
};

/// ParseError with a line number on malformed input.
ParsedChainComplex parse_chain_complex(std::string_view text);

} // namespace tropmod
