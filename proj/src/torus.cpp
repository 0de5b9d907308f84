#include "tropmod/torus.hpp"

#include "tropmod/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <sstream>

namespace tropmod {

namespace {

std::uint64_t high_bits(int m)
{
    std::uint64_t mask = 0;
    for (int i = 0; i < m; ++i)
        mask = (mask << 2) | 2U;
    return mask;
}

void check_size(int m)
{
    if (m < 0 || m > TorusCell::max_positions)
        throw Error(ErrorCode::BadDimension, "m must lie in [0, " + std::to_string(TorusCell::max_positions) + "], got " + std::to_string(m));
}

// Emits cells with exactly `remaining` I-symbols in lexicographic order.
template <class F>
void enumerate(int m, int pos, int remaining, bool canonical_only, bool seen_interval, std::uint64_t key, F& emit)
{
    if (pos == m) {
        emit(key);
        return;
    }
    const int left = m - pos;
    for (std::uint64_t s = 0; s < 4; ++s) {
        const bool interval = s >= 2;
        if (interval && remaining == 0)
            continue;
        if (!interval && remaining == left)
            continue;
        if (canonical_only && !seen_interval && s == 3)
            continue;
        enumerate(m, pos + 1, remaining - (interval ? 1 : 0), canonical_only, seen_interval || interval, (key << 2) | s, emit);
    }
}

std::vector<TorusCell> cells_of(int m, int d, bool canonical_only)
{
    check_size(m);
    if (d < 0 || d > m)
        throw Error(ErrorCode::BadDimension, "dimension " + std::to_string(d) + " outside [0, " + std::to_string(m) + "]");
    std::vector<TorusCell> out;
    auto emit = [&](std::uint64_t key) { out.push_back(TorusCell::from_key(m, key)); };
    enumerate(m, 0, d, canonical_only, false, 0, emit);
    return out;
}

// Sorts, merges and drops zeros; over Z2 coefficients end up as 1.
Chain normalize(Chain chain, Ring ring)
{
    std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Chain out;
    for (const auto& [cell, coeff] : chain) {
        if (!out.empty() && out.back().first == cell)
            out.back().second += coeff;
        else
            out.emplace_back(cell, coeff);
    }
    std::erase_if(out, [&](auto& term) {
        if (ring == Ring::Z2)
            term.second = term.second % 2 != 0 ? 1 : 0;
        return term.second == 0;
    });
    return out;
}

std::uint32_t index_of(const std::vector<TorusCell>& cells, const TorusCell& c)
{
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c)
        throw Error(ErrorCode::NotACell, "face " + c.to_string() + " missing from the cell list");
    return static_cast<std::uint32_t>(it - cells.begin());
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

} // namespace

std::string_view symbol_name(Symbol s)
{
    switch (s) {
    case Symbol::P: return "+";
    case Symbol::M: return "-";
    case Symbol::IP: return "i+";
    case Symbol::IM: return "i-";
    }
    return "?";
}

std::string_view space_name(Space s)
{
    return s == Space::Torus ? "torus" : "xq";
}

TorusCell::TorusCell(const std::vector<Symbol>& symbols)
{
    check_size(static_cast<int>(symbols.size()));
    m_ = static_cast<int>(symbols.size());
    for (Symbol s : symbols)
        key_ = (key_ << 2) | static_cast<std::uint64_t>(s);
}

TorusCell TorusCell::with(int i, Symbol s) const
{
    const std::uint64_t cleared = key_ & ~(std::uint64_t{3} << shift(i));
    return TorusCell(m_, cleared | (static_cast<std::uint64_t>(s) << shift(i)));
}

std::vector<Symbol> TorusCell::symbols() const
{
    std::vector<Symbol> out;
    for (int i = 0; i < m_; ++i)
        out.push_back(at(i));
    return out;
}

int TorusCell::dimension() const
{
    return std::popcount(key_ & high_bits(m_));
}

std::vector<int> TorusCell::interval_positions() const
{
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
        if (static_cast<int>(at(i)) >= 2)
            out.push_back(i);
    return out;
}

bool TorusCell::is_canonical() const
{
    for (int i = 0; i < m_; ++i) {
        Symbol s = at(i);
        if (s == Symbol::IP)
            return true;
        if (s == Symbol::IM)
            return false;
    }
    return true;
}

std::string TorusCell::to_string() const
{
    std::string out;
    for (int i = 0; i < m_; ++i) {
        if (i)
            out += ',';
        out += symbol_name(at(i));
    }
    return out;
}

TorusCell parse_cell(std::string_view text)
{
    std::string s(text);
    // U+2212 MINUS SIGN
    for (std::size_t at; (at = s.find("\xE2\x88\x92")) != std::string::npos;)
        s.replace(at, 3, "-");
    std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<Symbol> symbols;
    if (!s.empty()) {
        std::stringstream in(s);
        for (std::string tok; std::getline(in, tok, ',');) {
            if (tok == "+")
                symbols.push_back(Symbol::P);
            else if (tok == "-")
                symbols.push_back(Symbol::M);
            else if (tok == "i+")
                symbols.push_back(Symbol::IP);
            else if (tok == "i-")
                symbols.push_back(Symbol::IM);
            else
                throw Error(ErrorCode::ParseError, "unknown cell symbol '" + tok + "' in '" + std::string(text) + "'");
        }
        if (s.back() == ',')
            throw Error(ErrorCode::ParseError, "trailing comma in '" + std::string(text) + "'");
    }
    if (symbols.size() > static_cast<std::size_t>(TorusCell::max_positions))
        throw Error(ErrorCode::ParseError, "too many positions in '" + std::string(text) + "'");
    return TorusCell(symbols);
}

TorusCell conjugate(const TorusCell& c)
{
    const std::uint64_t key = c.key();
    return TorusCell::from_key(c.size(), key ^ ((key & high_bits(c.size())) >> 1));
}

TorusCell canonicalize(const TorusCell& c)
{
    return c.is_canonical() ? c : conjugate(c);
}

std::vector<TorusCell> torus_cells(int m, int d)
{
    return cells_of(m, d, false);
}

std::vector<TorusCell> quotient_cells(int m, int d)
{
    return cells_of(m, d, true);
}

Chain boundary(const TorusCell& c, Space space, Ring ring)
{
    if (c.dimension() == 0)
        throw Error(ErrorCode::NotACell, "vertex " + c.to_string() + " has no boundary cell");
    if (space == Space::Quotient && !c.is_canonical())
        throw Error(ErrorCode::NotACell, c.to_string() + " is not a canonical quotient cell");
    Chain out;
    std::int64_t sign = 1;
    for (int pos : c.interval_positions()) {
        TorusCell at_m = c.with(pos, Symbol::M);
        TorusCell at_p = c.with(pos, Symbol::P);
        if (space == Space::Quotient) {
            at_m = canonicalize(at_m);
            at_p = canonicalize(at_p);
        }
        out.emplace_back(at_m, sign);
        out.emplace_back(at_p, -sign);
        sign = -sign;
    }
    return normalize(std::move(out), ring);
}

Chain boundary(const Chain& chain, Space space, Ring ring)
{
    Chain out;
    for (const auto& [cell, coeff] : chain)
        for (const auto& [face, v] : boundary(cell, space, ring))
            out.emplace_back(face, coeff * v);
    return normalize(std::move(out), ring);
}

Chain sigma_cycle(int m, const std::vector<int>& subset)
{
    check_size(m);
    if (subset.empty())
        throw Error(ErrorCode::BadSubset, "subset must be nonempty");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error(ErrorCode::BadSubset, "subset has a repeated position");
    if (s.front() < 1 || s.back() > m)
        throw Error(ErrorCode::BadSubset, "positions must lie in [1, " + std::to_string(m) + "]");

    const TorusCell base(std::vector<Symbol>(static_cast<std::size_t>(m), Symbol::P));
    Chain out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.size()); ++bits) {
        TorusCell c = base;
        for (std::size_t j = 0; j < s.size(); ++j)
            c = c.with(s[j] - 1, (bits >> j) & 1U ? Symbol::IM : Symbol::IP);
        out.emplace_back(c, 1);
    }
    return normalize(std::move(out), Ring::Z2);
}

Chain chain_map_q(const Chain& chain, Ring ring)
{
    Chain out;
    for (const auto& [cell, coeff] : chain)
        out.emplace_back(canonicalize(cell), coeff);
    return normalize(std::move(out), ring);
}

std::size_t default_max_m(Ring ring)
{
    return ring == Ring::Z2 ? 12 : 8;
}

CubicalComplex build_chain_complex(int m, Space space, Ring ring, std::size_t max_m)
{
    check_size(m);
    const std::size_t cap = max_m == 0 ? default_max_m(ring) : max_m;
    if (static_cast<std::size_t>(m) > cap)
        throw Error(ErrorCode::ResourceLimit, "m=" + std::to_string(m) + " exceeds the cap " + std::to_string(cap) + " for ring " + std::string(ring_name(ring)));

    CubicalComplex out;
    out.m = m;
    out.space = space;
    out.data.ring = ring;
    for (int d = 0; d <= m; ++d) {
        out.cells.push_back(cells_of(m, d, space == Space::Quotient));
        const auto& cols = out.cells.back();
        SparseMatrix b(d == 0 ? 0 : out.cells[d - 1].size(), cols.size());
        if (d > 0) {
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (const auto& [face, coeff] : boundary(cols[j], space, ring))
                    b.columns[j].emplace_back(index_of(out.cells[d - 1], face), coeff);
        }
        out.data.cell_counts.push_back(cols.size());
        out.data.boundaries.push_back(std::move(b));
    }
    return out;
}

DeltaComplexData vertex_link(int m, const TorusCell& v)
{
    if (m < 1)
        throw Error(ErrorCode::BadDimension, "vertex links need m >= 1");
    if (v.size() != m || v.dimension() != 0)
        throw Error(ErrorCode::NotAVertex, v.to_string() + " is not a vertex of X_" + std::to_string(m + 1));

    auto incident = [&](const TorusCell& c) {
        for (int i = 0; i < m; ++i)
            if (static_cast<int>(c.at(i)) < 2 && c.at(i) != v.at(i))
                return false;
        return true;
    };

    std::vector<std::vector<TorusCell>> simplices; // simplices[k-1]: incident k-cells
    DeltaComplexData out;
    for (int k = 1; k <= m; ++k) {
        std::vector<TorusCell> level;
        for (const TorusCell& c : quotient_cells(m, k))
            if (incident(c))
                level.push_back(c);
        std::vector<std::vector<std::uint32_t>> faces;
        for (const TorusCell& c : level) {
            std::vector<std::uint32_t> f;
            if (k > 1)
                for (int pos : c.interval_positions())
                    f.push_back(index_of(simplices.back(), canonicalize(c.with(pos, v.at(pos)))));
            faces.push_back(std::move(f));
        }
        simplices.push_back(std::move(level));
        out.faces.push_back(std::move(faces));
    }
    return out;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j)
        r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    return r;
}

std::uint64_t betti_formula(int m, int i)
{
    if (m < 1 || i < 2 || i > m)
        return 0;
    std::uint64_t sum = 0;
    for (int j = 0; j <= m - i; ++j)
        sum += (std::uint64_t{1} << j) * binomial(m - 1 - j, i - 1);
    return sum;
}

std::vector<std::size_t> quotient_reduced_betti(int m, std::size_t max_m)
{
    const CubicalComplex c = build_chain_complex(m, Space::Quotient, Ring::Z2, max_m);
    return homology(c.data, Ring::Z2).reduced_betti();
}

CheckReport check_formula(int m_max, std::size_t max_m)
{
    if (m_max < 1)
        throw Error(ErrorCode::BadParameter, "--max-m must be at least 1");
    const std::size_t cap = max_m == 0 ? default_max_m(Ring::Z2) : max_m;
    if (static_cast<std::size_t>(m_max) > cap)
        throw Error(ErrorCode::ResourceLimit, "m=" + std::to_string(m_max) + " exceeds the cap " + std::to_string(cap));
    CheckReport report;
    for (int m = 1; m <= m_max; ++m) {
        const auto computed = quotient_reduced_betti(m, cap);
        std::vector<std::size_t> predicted;
        for (int i = 0; i <= m; ++i)
            predicted.push_back(betti_formula(m, i));
        const bool ok = computed == predicted;
        std::string line = "m=" + std::to_string(m) + " computed " + join(computed) + " formula " + join(predicted) + (ok ? " ok" : " MISMATCH");
        if (!ok && report.ok)
            report.first_failure = line;
        report.ok = report.ok && ok;
        report.lines.push_back(std::move(line));
    }
    return report;
}

CheckReport check_recursion(int m_max, std::size_t max_m)
{
    if (m_max < 2)
        throw Error(ErrorCode::BadParameter, "--max-m must be at least 2");
    const std::size_t cap = max_m == 0 ? default_max_m(Ring::Z2) : max_m;
    if (static_cast<std::size_t>(m_max) > cap)
        throw Error(ErrorCode::ResourceLimit, "m=" + std::to_string(m_max) + " exceeds the cap " + std::to_string(cap));

    std::vector<std::vector<std::size_t>> b(static_cast<std::size_t>(m_max) + 1);
    for (int m = 1; m <= m_max; ++m)
        b[m] = quotient_reduced_betti(m, cap);
    auto at = [&](int m, int i) -> std::uint64_t { return i <= m ? b[m][i] : 0; };

    CheckReport report;
    auto record = [&](bool ok, std::string line) {
        line += ok ? " ok" : " FAIL";
        if (!ok && report.ok)
            report.first_failure = line;
        report.ok = report.ok && ok;
        report.lines.push_back(std::move(line));
    };
    for (int m = 1; m <= m_max; ++m)
        record(at(m, 1) == 0, "b1(X_" + std::to_string(m + 1) + ") = " + std::to_string(at(m, 1)));
    for (int m = 1; m < m_max; ++m) {
        for (int i = 2; i <= m + 1; ++i) {
            const std::uint64_t lhs = at(m + 1, i);
            const std::uint64_t rhs = 2 * at(m, i) + binomial(m, i - 1);
            record(lhs == rhs, "b" + std::to_string(i) + "(X_" + std::to_string(m + 2) + ") = " + std::to_string(lhs) + ", 2*" + std::to_string(at(m, i)) + " + C(" + std::to_string(m) + "," + std::to_string(i - 1) + ") = " + std::to_string(rhs));
        }
    }
    return report;
}

ConjectureReport conjecture_report(int m, std::size_t max_m)
{
    ConjectureReport report;
    report.m = m;
    const CubicalComplex integral = build_chain_complex(m, Space::Quotient, Ring::Z, max_m);
    const CubicalComplex mod2 = build_chain_complex(m, Space::Quotient, Ring::Z2, std::max<std::size_t>(max_m, default_max_m(Ring::Z2)));
    const HomologyResult hz = homology(integral.data, Ring::Z);
    const HomologyResult h2 = homology(mod2.data, Ring::Z2);

    report.z2_reduced = h2.reduced_betti();
    report.integral_reduced = hz.reduced_groups();
    report.uct_consistent = z2_betti_from_integral(hz) == h2.betti;

    report.pattern_holds = true;
    const auto& z2 = report.z2_reduced;
    for (std::size_t d = 0; d < report.integral_reduced.size(); ++d) {
        HomologyGroup expected;
        bool computable = true;
        if (d >= 2 && d % 2 == 0) {
            const std::size_t a = d + 1 < z2.size() ? z2[d + 1] : 0;
            if (z2[d] < a) {
                computable = false;
            } else {
                expected.free_rank = z2[d] - a;
                expected.torsion.assign(a, BigInt(2));
            }
        }
        const HomologyGroup& got = report.integral_reduced[d];
        const bool match = computable && got.free_rank == expected.free_rank && got.torsion == expected.torsion;
        if (!match) {
            report.pattern_holds = false;
            report.mismatches.push_back("H_" + std::to_string(d) + ": expected " + (computable ? expected.to_string() : std::string("(negative free rank)")) + ", computed " + got.to_string());
        }
    }
    return report;
}

std::string format_chain_complex(const CubicalComplex& c)
{
    std::ostringstream out;
    out << "chaincomplex " << space_name(c.space) << " m=" << c.m << " ring=" << ring_name(c.data.ring) << '\n';
    for (std::size_t d = 0; d < c.cells.size(); ++d) {
        out << "dim " << d << " cells=" << c.cells[d].size() << '\n';
        for (std::size_t i = 0; i < c.cells[d].size(); ++i)
            out << "cell " << d << ' ' << i << ' ' << c.cells[d][i].to_string() << '\n';
    }
    for (std::size_t d = 1; d < c.data.boundaries.size(); ++d) {
        const SparseMatrix& b = c.data.boundaries[d];
        for (std::size_t col = 0; col < b.cols; ++col)
            for (auto [row, v] : b.columns[col])
                out << "bnd " << d << ' ' << row << ' ' << col << ' ' << v << '\n';
    }
    return out.str();
}

ParsedChainComplex parse_chain_complex(std::string_view text)
{
    ParsedChainComplex out;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) -> Error { return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg); };
    auto number = [&](const std::string& tok, auto& value) {
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw fail("expected a number, got '" + tok + "'");
    };
    auto keyed = [&](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0)
            throw fail("expected '" + key + "=...', got '" + tok + "'");
        return tok.substr(key.size() + 1);
    };

    bool header = false;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::uint32_t, std::int64_t>> entries; // (d, col) -> row -> coeff
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;)
            tok.push_back(w);
        if (tok.empty())
            continue;

        if (!header) {
            if (tok.size() != 4 || tok[0] != "chaincomplex")
                throw fail("expected header 'chaincomplex <space> m=<m> ring=<z2|z>'");
            out.space = tok[1];
            if (out.space != "torus" && out.space != "xq")
                throw fail("unknown space '" + out.space + "'");
            number(keyed(tok[2], "m"), out.m);
            const std::string ring = keyed(tok[3], "ring");
            if (ring == "z2")
                out.data.ring = Ring::Z2;
            else if (ring == "z")
                out.data.ring = Ring::Z;
            else
                throw fail("unknown ring '" + ring + "'");
            header = true;
            continue;
        }

        if (tok[0] == "dim") {
            if (tok.size() != 3)
                throw fail("expected 'dim <d> cells=<count>'");
            std::size_t d = 0, count = 0;
            number(tok[1], d);
            number(keyed(tok[2], "cells"), count);
            if (d != out.cell_labels.size())
                throw fail("dimensions must appear in order starting at 0");
            if (!entries.empty())
                throw fail("'dim' after boundary entries");
            out.cell_labels.emplace_back();
            out.cell_labels.back().reserve(count);
            out.data.cell_counts.push_back(count);
        } else if (tok[0] == "cell") {
            if (tok.size() != 4)
                throw fail("expected 'cell <d> <index> <symbols>'");
            std::size_t d = 0, idx = 0;
            number(tok[1], d);
            number(tok[2], idx);
            if (out.cell_labels.empty() || d != out.cell_labels.size() - 1)
                throw fail("cell outside its 'dim' block");
            if (idx != out.cell_labels[d].size() || idx >= out.data.cell_counts[d])
                throw fail("cell index " + std::to_string(idx) + " out of sequence");
            out.cell_labels[d].push_back(tok[3]);
        } else if (tok[0] == "bnd") {
            if (tok.size() != 5)
                throw fail("expected 'bnd <d> <row> <col> <coeff>'");
            std::size_t d = 0, row = 0, col = 0;
            std::int64_t coeff = 0;
            number(tok[1], d);
            number(tok[2], row);
            number(tok[3], col);
            number(tok[4], coeff);
            if (d == 0 || d >= out.data.cell_counts.size())
                throw fail("boundary dimension " + std::to_string(d) + " out of range");
            if (row >= out.data.cell_counts[d - 1] || col >= out.data.cell_counts[d])
                throw fail("boundary entry out of range");
            auto& column = entries[{d, col}];
            if (column.count(static_cast<std::uint32_t>(row)))
                throw fail("duplicate boundary entry");
            column[static_cast<std::uint32_t>(row)] = out.data.ring == Ring::Z2 ? coeff % 2 : coeff;
        } else {
            throw fail("unknown record '" + tok[0] + "'");
        }
    }
    if (!header)
        throw Error(ErrorCode::ParseError, "line 1: missing 'chaincomplex' header");
    for (std::size_t d = 0; d < out.cell_labels.size(); ++d)
        if (out.cell_labels[d].size() != out.data.cell_counts[d])
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": dimension " + std::to_string(d) + " lists fewer cells than declared");

    for (std::size_t d = 0; d < out.data.cell_counts.size(); ++d)
        out.data.boundaries.emplace_back(d == 0 ? 0 : out.data.cell_counts[d - 1], out.data.cell_counts[d]);
    for (const auto& [key, column] : entries)
        for (auto [row, v] : column)
            if (v != 0)
                out.data.boundaries[key.first].columns[key.second].emplace_back(row, out.data.ring == Ring::Z2 ? 1 : v);
    return out;
}

} // namespace tropmod
