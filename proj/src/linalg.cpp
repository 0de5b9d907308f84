#include "tropmod/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropmod {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0)
{
}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_sparse(const SparseMatrix& s)
{
    Gf2Matrix m(s.rows, s.cols);
    for (std::size_t c = 0; c < s.cols; ++c)
        for (auto [r, v] : s.columns[c])
            if (v % 2 != 0)
                m.set(r, c, true);
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (value)
        row(r)[c / 64] |= mask;
    else
        row(r)[c / 64] &= ~mask;
}

std::size_t gf2_rank(Gf2Matrix m)
{
    std::size_t rank = 0;
    const std::size_t words = m.words_per_row();
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(m.row(pivot)[w] & mask))
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank)
            std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());
        const auto prow = m.row(rank);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            auto target = m.row(r);
            if (target[w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    target[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

std::size_t gf2_rank_sparse(const SparseMatrix& m)
{
    // Column reduction keyed on the lowest row index; each pivot row owns one column.
    std::vector<std::vector<std::uint32_t>> reduced(m.cols);
    std::vector<std::int64_t> owner(m.rows, -1);
    std::size_t rank = 0;
    std::vector<std::uint32_t> scratch;
    for (std::size_t c = 0; c < m.cols; ++c) {
        auto& col = reduced[c];
        for (auto [r, v] : m.columns[c])
            if (v % 2 != 0)
                col.push_back(r);
        while (!col.empty() && owner[col.back()] >= 0) {
            const auto& other = reduced[static_cast<std::size_t>(owner[col.back()])];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            owner[col.back()] = static_cast<std::int64_t>(c);
            ++rank;
        }
    }
    return rank;
}

std::size_t gf2_rank_auto(const SparseMatrix& m)
{
    constexpr std::size_t dense_budget_bits = std::size_t{1} << 30;
    if (m.rows == 0 || m.cols == 0)
        return 0;
    if (m.rows * ((m.cols + 63) / 64) * 64 <= dense_budget_bits)
        return gf2_rank(Gf2Matrix::from_sparse(m));
    return gf2_rank_sparse(m);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols)
{
    if (values.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: wrong number of entries");
    std::size_t i = 0;
    for (long v : values)
        data_[i++] = v;
}

IntMatrix IntMatrix::from_sparse(const SparseMatrix& s)
{
    IntMatrix m(s.rows, s.cols);
    for (std::size_t c = 0; c < s.cols; ++c)
        for (auto [r, v] : s.columns[c])
            m(r, c) = static_cast<long>(v);
    return m;
}

SnfResult smith_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    SnfResult result;

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        if (i != k)
            for (std::size_t j = 0; j < cols; ++j)
                swap(a(i, j), a(k, j));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        if (j != k)
            for (std::size_t i = 0; i < rows; ++i)
                swap(a(i, j), a(i, k));
    };

    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (sgn(a(i, j)) != 0 && (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0))
                    pi = i, pj = j;
        if (pi == rows)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        BigInt q;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (sgn(q) != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a(i, j) -= q * a(t, j);
                clean = clean && sgn(a(i, t)) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (sgn(q) != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a(i, j) -= q * a(i, t);
                clean = clean && sgn(a(t, j)) == 0;
            }
            if (!clean) {
                // A nonzero remainder is smaller than the pivot; move it into place.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(a(i, t)) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)
                        bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a(t, j)) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)
                        bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k)
                            a(t, k) += a(i, k);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible)
                break;
        }
        result.factors.push_back(abs(a(t, t)));
    }
    result.rank = result.factors.size();
    return result;
}

namespace {

struct Overflow {};

struct Checked64 {
    using Value = std::int64_t;
    static Value from(std::int64_t v) { return v; }
    static bool is_unit(Value v) { return v == 1 || v == -1; }
    static bool is_zero(Value v) { return v == 0; }
    static Value mul(Value a, Value b)
    {
        Value out;
        if (__builtin_mul_overflow(a, b, &out))
            throw Overflow{};
        return out;
    }
    /// a - f * b
    static Value fms(Value a, Value f, Value b)
    {
        Value out;
        if (__builtin_sub_overflow(a, mul(f, b), &out))
            throw Overflow{};
        return out;
    }
    static BigInt big(Value v) { return BigInt(static_cast<long>(v)); }
};

struct Arbitrary {
    using Value = BigInt;
    static Value from(std::int64_t v) { return BigInt(static_cast<long>(v)); }
    static bool is_unit(const Value& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }
    static bool is_zero(const Value& v) { return sgn(v) == 0; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value fms(const Value& a, const Value& f, const Value& b) { return a - f * b; }
    static BigInt big(const Value& v) { return v; }
};

template <class A>
SnfResult snf_sparse(const SparseMatrix& m)
{
    using T = typename A::Value;
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    // Work on the transpose: columns of m become rows here (SNF is transpose-invariant).
    const std::size_t nrows = m.cols, ncols = m.rows;
    std::vector<Row> rows(nrows);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    std::vector<std::size_t> col_count(ncols, 0);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (auto [c, v] : m.columns[r]) {
            if (v == 0)
                continue;
            rows[r].emplace_back(c, A::from(v));
            col_rows[c].push_back(static_cast<std::uint32_t>(r));
            ++col_count[c];
        }
    }
    std::vector<char> alive(nrows, 1);
    std::size_t unit_pivots = 0;
    Row merged;

    for (;;) {
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        std::size_t pr = nrows;
        std::uint32_t pc = 0;
        for (std::size_t r = 0; r < nrows && best_cost > 0; ++r) {
            if (!alive[r] || rows[r].empty())
                continue;
            const std::size_t row_extra = rows[r].size() - 1;
            for (const auto& [c, v] : rows[r]) {
                if (!A::is_unit(v))
                    continue;
                const std::size_t cost = row_extra * (col_count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == nrows)
            break;

        const Row& pivot_row = rows[pr];
        const T unit = std::lower_bound(pivot_row.begin(), pivot_row.end(), pc,
                                        [](const auto& e, std::uint32_t c) { return e.first < c; })->second;
        const std::vector<std::uint32_t> others = col_rows[pc];
        for (std::uint32_t r2 : others) {
            if (r2 == pr || !alive[r2])
                continue;
            Row& target = rows[r2];
            auto hit = std::lower_bound(target.begin(), target.end(), pc,
                                        [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (hit == target.end() || hit->first != pc)
                continue;
            const T factor = A::mul(hit->second, unit); // unit is its own inverse

            merged.clear();
            auto a = target.begin();
            auto b = pivot_row.begin();
            while (a != target.end() || b != pivot_row.end()) {
                if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == target.end() || b->first < a->first) {
                    merged.emplace_back(b->first, A::fms(A::from(0), factor, b->second));
                    ++col_count[b->first];
                    col_rows[b->first].push_back(r2);
                    ++b;
                } else {
                    T v = A::fms(a->second, factor, b->second);
                    if (A::is_zero(v))
                        --col_count[a->first];
                    else
                        merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            target.swap(merged);
        }
        for (const auto& [c, v] : rows[pr])
            --col_count[c];
        rows[pr].clear();
        alive[pr] = 0;
        col_rows[pc].clear();
        ++unit_pivots;
    }

    // Whatever is left has no unit entries; finish it densely.
    std::vector<std::size_t> live_rows;
    std::vector<std::int64_t> col_index(ncols, -1);
    std::size_t live_cols = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!alive[r] || rows[r].empty())
            continue;
        live_rows.push_back(r);
        for (const auto& [c, v] : rows[r])
            if (col_index[c] < 0)
                col_index[c] = static_cast<std::int64_t>(live_cols++);
    }
    IntMatrix rest(live_rows.size(), live_cols);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows[live_rows[i]])
            rest(i, static_cast<std::size_t>(col_index[c])) = A::big(v);

    SnfResult tail = smith_normal_form(rest);
    SnfResult out;
    out.factors.assign(unit_pivots, BigInt(1));
    out.factors.insert(out.factors.end(), tail.factors.begin(), tail.factors.end());
    out.rank = out.factors.size();
    return out;
}

} // namespace

SnfResult smith_normal_form(const SparseMatrix& m)
{
    try {
        return snf_sparse<Checked64>(m);
    } catch (const Overflow&) {
        return snf_sparse<Arbitrary>(m);
    }
}

} // namespace tropmod
