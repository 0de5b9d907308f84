#pragma once

#include "tropmod/chain_complex.hpp"
#include "tropmod/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tropmod {

/// Dense GF(2) matrix, one bit per entry, rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    /// Entries reduced mod 2.
    static Gf2Matrix from_sparse(const SparseMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by row elimination with word-parallel XOR. Pivots: first nonzero
/// column, lowest available row.
std::size_t gf2_rank(Gf2Matrix m);

/// Rank over GF(2) of a sparse matrix by column reduction; no dense storage.
std::size_t gf2_rank_sparse(const SparseMatrix& m);

/// Picks the dense route when the bit matrix fits a fixed memory budget.
std::size_t gf2_rank_auto(const SparseMatrix& m);

/// Dense arbitrary-precision integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

    static IntMatrix from_sparse(const SparseMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SnfResult {
    /// Nonzero invariant factors d1 | d2 | ..., all positive.
    std::vector<BigInt> factors;
    std::size_t rank = 0;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Eliminates unit pivots sparsely (Markowitz order, checked 64-bit arithmetic with an
/// arbitrary-precision rerun on overflow) and finishes the remainder densely.
SnfResult smith_normal_form(const SparseMatrix& m);

} // namespace tropmod
