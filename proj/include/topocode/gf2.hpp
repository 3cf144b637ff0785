#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace topocode {

/// Dense bit vector over Z2. Addition is XOR; values are immutable in
/// practice once built (all library operations take const references).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }

    /// Z2 inner product (parity of the AND).
    bool dot(const BitVec& other) const;

    /// Popcount of the OR, i.e. size of the union of supports.
    std::size_t union_popcount(const BitVec& other) const;

    std::vector<std::size_t> support() const;

    bool operator==(const BitVec& other) const = default;

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over Z2, stored as a vector of row BitVecs.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVec> rows);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

    const BitVec& row(std::size_t r) const { return data_[r]; }
    BitVec& row(std::size_t r) { return data_[r]; }

    /// M * v over Z2.
    BitVec multiply(const BitVec& v) const;

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

std::size_t rank(const BitMatrix& m);

/// Basis of the right kernel {v : M v = 0}; size is cols - rank.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

/// True iff v is a Z2 combination of the rows of m. Throws on length mismatch.
bool in_row_space(const BitMatrix& m, const BitVec& v);

/// Reduced row echelon form with leftmost pivots; canonical for the row space.
BitMatrix row_reduce(const BitMatrix& m);

/// Row-reduced view of a subspace supporting fast repeated membership tests.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    bool contains(const BitVec& v) const;

    /// Residue of v after elimination by the stored pivot rows.
    BitVec reduce(const BitVec& v) const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;          // nonzero rows of the RREF
    std::vector<std::size_t> pivots_;   // pivot column of each row
};

}  // namespace topocode
