#include "topocode/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace topocode {

namespace {

void check_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVec::from_string: expected only '0'/'1'");
        }
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    check_same_length(len_, other.len_, "BitVec xor");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec& other) const {
    check_same_length(len_, other.len_, "BitVec dot");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::size_t BitVec::union_popcount(const BitVec& other) const {
    check_same_length(len_, other.len_, "BitVec union");
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        n += static_cast<std::size_t>(std::popcount(words_[w] | other.words_[w]));
    }
    return n;
}

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const BitVec& r : rows) {
        check_same_length(r.size(), m.cols_, "BitMatrix::from_rows");
    }
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVec> out;
    out.reserve(rows.size());
    for (const std::string& r : rows) {
        out.push_back(BitVec::from_string(r));
    }
    return from_rows(std::move(out));
}

BitVec BitMatrix::multiply(const BitVec& v) const {
    check_same_length(cols_, v.size(), "BitMatrix multiply");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix row_reduce(const BitMatrix& m) {
    BitMatrix r = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < r.rows() && !r.get(found, col)) {
            ++found;
        }
        if (found == r.rows()) {
            continue;
        }
        if (found != pivot_row) {
            std::swap(r.row(found), r.row(pivot_row));
        }
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other != pivot_row && r.get(other, col)) {
                r.row(other) ^= r.row(pivot_row);
            }
        }
        ++pivot_row;
    }
    return r;
}

std::size_t rank(const BitMatrix& m) {
    return RowSpace(m).rank();
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    const BitMatrix r = row_reduce(m);
    std::vector<std::size_t> pivot_of_col(m.cols(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (r.get(row, col)) {
            pivot_of_col[col] = row;
            pivot_cols.push_back(col);
            ++row;
        }
    }
    std::vector<BitVec> basis;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (pivot_of_col[col] != static_cast<std::size_t>(-1)) {
            continue;
        }
        BitVec v(m.cols());
        v.set(col);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (r.get(i, col)) {
                v.set(pivot_cols[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const BitMatrix& m, const BitVec& v) {
    check_same_length(m.cols(), v.size(), "in_row_space");
    return RowSpace(m).contains(v);
}

RowSpace::RowSpace(const BitMatrix& m) : cols_(m.cols()) {
    const BitMatrix r = row_reduce(m);
    std::size_t col = 0;
    for (std::size_t row = 0; row < r.rows(); ++row) {
        while (col < r.cols() && !r.get(row, col)) {
            ++col;
        }
        if (col == r.cols()) {
            break;
        }
        rows_.push_back(r.row(row));
        pivots_.push_back(col);
    }
}

BitVec RowSpace::reduce(const BitVec& v) const {
    BitVec residue = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (residue.get(pivots_[i])) {
            residue ^= rows_[i];
        }
    }
    return residue;
}

bool RowSpace::contains(const BitVec& v) const {
    check_same_length(cols_, v.size(), "RowSpace::contains");
    return reduce(v).none();
}

}  // namespace topocode
