#pragma once

// Naive per-bit Z2 elimination, kept independent of the library's word-packed
// routines so the two can be checked against each other.

#include <cstddef>
#include <vector>

#include "topocode/gf2.hpp"

namespace testref {

using Table = std::vector<std::vector<int>>;

inline Table to_table(const topocode::BitMatrix& m) {
    Table t(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            t[r][c] = m.get(r, c) ? 1 : 0;
        }
    }
    return t;
}

inline std::size_t reference_rank(Table rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < cols && pivot < rows.size(); ++c) {
        std::size_t r = pivot;
        while (r < rows.size() && rows[r][c] == 0) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other != pivot && rows[other][c] == 1) {
                for (std::size_t k = 0; k < cols; ++k) {
                    rows[other][k] ^= rows[pivot][k];
                }
            }
        }
        ++pivot;
    }
    return pivot;
}

inline std::size_t reference_rank(const topocode::BitMatrix& m) {
    return reference_rank(to_table(m));
}

}  // namespace testref
