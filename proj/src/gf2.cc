// Copyright 2026 The gjit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gjit/gf2.h"

#include <bit>
#include <stdexcept>

namespace gjit {

int BitRow::next_set(int from) const {
    if (from >= bits_)
        return -1;
    size_t w = from >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (word)
            return static_cast<int>(w * 64 + std::countr_zero(word));
        if (++w >= words_.size())
            return -1;
        word = words_[w];
    }
}

bool BitRow::any() const {
    for (uint64_t w : words_)
        if (w)
            return true;
    return false;
}

namespace {

// Gauss-Jordan elimination on augmented rows; column num_vars holds the rhs.
struct Elimination {
    std::vector<BitRow> rows;
    std::vector<int> pivot_col;  // per reduced row
    bool consistent = true;
};

Elimination eliminate(int num_vars, const std::vector<std::vector<int>> &sparse, const std::vector<uint8_t> *rhs) {
    Elimination el;
    el.rows.reserve(sparse.size());
    for (size_t r = 0; r < sparse.size(); r++) {
        BitRow row(num_vars + 1);
        for (int c : sparse[r]) {
            if (c < 0 || c >= num_vars)
                throw std::out_of_range("gf2 column index out of range");
            row.flip(c);
        }
        if (rhs && (*rhs)[r])
            row.set(num_vars);
        el.rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < num_vars && rank < static_cast<int>(el.rows.size()); col++) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(el.rows.size()); r++)
            if (el.rows[r].get(col)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(el.rows[rank], el.rows[pivot]);
        for (int r = 0; r < static_cast<int>(el.rows.size()); r++)
            if (r != rank && el.rows[r].get(col))
                el.rows[r] ^= el.rows[rank];
        el.pivot_col.push_back(col);
        rank++;
    }
    for (size_t r = rank; r < el.rows.size(); r++)
        if (el.rows[r].get(num_vars))
            el.consistent = false;
    el.rows.resize(rank);
    return el;
}

}  // namespace

std::optional<std::vector<uint8_t>> solve_gf2(int num_vars, const std::vector<std::vector<int>> &rows,
                                              const std::vector<uint8_t> &rhs) {
    if (rhs.size() != rows.size())
        throw std::invalid_argument("gf2 rhs size mismatch");
    Elimination el = eliminate(num_vars, rows, &rhs);
    if (!el.consistent)
        return std::nullopt;
    std::vector<uint8_t> x(num_vars, 0);
    for (size_t r = 0; r < el.rows.size(); r++)
        x[el.pivot_col[r]] = el.rows[r].get(num_vars);
    return x;
}

int rank_gf2(int num_vars, const std::vector<std::vector<int>> &rows) {
    return static_cast<int>(eliminate(num_vars, rows, nullptr).rows.size());
}

}  // namespace gjit
