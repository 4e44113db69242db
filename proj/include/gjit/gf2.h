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

#ifndef GJIT_GF2_H
#define GJIT_GF2_H

#include <cstdint>
#include <optional>
#include <vector>

namespace gjit {

/// Dense bit row with word-parallel xor.
class BitRow {
   public:
    BitRow() = default;
    explicit BitRow(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const {
        return bits_;
    }
    bool get(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void flip(int i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    BitRow &operator^=(const BitRow &o) {
        for (size_t w = 0; w < words_.size(); w++)
            words_[w] ^= o.words_[w];
        return *this;
    }
    /// Index of the lowest set bit at or after `from`, or -1.
    int next_set(int from) const;
    bool any() const;

   private:
    int bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Solves A x = b over GF(2) with A given as sparse rows of column indices.
/// Returns one solution (free variables zero) or nullopt when inconsistent.
std::optional<std::vector<uint8_t>> solve_gf2(int num_vars, const std::vector<std::vector<int>> &rows,
                                              const std::vector<uint8_t> &rhs);

/// Rank of the matrix with the given sparse rows.
int rank_gf2(int num_vars, const std::vector<std::vector<int>> &rows);

}  // namespace gjit

#endif
