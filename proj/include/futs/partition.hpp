/*
 * Copyright 2026 The futs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "futs/error.hpp"

namespace futs {

/// An equivalence relation on a finite carrier of element ids, stored as
/// disjoint nonempty blocks that cover the carrier. A block's id is its
/// smallest member, which keeps ids stable under refinement.
class Partition {
public:
    using Block = std::pair<std::uint32_t, std::vector<std::uint32_t>>; // (id, members)

    Partition() = default;

    static Partition identity(std::vector<std::uint32_t> carrier);
    static Partition single_block(std::vector<std::uint32_t> carrier);
    /// Validates that the given blocks are disjoint and cover the carrier.
    static Partition from_blocks(std::vector<std::uint32_t> carrier,
                                 std::vector<std::vector<std::uint32_t>> blocks);

    const std::vector<std::uint32_t> &carrier() const { return carrier_; }
    bool contains(std::uint32_t element) const;
    std::uint32_t block_of(std::uint32_t element) const;
    bool same_block(std::uint32_t a, std::uint32_t b) const;
    std::size_t block_count() const { return blocks_.size(); }

    /// Blocks ordered by block id, members ascending.
    const std::vector<Block> &blocks() const { return blocks_; }
    const std::vector<std::uint32_t> &members(std::uint32_t block_id) const;

    bool operator==(const Partition &other) const {
        return carrier_ == other.carrier_ && blocks_ == other.blocks_;
    }

private:
    std::vector<std::uint32_t> carrier_;                       // ascending, unique
    std::vector<Block> blocks_;                                // ordered by id
    std::unordered_map<std::uint32_t, std::uint32_t> block_of_;
    std::unordered_map<std::uint32_t, std::size_t> block_pos_; // id -> index in blocks_
};

/// Every block of `fine` is contained in a block of `coarse`.
bool refines(const Partition &fine, const Partition &coarse);

/// Finest partition coarser than both (transitive closure of the union).
Partition join(const Partition &a, const Partition &b);

/// All set partitions of {0,...,n-1} as restricted growth strings:
/// result[k][i] is the block number of element i, with block numbers first
/// appearing in increasing order. Bell(n) entries; callers cap n.
std::vector<std::vector<std::uint32_t>> all_set_partitions(std::uint32_t n);

/// Builds a Partition over `carrier` from a block-number assignment given in
/// carrier order.
Partition partition_from_assignment(const std::vector<std::uint32_t> &carrier,
                                    const std::vector<std::uint32_t> &block_numbers);

} // namespace futs
