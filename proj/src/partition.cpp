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

#include "futs/partition.hpp"

#include <algorithm>
#include <numeric>

namespace futs {

namespace {

std::vector<std::uint32_t> normalized_carrier(std::vector<std::uint32_t> carrier) {
    std::sort(carrier.begin(), carrier.end());
    if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end())
        raise(errc::bad_params, "carrier contains duplicate elements");
    return carrier;
}

} // namespace

Partition Partition::identity(std::vector<std::uint32_t> carrier) {
    carrier = normalized_carrier(std::move(carrier));
    std::vector<std::vector<std::uint32_t>> blocks;
    blocks.reserve(carrier.size());
    for (std::uint32_t element : carrier)
        blocks.push_back({element});
    return from_blocks(std::move(carrier), std::move(blocks));
}

Partition Partition::single_block(std::vector<std::uint32_t> carrier) {
    carrier = normalized_carrier(std::move(carrier));
    if (carrier.empty())
        return from_blocks({}, {});
    std::vector<std::vector<std::uint32_t>> blocks{carrier};
    return from_blocks(std::move(carrier), std::move(blocks));
}

Partition Partition::from_blocks(std::vector<std::uint32_t> carrier,
                                 std::vector<std::vector<std::uint32_t>> blocks) {
    Partition p;
    p.carrier_ = normalized_carrier(std::move(carrier));

    std::size_t covered = 0;
    for (std::vector<std::uint32_t> &members : blocks) {
        if (members.empty())
            raise(errc::bad_params, "empty block");
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            raise(errc::overlapping_blocks, "element repeated within a block");
        for (std::uint32_t element : members) {
            if (!std::binary_search(p.carrier_.begin(), p.carrier_.end(), element))
                raise(errc::key_outside_carrier,
                      "block member " + std::to_string(element) + " not in carrier");
            if (!p.block_of_.emplace(element, members.front()).second)
                raise(errc::overlapping_blocks,
                      "element " + std::to_string(element) + " appears in two blocks");
        }
        covered += members.size();
        p.blocks_.emplace_back(members.front(), std::move(members));
    }
    if (covered != p.carrier_.size())
        raise(errc::bad_params, "blocks do not cover the carrier");

    std::sort(p.blocks_.begin(), p.blocks_.end(),
              [](const Block &a, const Block &b) { return a.first < b.first; });
    for (std::size_t i = 0; i < p.blocks_.size(); ++i)
        p.block_pos_.emplace(p.blocks_[i].first, i);
    return p;
}

bool Partition::contains(std::uint32_t element) const {
    return block_of_.contains(element);
}

std::uint32_t Partition::block_of(std::uint32_t element) const {
    auto it = block_of_.find(element);
    if (it == block_of_.end())
        raise(errc::key_outside_carrier,
              "element " + std::to_string(element) + " not in carrier");
    return it->second;
}

bool Partition::same_block(std::uint32_t a, std::uint32_t b) const {
    return block_of(a) == block_of(b);
}

const std::vector<std::uint32_t> &Partition::members(std::uint32_t block_id) const {
    auto it = block_pos_.find(block_id);
    if (it == block_pos_.end())
        raise(errc::index_out_of_range, "no block with id " + std::to_string(block_id));
    return blocks_[it->second].second;
}

bool refines(const Partition &fine, const Partition &coarse) {
    if (fine.carrier() != coarse.carrier())
        raise(errc::carrier_mismatch, "partitions over different carriers");
    for (const auto &[id, members] : fine.blocks()) {
        std::uint32_t target = coarse.block_of(members.front());
        for (std::uint32_t element : members)
            if (coarse.block_of(element) != target)
                return false;
    }
    return true;
}

Partition join(const Partition &a, const Partition &b) {
    if (a.carrier() != b.carrier())
        raise(errc::carrier_mismatch, "partitions over different carriers");
    const std::vector<std::uint32_t> &carrier = a.carrier();

    // Union-find over carrier positions.
    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        pos.emplace(carrier[i], i);
    std::vector<std::size_t> parent(carrier.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y)
            parent[std::max(x, y)] = std::min(x, y);
    };
    for (const Partition *p : {&a, &b})
        for (const auto &[id, members] : p->blocks())
            for (std::uint32_t element : members)
                unite(pos.at(members.front()), pos.at(element));

    std::unordered_map<std::size_t, std::vector<std::uint32_t>> groups;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        groups[find(i)].push_back(carrier[i]);
    std::vector<std::vector<std::uint32_t>> blocks;
    blocks.reserve(groups.size());
    for (auto &[root, members] : groups)
        blocks.push_back(std::move(members));
    return Partition::from_blocks(carrier, std::move(blocks));
}

std::vector<std::vector<std::uint32_t>> all_set_partitions(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> result;
    if (n == 0) {
        result.push_back({});
        return result;
    }
    // rgs[i] may be incremented iff rgs[i] <= max(rgs[0..i-1]); positions to
    // the right reset to 0.
    std::vector<std::uint32_t> rgs(n, 0);
    while (true) {
        result.push_back(rgs);
        std::uint32_t i = n;
        while (--i > 0) {
            std::uint32_t max_prefix = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= max_prefix)
                break;
        }
        if (i == 0)
            return result;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

Partition partition_from_assignment(const std::vector<std::uint32_t> &carrier,
                                    const std::vector<std::uint32_t> &block_numbers) {
    if (carrier.size() != block_numbers.size())
        raise(errc::bad_params, "assignment length does not match carrier");
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        groups[block_numbers[i]].push_back(carrier[i]);
    std::vector<std::vector<std::uint32_t>> blocks;
    blocks.reserve(groups.size());
    for (auto &[number, members] : groups)
        blocks.push_back(std::move(members));
    return Partition::from_blocks(carrier, std::move(blocks));
}

} // namespace futs
