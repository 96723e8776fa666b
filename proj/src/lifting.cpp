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

#include "futs/lifting.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <map>

namespace futs {

namespace {

using BlockSums = std::vector<std::pair<std::uint32_t, Value>>;

// Canonical (block id -> nonzero sum) vector of one continuation under E.
BlockSums block_sums(const Partition &E, const Continuation &phi) {
    std::map<std::uint32_t, Value> sums;
    for (const auto &[key, value] : phi.entries()) {
        std::uint32_t block = E.block_of(key.index); // KeyOutsideCarrier if foreign
        auto [it, inserted] = sums.emplace(block, value);
        if (!inserted)
            it->second = add(it->second, value);
    }
    BlockSums result;
    result.reserve(sums.size());
    for (auto &[block, value] : sums)
        if (!value.is_zero())
            result.emplace_back(block, value);
    return result;
}

struct BlockSumsHash {
    std::size_t operator()(const BlockSums &sums) const {
        std::size_t seed = sums.size();
        for (const auto &[block, value] : sums) {
            boost::hash_combine(seed, block);
            boost::hash_combine(seed, hash_value(value));
        }
        return seed;
    }
};

Partition group_by_sums(const Partition &E, std::span<const std::uint32_t> carrier,
                        const std::function<const Continuation &(std::size_t)> &member) {
    // Group members with identical sum vectors; groups form in first-seen
    // order, but block ids (smallest member) make the result order-free.
    std::unordered_map<BlockSums, std::size_t, BlockSumsHash> group_index;
    std::vector<std::vector<std::uint32_t>> groups;
    for (std::size_t pos = 0; pos < carrier.size(); ++pos) {
        BlockSums sums = block_sums(E, member(pos));
        auto [it, inserted] = group_index.emplace(std::move(sums), groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(carrier[pos]);
    }
    return Partition::from_blocks(std::vector<std::uint32_t>(carrier.begin(), carrier.end()),
                                  std::move(groups));
}

} // namespace

Partition lift_once(const Partition &E, std::span<const Continuation> universe) {
    std::vector<std::uint32_t> carrier(universe.size());
    for (std::uint32_t i = 0; i < universe.size(); ++i)
        carrier[i] = i;
    return group_by_sums(E, carrier,
                         [&](std::size_t pos) -> const Continuation & { return universe[pos]; });
}

Partition lift_once(const Partition &E, const ContinuationRegistry &registry,
                    std::uint32_t level, std::span<const std::uint32_t> ids) {
    return group_by_sums(E, ids, [&](std::size_t pos) -> const Continuation & {
        return registry.at(level, ids[pos]);
    });
}

LiftChain lift_chain(const Partition &E, const Futs &futs, std::uint32_t component) {
    if (component >= futs.component_count())
        raise(errc::index_out_of_range, "component index " + std::to_string(component));
    LiftChain chain;
    chain.levels.push_back(E);
    const std::uint32_t depth = futs.type().components[component].depth();
    for (std::uint32_t level = 1; level < depth; ++level) {
        const std::vector<std::uint32_t> &universe =
            futs.continuation_universe(component, level);
        chain.levels.push_back(
            lift_once(chain.levels.back(), futs.registry(), level, universe));
    }
    return chain;
}

} // namespace futs
