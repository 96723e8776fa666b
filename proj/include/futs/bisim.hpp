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

#include <optional>
#include <string_view>

#include "futs/lifting.hpp"

namespace futs {

/// Canonical behaviour of one state under a partition: per component and
/// label, the block sums of its theta value over the blocks of the top
/// lifting level. Zero sums are omitted, entries ordered by block id. Two
/// states of one block satisfy the transfer condition iff their signatures
/// are equal.
struct StateSignature {
    // rows[component][label] -> (top-level block id, sum)
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Value>>>> rows;

    bool operator==(const StateSignature &) const = default;
};

StateSignature state_signature(const Futs &futs, std::uint32_t state,
                               const std::vector<LiftChain> &chains);

/// One failure of the transfer condition, for diagnostics.
struct BisimViolation {
    std::uint32_t x, y;            // states in one block that disagree
    std::uint32_t component;
    std::uint32_t label;
    std::uint32_t lifted_block;    // block id at the top lifting level
    Value lhs, rhs;
};

/// Transfer condition of FuTS bisimulation: within every block, all states
/// have equal block sums over every class of the lifted relation, for every
/// component and label.
bool is_bisimulation(const Futs &futs, const Partition &E);
std::optional<BisimViolation> find_bisim_violation(const Futs &futs, const Partition &E);

struct RefinementStats {
    std::uint32_t passes = 0;
    std::vector<std::size_t> block_counts; // after each pass
};

/// Coarsest bisimulation refining `initial` (one block when absent), by
/// signature refinement to a fixpoint. Each pass either splits some block or
/// terminates, so at most |X| passes run.
Partition coarsest_bisimulation(const Futs &futs,
                                const std::optional<Partition> &initial = std::nullopt,
                                RefinementStats *stats = nullptr);

bool bisimilar(const Futs &futs, std::uint32_t s, std::uint32_t t);
bool bisimilar(const Futs &futs, std::string_view s, std::string_view t);

inline constexpr std::uint32_t default_brute_force_cap = 6;

/// Independent oracle: enumerates every equivalence relation on the states,
/// keeps those passing is_bisimulation, returns the one with fewest blocks
/// after checking that every passing relation refines it.
Partition brute_force_coarsest(const Futs &futs,
                               std::uint32_t max_states = default_brute_force_cap);

} // namespace futs
