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

#include "futs/bisim.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace futs {

namespace {

std::vector<std::uint32_t> state_carrier(const Futs &futs) {
    std::vector<std::uint32_t> carrier(futs.state_count());
    std::iota(carrier.begin(), carrier.end(), 0);
    return carrier;
}

void require_state_carrier(const Futs &futs, const Partition &E) {
    if (E.carrier() != state_carrier(futs))
        raise(errc::carrier_mismatch, "partition carrier is not the state set");
}

std::vector<LiftChain> all_chains(const Futs &futs, const Partition &E) {
    std::vector<LiftChain> chains;
    chains.reserve(futs.component_count());
    for (std::uint32_t i = 0; i < futs.component_count(); ++i)
        chains.push_back(lift_chain(E, futs, i));
    return chains;
}

std::vector<std::pair<std::uint32_t, Value>>
theta_block_sums(const Futs &futs, std::uint32_t component, std::uint32_t state,
                 std::uint32_t label, const Partition &top) {
    std::map<std::uint32_t, Value> sums;
    for (const auto &[key, value] : futs.theta(component, state, label).entries()) {
        auto [it, inserted] = sums.emplace(top.block_of(key.index), value);
        if (!inserted)
            it->second = add(it->second, value);
    }
    std::vector<std::pair<std::uint32_t, Value>> row;
    row.reserve(sums.size());
    for (auto &entry : sums)
        if (!entry.second.is_zero())
            row.push_back(entry);
    return row;
}

} // namespace

StateSignature state_signature(const Futs &futs, std::uint32_t state,
                               const std::vector<LiftChain> &chains) {
    StateSignature signature;
    signature.rows.resize(futs.component_count());
    for (std::uint32_t i = 0; i < futs.component_count(); ++i) {
        const Partition &top = chains[i].top();
        signature.rows[i].reserve(futs.label_count(i));
        for (std::uint32_t label = 0; label < futs.label_count(i); ++label)
            signature.rows[i].push_back(theta_block_sums(futs, i, state, label, top));
    }
    return signature;
}

std::optional<BisimViolation> find_bisim_violation(const Futs &futs, const Partition &E) {
    require_state_carrier(futs, E);
    std::vector<LiftChain> chains = all_chains(futs, E);
    for (const auto &[block_id, members] : E.blocks()) {
        if (members.size() < 2)
            continue;
        StateSignature reference = state_signature(futs, members.front(), chains);
        for (std::size_t i = 1; i < members.size(); ++i) {
            StateSignature candidate = state_signature(futs, members[i], chains);
            if (candidate == reference)
                continue;
            // Locate one differing entry for the diagnostic.
            for (std::uint32_t c = 0; c < reference.rows.size(); ++c) {
                for (std::uint32_t l = 0; l < reference.rows[c].size(); ++l) {
                    const auto &lhs = reference.rows[c][l];
                    const auto &rhs = candidate.rows[c][l];
                    if (lhs == rhs)
                        continue;
                    // First block id where the sums differ.
                    std::map<std::uint32_t, std::pair<Value, Value>> merged;
                    SemiringId top = futs.type().components[c].semirings.back();
                    for (const auto &[block, value] : lhs)
                        merged.emplace(block, std::make_pair(value, Value::zero(top)));
                    for (const auto &[block, value] : rhs) {
                        auto [it, inserted] = merged.emplace(
                            block, std::make_pair(Value::zero(top), value));
                        if (!inserted)
                            it->second.second = value;
                    }
                    for (const auto &[block, values] : merged) {
                        if (values.first == values.second)
                            continue;
                        return BisimViolation{members.front(), members[i], c, l,
                                              block, values.first, values.second};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bisimulation(const Futs &futs, const Partition &E) {
    return !find_bisim_violation(futs, E).has_value();
}

Partition coarsest_bisimulation(const Futs &futs, const std::optional<Partition> &initial,
                                RefinementStats *stats) {
    Partition partition =
        initial ? *initial : Partition::single_block(state_carrier(futs));
    require_state_carrier(futs, partition);
    if (stats)
        *stats = RefinementStats{};

    while (true) {
        std::vector<LiftChain> chains = all_chains(futs, partition);
        std::vector<std::vector<std::uint32_t>> next_blocks;
        bool split = false;
        for (const auto &[block_id, members] : partition.blocks()) {
            // Group the block's members by signature; members stay in
            // ascending order, so block ids do not depend on group order.
            std::vector<StateSignature> signatures;
            std::vector<std::vector<std::uint32_t>> groups;
            for (std::uint32_t state : members) {
                StateSignature signature = state_signature(futs, state, chains);
                std::size_t g = 0;
                while (g < signatures.size() && !(signatures[g] == signature))
                    ++g;
                if (g == signatures.size()) {
                    signatures.push_back(std::move(signature));
                    groups.emplace_back();
                }
                groups[g].push_back(state);
            }
            if (groups.size() > 1)
                split = true;
            for (auto &group : groups)
                next_blocks.push_back(std::move(group));
        }
        if (stats) {
            ++stats->passes;
            stats->block_counts.push_back(next_blocks.size());
        }
        if (!split)
            return partition;
        partition = Partition::from_blocks(partition.carrier(), std::move(next_blocks));
    }
}

bool bisimilar(const Futs &futs, std::uint32_t s, std::uint32_t t) {
    if (s >= futs.state_count() || t >= futs.state_count())
        raise(errc::unknown_state, "state index out of range");
    if (s == t)
        return true;
    return coarsest_bisimulation(futs).same_block(s, t);
}

bool bisimilar(const Futs &futs, std::string_view s, std::string_view t) {
    std::optional<std::uint32_t> si = futs.state_index(s);
    if (!si)
        raise(errc::unknown_state, "state '" + std::string(s) + "' not declared");
    std::optional<std::uint32_t> ti = futs.state_index(t);
    if (!ti)
        raise(errc::unknown_state, "state '" + std::string(t) + "' not declared");
    return bisimilar(futs, *si, *ti);
}

Partition brute_force_coarsest(const Futs &futs, std::uint32_t max_states) {
    const std::uint32_t n = futs.state_count();
    if (n > max_states)
        raise(errc::too_many_states, std::to_string(n) + " states exceed the cap of " +
                                         std::to_string(max_states));
    std::vector<std::uint32_t> carrier = state_carrier(futs);

    std::vector<Partition> passing;
    for (const std::vector<std::uint32_t> &assignment : all_set_partitions(n)) {
        Partition candidate = partition_from_assignment(carrier, assignment);
        if (is_bisimulation(futs, candidate))
            passing.push_back(std::move(candidate));
    }
    // The identity partition always passes, so `passing` is nonempty.
    const Partition *best = &passing.front();
    for (const Partition &candidate : passing)
        if (candidate.block_count() < best->block_count())
            best = &candidate;
    for (const Partition &candidate : passing)
        if (!refines(candidate, *best))
            raise(errc::not_a_bisimulation,
                  "no unique coarsest bisimulation; lattice property violated");
    return *best;
}

} // namespace futs
