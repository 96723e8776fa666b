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

#include <numeric>
#include <vector>

#include "futs/continuation.hpp"
#include "futs/partition.hpp"
#include "futs/testkit.hpp"

namespace futs::test {

inline Value rat(long long num, long long den = 1) {
    return Value::rational(Rational(num, den));
}

inline Value tt() { return Value::boolean(true); }
inline Value ff() { return Value::boolean(false); }

inline std::vector<std::uint32_t> iota_carrier(std::uint32_t n) {
    std::vector<std::uint32_t> carrier(n);
    std::iota(carrier.begin(), carrier.end(), 0);
    return carrier;
}

inline Value random_value(TestRng &rng, SemiringId id) {
    if (id == SemiringId::boolean)
        return Value::boolean(rng.below(2) == 1);
    return Value::rational(Rational(rng.below(10), 1 + rng.below(9)));
}

/// Level-1 continuation over states 0..n_states-1 with ~half the states in
/// the support.
inline Continuation random_level1(TestRng &rng, std::uint32_t n_states, SemiringId id) {
    std::vector<Continuation::Entry> entries;
    for (std::uint32_t s = 0; s < n_states; ++s)
        if (rng.chance(0.5))
            entries.emplace_back(KeyRef::state(s), random_value(rng, id));
    return Continuation::make(id, 1, std::move(entries));
}

/// Random coarsening of `fine`: merges the blocks of `fine` along a random
/// block assignment.
inline Partition random_coarsening(TestRng &rng, const Partition &fine) {
    std::vector<std::vector<std::uint32_t>> merged(fine.block_count());
    std::size_t used = 0;
    std::vector<std::vector<std::uint32_t>> groups;
    for (const auto &[id, members] : fine.blocks()) {
        std::uint32_t g = rng.below(static_cast<std::uint32_t>(used + 1));
        if (g == used) {
            groups.emplace_back();
            ++used;
        }
        groups[g].insert(groups[g].end(), members.begin(), members.end());
    }
    groups.resize(used);
    return Partition::from_blocks(fine.carrier(), std::move(groups));
}

} // namespace futs::test
