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

#include <span>

#include "futs/futs.hpp"
#include "futs/partition.hpp"

namespace futs {

/// Lifts an equivalence on keys to an equivalence on continuations: two
/// members of `universe` fall in the same block iff their block sums agree on
/// every block of E. The result's carrier is 0..universe.size()-1 in the
/// order given.
///
/// Because both semirings are zero-sum-free, a block sum over a nonempty
/// slice of the support is never zero, so grouping by the nonzero sums alone
/// decides equality on all blocks.
Partition lift_once(const Partition &E, std::span<const Continuation> universe);

/// Same lifting over the registered continuations with the given ids; the
/// result's carrier consists of those ids.
Partition lift_once(const Partition &E, const ContinuationRegistry &registry,
                    std::uint32_t level, std::span<const std::uint32_t> ids);

/// The nested lifting of a state equivalence along one component of a FuTS:
/// levels[0] is E itself, levels[k] the lifting of levels[k-1] to the
/// component's level-k continuation universe.
struct LiftChain {
    std::vector<Partition> levels;

    const Partition &top() const { return levels.back(); }
};

LiftChain lift_chain(const Partition &E, const Futs &futs, std::uint32_t component);

} // namespace futs
