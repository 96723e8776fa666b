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

struct QuotientResult {
    Futs quotient;
    /// The canonical map: state index -> quotient state index. Quotient
    /// states are the blocks ordered by block id and named after their
    /// smallest member.
    std::vector<std::uint32_t> state_to_class;
};

/// Builds the FuTS on E's blocks whose transitions are the pushforwards of
/// the members' transitions along the canonical map. Well-definedness is
/// verified constructively: every member of a block must induce the same
/// pushed-forward continuation, otherwise E fails the transfer condition and
/// NotABisimulation is raised with a witness.
QuotientResult quotient_futs(const Futs &futs, const Partition &E);

/// Whether f commutes with the transition structures: pushing every source
/// transition forward along f yields exactly the target's transition at the
/// image state. Both systems must share a type.
bool check_homomorphism(std::span<const std::uint32_t> f, const Futs &source,
                        const Futs &target);

} // namespace futs
