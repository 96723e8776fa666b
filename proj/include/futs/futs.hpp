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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "futs/continuation.hpp"

namespace futs {

/// One component of a FuTS type: a finite label set together with the
/// semiring sequence of the component's continuations, innermost first. The
/// component's transition values are continuations of level m = semirings.size()
/// whose top value semiring is semirings.back().
struct FutsComponent {
    std::vector<std::string> labels;
    std::vector<SemiringId> semirings;

    std::uint32_t depth() const { return static_cast<std::uint32_t>(semirings.size()); }
    bool operator==(const FutsComponent &) const = default;
};

/// Type descriptor of a FuTS: n >= 1 components, each with a nonempty label
/// set and at least one semiring.
struct FutsType {
    std::vector<FutsComponent> components;

    void validate() const;
    bool operator==(const FutsType &) const = default;
};

struct ThetaAssignment {
    std::uint32_t component;
    std::string state;
    std::string label;
    Continuation value;
};

/// A finite state-to-function transition system: an ordered state set plus a
/// total transition assignment theta. Missing (state, label) pairs denote the
/// zero continuation. Immutable after build.
class Futs {
public:
    const FutsType &type() const { return type_; }
    const std::vector<std::string> &states() const { return states_; }
    std::uint32_t state_count() const { return static_cast<std::uint32_t>(states_.size()); }
    std::optional<std::uint32_t> state_index(std::string_view name) const;
    const std::string &state_name(std::uint32_t index) const;

    std::uint32_t component_count() const {
        return static_cast<std::uint32_t>(type_.components.size());
    }
    std::uint32_t label_count(std::uint32_t component) const;
    std::optional<std::uint32_t> label_index(std::uint32_t component,
                                             std::string_view label) const;

    /// The stored continuation, or the component's zero continuation when the
    /// pair is unassigned.
    const Continuation &theta(std::uint32_t component, std::uint32_t state,
                              std::uint32_t label) const;
    /// Registry id of the stored top-level continuation; nullopt for zero.
    std::optional<std::uint32_t> theta_id(std::uint32_t component, std::uint32_t state,
                                          std::uint32_t label) const;

    /// All level-`level` continuation ids reachable as keys inside theta
    /// values of the component, in ascending (registration) order. Valid for
    /// 1 <= level < depth of the component.
    const std::vector<std::uint32_t> &continuation_universe(std::uint32_t component,
                                                            std::uint32_t level) const;

    const ContinuationRegistry &registry() const { return *registry_; }
    const std::shared_ptr<ContinuationRegistry> &registry_ptr() const { return registry_; }

private:
    friend Futs build_futs(FutsType, std::vector<std::string>,
                           std::vector<ThetaAssignment>,
                           std::shared_ptr<ContinuationRegistry>);

    void check_component(std::uint32_t component) const;

    FutsType type_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, std::uint32_t> state_index_;
    std::shared_ptr<ContinuationRegistry> registry_;
    // theta_[i][state * |L_i| + label] = registry id at level depth(i)
    std::vector<std::vector<std::optional<std::uint32_t>>> theta_;
    std::vector<std::vector<std::vector<std::uint32_t>>> universes_; // [i][level-1]
    std::vector<Continuation> zero_; // per component, at its top level
};

/// Validates and assembles a FuTS. Nested continuations inside assignment
/// values must already be interned in `registry` (a fresh registry is created
/// when none is given, which only works for depth-1 types).
Futs build_futs(FutsType type, std::vector<std::string> states,
                std::vector<ThetaAssignment> assignments,
                std::shared_ptr<ContinuationRegistry> registry = nullptr);

} // namespace futs
