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

#include "futs/futs.hpp"

#include <algorithm>
#include <set>

namespace futs {

void FutsType::validate() const {
    if (components.empty())
        raise(errc::bad_params, "a FuTS type needs at least one component");
    for (const FutsComponent &component : components) {
        if (component.labels.empty())
            raise(errc::bad_params, "component label set must be nonempty");
        if (component.semirings.empty())
            raise(errc::bad_params, "component needs at least one semiring");
        std::set<std::string> seen(component.labels.begin(), component.labels.end());
        if (seen.size() != component.labels.size())
            raise(errc::duplicate_key, "duplicate label within a component");
    }
}

std::optional<std::uint32_t> Futs::state_index(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end())
        return std::nullopt;
    return it->second;
}

const std::string &Futs::state_name(std::uint32_t index) const {
    if (index >= states_.size())
        raise(errc::index_out_of_range, "state index " + std::to_string(index));
    return states_[index];
}

void Futs::check_component(std::uint32_t component) const {
    if (component >= type_.components.size())
        raise(errc::index_out_of_range, "component index " + std::to_string(component));
}

std::uint32_t Futs::label_count(std::uint32_t component) const {
    check_component(component);
    return static_cast<std::uint32_t>(type_.components[component].labels.size());
}

std::optional<std::uint32_t> Futs::label_index(std::uint32_t component,
                                               std::string_view label) const {
    check_component(component);
    const auto &labels = type_.components[component].labels;
    for (std::uint32_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return i;
    return std::nullopt;
}

std::optional<std::uint32_t> Futs::theta_id(std::uint32_t component, std::uint32_t state,
                                            std::uint32_t label) const {
    check_component(component);
    if (state >= states_.size())
        raise(errc::index_out_of_range, "state index " + std::to_string(state));
    if (label >= type_.components[component].labels.size())
        raise(errc::index_out_of_range, "label index " + std::to_string(label));
    return theta_[component][state * label_count(component) + label];
}

const Continuation &Futs::theta(std::uint32_t component, std::uint32_t state,
                                std::uint32_t label) const {
    std::optional<std::uint32_t> id = theta_id(component, state, label);
    if (!id)
        return zero_[component];
    return registry_->at(type_.components[component].depth(), *id);
}

const std::vector<std::uint32_t> &Futs::continuation_universe(std::uint32_t component,
                                                              std::uint32_t level) const {
    check_component(component);
    if (level < 1 || level >= type_.components[component].depth())
        raise(errc::index_out_of_range,
              "no continuation universe at level " + std::to_string(level) +
                  " for a component of depth " +
                  std::to_string(type_.components[component].depth()));
    return universes_[component][level - 1];
}

Futs build_futs(FutsType type, std::vector<std::string> states,
                std::vector<ThetaAssignment> assignments,
                std::shared_ptr<ContinuationRegistry> registry) {
    type.validate();
    if (!registry)
        registry = std::make_shared<ContinuationRegistry>();

    Futs futs;
    futs.type_ = std::move(type);
    futs.states_ = std::move(states);
    futs.registry_ = std::move(registry);
    for (std::uint32_t i = 0; i < futs.states_.size(); ++i)
        if (!futs.state_index_.emplace(futs.states_[i], i).second)
            raise(errc::duplicate_key, "duplicate state '" + futs.states_[i] + "'");

    const std::uint32_t n = futs.component_count();
    futs.theta_.resize(n);
    futs.universes_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const FutsComponent &component = futs.type_.components[i];
        futs.theta_[i].assign(futs.states_.size() * component.labels.size(), std::nullopt);
        futs.universes_[i].resize(component.depth() - 1);
        futs.zero_.push_back(
            Continuation::zero(component.semirings.back(), component.depth()));
    }

    for (ThetaAssignment &assignment : assignments) {
        if (assignment.component >= n)
            raise(errc::index_out_of_range,
                  "component index " + std::to_string(assignment.component));
        const FutsComponent &component = futs.type_.components[assignment.component];
        std::optional<std::uint32_t> state = futs.state_index(assignment.state);
        if (!state)
            raise(errc::unknown_state, "state '" + assignment.state + "' not declared");
        std::optional<std::uint32_t> label =
            futs.label_index(assignment.component, assignment.label);
        if (!label)
            raise(errc::unknown_label, "label '" + assignment.label +
                                           "' not in component " +
                                           std::to_string(assignment.component + 1));
        if (assignment.value.level() != component.depth())
            raise(errc::level_mismatch,
                  "continuation level " + std::to_string(assignment.value.level()) +
                      " does not match component depth " + std::to_string(component.depth()));
        if (assignment.value.semiring() != component.semirings.back())
            raise(errc::semiring_mismatch,
                  "top-level semiring does not match the component's");

        std::optional<std::uint32_t> &slot =
            futs.theta_[assignment.component]
                       [*state * component.labels.size() + *label];
        if (slot)
            raise(errc::duplicate_key, "theta assigned twice for state '" +
                                           assignment.state + "' and label '" +
                                           assignment.label + "'");
        if (assignment.value.is_zero())
            continue; // zero is the default; keep the table sparse
        slot = futs.registry_->intern(assignment.value);
    }

    // Validate reachable continuations per component and collect the
    // universes: level-(m-1) ids are the keys of theta values, level-(k-1)
    // ids the keys of level-k universe members.
    for (std::uint32_t i = 0; i < n; ++i) {
        const FutsComponent &component = futs.type_.components[i];
        const std::uint32_t depth = component.depth();

        std::set<std::uint32_t> frontier; // ids at the level being scanned
        auto scan = [&](const Continuation &value, std::uint32_t level) {
            if (value.semiring() != component.semirings[level - 1])
                raise(errc::semiring_mismatch,
                      "level-" + std::to_string(level) +
                          " continuation in the wrong semiring");
            for (const auto &[key, weight] : value.entries()) {
                if (level == 1) {
                    if (key.index >= futs.states_.size())
                        raise(errc::unknown_state,
                              "leaf key " + std::to_string(key.index) +
                                  " outside the state set");
                } else {
                    frontier.insert(key.index);
                }
            }
        };

        std::set<std::uint32_t> current;
        for (const std::optional<std::uint32_t> &id : futs.theta_[i])
            if (id)
                current.insert(*id);
        for (std::uint32_t level = depth; level >= 1; --level) {
            frontier.clear();
            for (std::uint32_t id : current)
                scan(futs.registry_->at(level, id), level);
            if (level > 1) {
                futs.universes_[i][level - 2].assign(frontier.begin(), frontier.end());
                current.swap(frontier);
            }
        }
    }
    return futs;
}

} // namespace futs
