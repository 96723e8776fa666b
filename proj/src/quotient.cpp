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

#include "futs/quotient.hpp"

#include <numeric>

namespace futs {

QuotientResult quotient_futs(const Futs &futs, const Partition &E) {
    std::vector<std::uint32_t> carrier(futs.state_count());
    std::iota(carrier.begin(), carrier.end(), 0);
    if (E.carrier() != carrier)
        raise(errc::carrier_mismatch, "partition carrier is not the state set");

    std::vector<std::uint32_t> state_to_class(futs.state_count());
    std::vector<std::string> class_names;
    class_names.reserve(E.block_count());
    for (const auto &[block_id, members] : E.blocks()) {
        for (std::uint32_t member : members)
            state_to_class[member] = static_cast<std::uint32_t>(class_names.size());
        class_names.push_back(futs.state_name(members.front()));
    }

    auto registry = std::make_shared<ContinuationRegistry>();
    std::vector<ThetaAssignment> assignments;
    for (std::uint32_t i = 0; i < futs.component_count(); ++i) {
        const FutsComponent &component = futs.type().components[i];
        for (std::uint32_t label = 0; label < component.labels.size(); ++label) {
            for (const auto &[block_id, members] : E.blocks()) {
                Continuation image = nested_pushforward(
                    futs.theta(i, members.front(), label), state_to_class,
                    futs.registry(), *registry);
                // The quotient transition is well defined only when every
                // representative pushes to the same continuation.
                for (std::size_t m = 1; m < members.size(); ++m) {
                    Continuation other = nested_pushforward(
                        futs.theta(i, members[m], label), state_to_class,
                        futs.registry(), *registry);
                    if (!(other == image))
                        raise(errc::not_a_bisimulation,
                              "states '" + futs.state_name(members.front()) + "' and '" +
                                  futs.state_name(members[m]) +
                                  "' disagree on label '" + component.labels[label] +
                                  "' of component " + std::to_string(i + 1));
                }
                if (!image.is_zero())
                    assignments.push_back(ThetaAssignment{
                        i, class_names[state_to_class[members.front()]],
                        component.labels[label], std::move(image)});
            }
        }
    }

    QuotientResult result{
        build_futs(futs.type(), std::move(class_names), std::move(assignments), registry),
        std::move(state_to_class)};
    return result;
}

bool check_homomorphism(std::span<const std::uint32_t> f, const Futs &source,
                        const Futs &target) {
    if (!(source.type() == target.type()))
        raise(errc::type_mismatch, "source and target have different FuTS types");
    if (f.size() != source.state_count())
        raise(errc::unmapped_key, "state map does not cover the source states");
    for (std::uint32_t image : f)
        if (image >= target.state_count())
            raise(errc::unknown_state,
                  "state map hits index " + std::to_string(image) + " outside the target");

    // Interning into the target registry only extends the hash-cons tables;
    // it cannot change any theta value or universe of `target`.
    ContinuationRegistry &registry = *target.registry_ptr();
    for (std::uint32_t i = 0; i < source.component_count(); ++i) {
        for (std::uint32_t state = 0; state < source.state_count(); ++state) {
            for (std::uint32_t label = 0; label < source.label_count(i); ++label) {
                Continuation image = nested_pushforward(
                    source.theta(i, state, label), f, source.registry(), registry);
                if (!(image == target.theta(i, f[state], label)))
                    return false;
            }
        }
    }
    return true;
}

} // namespace futs
