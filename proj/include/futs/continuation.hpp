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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "futs/semiring.hpp"

namespace futs {

/// Key of a continuation entry: a state index for level-1 continuations, the
/// id of a registered continuation one level below otherwise.
struct KeyRef {
    enum class Kind : std::uint8_t { state, continuation };

    Kind kind;
    std::uint32_t index;

    static KeyRef state(std::uint32_t i) { return {Kind::state, i}; }
    static KeyRef continuation(std::uint32_t i) { return {Kind::continuation, i}; }

    auto operator<=>(const KeyRef &) const = default;
};

/// Finitely supported function from keys to one semiring, in canonical form:
/// entries sorted by key, zero values dropped at construction. Two
/// continuations are equal iff their canonical forms are identical.
///
/// A continuation of level 1 maps states; a continuation of level k >= 2 maps
/// ids of level-(k-1) continuations.
class Continuation {
public:
    using Entry = std::pair<KeyRef, Value>;

    static Continuation make(SemiringId semiring, std::uint32_t level,
                             std::vector<Entry> entries);
    static Continuation zero(SemiringId semiring, std::uint32_t level);

    SemiringId semiring() const { return semiring_; }
    std::uint32_t level() const { return level_; }
    const std::vector<Entry> &entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /// Stored value, or the semiring's zero when the key is outside the
    /// support.
    Value evaluate(const KeyRef &key) const;

    /// Sum of the values over a set of keys: phi[B].
    Value block_sum(std::span<const KeyRef> block) const;

    bool operator==(const Continuation &) const = default;

private:
    Continuation(SemiringId semiring, std::uint32_t level, std::vector<Entry> entries)
        : semiring_(semiring), level_(level), entries_(std::move(entries)) {}

    SemiringId semiring_;
    std::uint32_t level_;
    std::vector<Entry> entries_;
};

std::size_t hash_value(const Continuation &c);

struct ContinuationHash {
    std::size_t operator()(const Continuation &c) const { return hash_value(c); }
};

/// Append-only store of canonical continuations, one table per nesting level.
/// Interning a continuation equal to a registered one returns the existing
/// id, so id equality decides continuation equality in O(1). Registration is
/// single-writer; concurrent reads are fine.
class ContinuationRegistry {
public:
    std::uint32_t intern(const Continuation &c);
    const Continuation &at(std::uint32_t level, std::uint32_t id) const;
    std::uint32_t size(std::uint32_t level) const;
    std::uint32_t max_level() const { return static_cast<std::uint32_t>(levels_.size()); }

private:
    struct Table {
        std::vector<Continuation> items;
        std::unordered_map<Continuation, std::uint32_t, ContinuationHash> ids;
    };
    std::vector<Table> levels_; // level k stored at index k-1
};

/// Total key renaming; std::nullopt marks an unmapped key and raises
/// UnmappedKey when hit.
using KeyMap = std::function<std::optional<KeyRef>(const KeyRef &)>;

/// Functor action on one level: the image assigns to y the sum of phi over
/// the preimage of y.
Continuation pushforward(const Continuation &phi, const KeyMap &f);

/// Functor action through all levels of a nested continuation. Level-1 keys
/// are renamed along state_map; higher levels recursively push their key
/// continuations forward, intern them in `target`, and add up the weights of
/// keys that collapse.
Continuation nested_pushforward(const Continuation &phi,
                                std::span<const std::uint32_t> state_map,
                                const ContinuationRegistry &source,
                                ContinuationRegistry &target);

} // namespace futs
