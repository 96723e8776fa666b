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

#include "futs/continuation.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <map>

namespace futs {

Continuation Continuation::make(SemiringId semiring, std::uint32_t level,
                                std::vector<Entry> entries) {
    if (level < 1)
        raise(errc::bad_level, "continuation level must be >= 1");
    KeyRef::Kind expected =
        level == 1 ? KeyRef::Kind::state : KeyRef::Kind::continuation;
    for (const Entry &e : entries) {
        if (e.first.kind != expected)
            raise(errc::bad_level, "key kind does not match continuation level " +
                                       std::to_string(level));
        if (e.second.semiring() != semiring)
            raise(errc::mixed_semiring, "entry value in foreign semiring");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry &a, const Entry &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1].first == entries[i].first)
            raise(errc::duplicate_key,
                  "duplicate key at index " + std::to_string(entries[i].first.index));
    std::erase_if(entries, [](const Entry &e) { return e.second.is_zero(); });
    return Continuation(semiring, level, std::move(entries));
}

Continuation Continuation::zero(SemiringId semiring, std::uint32_t level) {
    return make(semiring, level, {});
}

Value Continuation::evaluate(const KeyRef &key) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry &e, const KeyRef &k) { return e.first < k; });
    if (it != entries_.end() && it->first == key)
        return it->second;
    return Value::zero(semiring_);
}

Value Continuation::block_sum(std::span<const KeyRef> block) const {
    Value acc = Value::zero(semiring_);
    for (const KeyRef &key : block)
        acc = add(acc, evaluate(key));
    return acc;
}

std::size_t hash_value(const Continuation &c) {
    std::size_t seed = boost::hash<std::uint32_t>{}(c.level());
    boost::hash_combine(seed, static_cast<std::size_t>(c.semiring()));
    for (const auto &[key, value] : c.entries()) {
        boost::hash_combine(seed, static_cast<std::size_t>(key.kind));
        boost::hash_combine(seed, key.index);
        boost::hash_combine(seed, hash_value(value));
    }
    return seed;
}

std::uint32_t ContinuationRegistry::intern(const Continuation &c) {
    if (c.level() < 1)
        raise(errc::bad_level, "cannot register a continuation below level 1");
    if (levels_.size() < c.level())
        levels_.resize(c.level());
    Table &table = levels_[c.level() - 1];
    if (auto it = table.ids.find(c); it != table.ids.end())
        return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(table.items.size());
    table.items.push_back(c);
    table.ids.emplace(c, id);
    return id;
}

const Continuation &ContinuationRegistry::at(std::uint32_t level, std::uint32_t id) const {
    if (level < 1 || level > levels_.size() || id >= levels_[level - 1].items.size())
        raise(errc::index_out_of_range, "no continuation " + std::to_string(id) +
                                            " at level " + std::to_string(level));
    return levels_[level - 1].items[id];
}

std::uint32_t ContinuationRegistry::size(std::uint32_t level) const {
    if (level < 1 || level > levels_.size())
        return 0;
    return static_cast<std::uint32_t>(levels_[level - 1].items.size());
}

Continuation pushforward(const Continuation &phi, const KeyMap &f) {
    // Accumulate over the image; std::map keeps the result independent of
    // the order preimages are visited in.
    std::map<KeyRef, Value> image;
    for (const auto &[key, value] : phi.entries()) {
        std::optional<KeyRef> target = f(key);
        if (!target)
            raise(errc::unmapped_key,
                  "key at index " + std::to_string(key.index) + " has no image");
        auto [it, inserted] = image.emplace(*target, value);
        if (!inserted)
            it->second = add(it->second, value);
    }
    std::vector<Continuation::Entry> entries(image.begin(), image.end());
    return Continuation::make(phi.semiring(), phi.level(), std::move(entries));
}

Continuation nested_pushforward(const Continuation &phi,
                                std::span<const std::uint32_t> state_map,
                                const ContinuationRegistry &source,
                                ContinuationRegistry &target) {
    if (phi.level() == 1) {
        return pushforward(phi, [&](const KeyRef &key) -> std::optional<KeyRef> {
            if (key.index >= state_map.size())
                return std::nullopt;
            return KeyRef::state(state_map[key.index]);
        });
    }
    std::map<KeyRef, Value> image;
    for (const auto &[key, value] : phi.entries()) {
        const Continuation &below = source.at(phi.level() - 1, key.index);
        Continuation mapped = nested_pushforward(below, state_map, source, target);
        KeyRef new_key = KeyRef::continuation(target.intern(mapped));
        auto [it, inserted] = image.emplace(new_key, value);
        if (!inserted)
            it->second = add(it->second, value);
    }
    std::vector<Continuation::Entry> entries(image.begin(), image.end());
    return Continuation::make(phi.semiring(), phi.level(), std::move(entries));
}

} // namespace futs
