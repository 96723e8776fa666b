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

#include <doctest.h>

#include "futs/continuation.hpp"
#include "test_support.hpp"

using namespace futs;
using namespace futs::test;

namespace {

Continuation cont(SemiringId id, std::vector<Continuation::Entry> entries) {
    return Continuation::make(id, 1, std::move(entries));
}

KeyRef s(std::uint32_t i) { return KeyRef::state(i); }

} // namespace

TEST_CASE("construction drops zero entries and sorts keys") {
    Continuation phi = cont(SemiringId::nonneg_rational,
                            {{s(2), rat(1, 2)}, {s(1), rat(0)}});
    REQUIRE(phi.entries().size() == 1);
    CHECK(phi.entries().front().first == s(2));
    CHECK(phi.evaluate(s(1)) == rat(0));

    Continuation unsorted = cont(SemiringId::nonneg_rational,
                                 {{s(3), rat(1)}, {s(0), rat(2)}});
    CHECK(unsorted.entries().front().first == s(0));

    CHECK(cont(SemiringId::boolean, {}).is_zero());
    CHECK(Continuation::zero(SemiringId::boolean, 1).is_zero());
}

TEST_CASE("duplicate keys are rejected") {
    try {
        cont(SemiringId::nonneg_rational, {{s(1), rat(1, 2)}, {s(1), rat(1, 2)}});
        FAIL("expected DuplicateKey");
    } catch (const error &e) {
        CHECK(e.code() == errc::duplicate_key);
    }
}

TEST_CASE("key kinds must match the level") {
    CHECK_THROWS_AS(Continuation::make(SemiringId::boolean, 1,
                                       {{KeyRef::continuation(0), tt()}}),
                    error);
    CHECK_THROWS_AS(Continuation::make(SemiringId::boolean, 2, {{s(0), tt()}}), error);
    CHECK_THROWS_AS(Continuation::make(SemiringId::boolean, 0, {}), error);
    CHECK_THROWS_AS(cont(SemiringId::boolean, {{s(0), rat(1)}}), error);
}

TEST_CASE("evaluate") {
    Continuation phi = cont(SemiringId::nonneg_rational, {{s(1), rat(1, 2)}});
    CHECK(phi.evaluate(s(1)) == rat(1, 2));
    CHECK(phi.evaluate(s(2)) == rat(0));
    CHECK(Continuation::zero(SemiringId::nonneg_rational, 1).evaluate(s(1)) == rat(0));
}

TEST_CASE("block sums") {
    Continuation phi = cont(SemiringId::nonneg_rational,
                            {{s(1), rat(1, 2)}, {s(2), rat(1, 2)}});
    std::vector<KeyRef> block{s(1), s(2)};
    CHECK(phi.block_sum(block) == rat(1));
    CHECK(phi.block_sum({}) == rat(0));

    Continuation chi = cont(SemiringId::boolean, {{s(1), tt()}});
    std::vector<KeyRef> other{s(2)};
    CHECK(chi.block_sum(other) == ff());
}

TEST_CASE("pushforward sums over preimages") {
    Continuation phi = cont(SemiringId::nonneg_rational,
                            {{s(1), rat(1, 3)}, {s(2), rat(2, 3)}});

    auto identity = [](const KeyRef &k) -> std::optional<KeyRef> { return k; };
    CHECK(pushforward(phi, identity) == phi);

    auto collapse = [](const KeyRef &) -> std::optional<KeyRef> { return s(7); };
    Continuation image = pushforward(phi, collapse);
    REQUIRE(image.entries().size() == 1);
    CHECK(image.evaluate(s(7)) == rat(1));

    Continuation chi = cont(SemiringId::boolean, {{s(1), tt()}});
    auto rename = [](const KeyRef &k) -> std::optional<KeyRef> {
        return s(k.index == 1 ? 4 : 5);
    };
    CHECK(pushforward(chi, rename) == cont(SemiringId::boolean, {{s(4), tt()}}));

    auto partial = [](const KeyRef &) -> std::optional<KeyRef> { return std::nullopt; };
    try {
        pushforward(phi, partial);
        FAIL("expected UnmappedKey");
    } catch (const error &e) {
        CHECK(e.code() == errc::unmapped_key);
    }
}

TEST_CASE("registry interning is hash-consing") {
    ContinuationRegistry registry;
    Continuation phi = cont(SemiringId::nonneg_rational, {{s(0), rat(1)}});
    Continuation psi = cont(SemiringId::nonneg_rational, {{s(1), rat(1)}});
    std::uint32_t a = registry.intern(phi);
    std::uint32_t b = registry.intern(psi);
    CHECK(a != b);
    CHECK(registry.intern(cont(SemiringId::nonneg_rational, {{s(0), rat(1)}})) == a);
    CHECK(registry.size(1) == 2);
    CHECK(registry.at(1, a) == phi);
    CHECK_THROWS_AS(registry.at(1, 9), error);
    CHECK_THROWS_AS(registry.at(2, 0), error);
}

TEST_CASE("nested pushforward collapses inner continuations") {
    // Phi = {pi -> true, pi' -> true} with pi = Dirac(s1), pi' = Dirac(s2);
    // mapping both states to one target must merge the keys: {(b -> 1) -> true}.
    ContinuationRegistry source;
    std::uint32_t pi = source.intern(cont(SemiringId::nonneg_rational, {{s(0), rat(1)}}));
    std::uint32_t pi2 = source.intern(cont(SemiringId::nonneg_rational, {{s(1), rat(1)}}));
    Continuation big = Continuation::make(
        SemiringId::boolean, 2,
        {{KeyRef::continuation(pi), tt()}, {KeyRef::continuation(pi2), tt()}});

    std::vector<std::uint32_t> to_b{0, 0}; // both states to target state 0
    ContinuationRegistry target;
    Continuation image = nested_pushforward(big, to_b, source, target);

    REQUIRE(image.entries().size() == 1);
    CHECK(image.entries().front().second == tt());
    const Continuation &key = target.at(1, image.entries().front().first.index);
    CHECK(key == cont(SemiringId::nonneg_rational, {{s(0), rat(1)}}));
}

TEST_CASE("nested pushforward along the identity preserves structure") {
    ContinuationRegistry source;
    std::uint32_t pi = source.intern(
        cont(SemiringId::nonneg_rational, {{s(0), rat(1, 2)}, {s(1), rat(1, 2)}}));
    Continuation big =
        Continuation::make(SemiringId::boolean, 2, {{KeyRef::continuation(pi), tt()}});

    std::vector<std::uint32_t> identity{0, 1};
    ContinuationRegistry target;
    Continuation image = nested_pushforward(big, identity, source, target);
    REQUIRE(image.entries().size() == 1);
    CHECK(target.at(1, image.entries().front().first.index) == source.at(1, pi));
}

TEST_CASE("nested pushforward at level 1 coincides with pushforward") {
    TestRng rng(3);
    ContinuationRegistry source, target;
    for (int round = 0; round < 200; ++round) {
        SemiringId id = round % 2 ? SemiringId::boolean : SemiringId::nonneg_rational;
        Continuation phi = random_level1(rng, 5, id);
        std::vector<std::uint32_t> map(5);
        for (auto &m : map)
            m = rng.below(3);
        Continuation via_nested = nested_pushforward(phi, map, source, target);
        Continuation via_plain = pushforward(phi, [&](const KeyRef &k) {
            return std::optional<KeyRef>(s(map[k.index]));
        });
        CHECK(via_nested == via_plain);
    }
}

TEST_CASE("canonical form is idempotent") {
    TestRng rng(4);
    for (int round = 0; round < 500; ++round) {
        SemiringId id = round % 2 ? SemiringId::boolean : SemiringId::nonneg_rational;
        Continuation phi = random_level1(rng, 6, id);
        CHECK(Continuation::make(phi.semiring(), phi.level(), phi.entries()) == phi);
    }
}

TEST_CASE("pushforward preserves total mass") {
    TestRng rng(5);
    std::vector<KeyRef> source_universe, target_universe;
    for (std::uint32_t i = 0; i < 6; ++i)
        source_universe.push_back(s(i));
    for (std::uint32_t i = 0; i < 3; ++i)
        target_universe.push_back(s(i));

    for (int round = 0; round < 500; ++round) {
        SemiringId id = round % 2 ? SemiringId::boolean : SemiringId::nonneg_rational;
        Continuation phi = random_level1(rng, 6, id);
        std::vector<std::uint32_t> map(6);
        for (auto &m : map)
            m = rng.below(3);
        Continuation image = pushforward(phi, [&](const KeyRef &k) {
            return std::optional<KeyRef>(s(map[k.index]));
        });
        CHECK(image.block_sum(target_universe) == phi.block_sum(source_universe));
    }
}

TEST_CASE("pushforward is functorial") {
    TestRng rng(6);
    for (int round = 0; round < 500; ++round) {
        SemiringId id = round % 2 ? SemiringId::boolean : SemiringId::nonneg_rational;
        Continuation phi = random_level1(rng, 6, id);
        std::vector<std::uint32_t> f(6), g(4);
        for (auto &m : f)
            m = rng.below(4);
        for (auto &m : g)
            m = rng.below(3);
        auto lift = [](const std::vector<std::uint32_t> &map) {
            return [&map](const KeyRef &k) { return std::optional<KeyRef>(s(map[k.index])); };
        };
        auto composed = [&](const KeyRef &k) {
            return std::optional<KeyRef>(s(g[f[k.index]]));
        };
        CHECK(pushforward(phi, composed) == pushforward(pushforward(phi, lift(f)), lift(g)));
    }
}
