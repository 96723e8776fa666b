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

#include <set>

#include "futs/partition.hpp"
#include "test_support.hpp"

using namespace futs;
using namespace futs::test;

TEST_CASE("identity and single block") {
    Partition id = Partition::identity({0, 1, 2});
    CHECK(id.block_count() == 3);
    CHECK(id.block_of(2) == 2);

    Partition one = Partition::single_block({0, 1, 2});
    CHECK(one.block_count() == 1);
    CHECK(one.same_block(0, 2));

    CHECK(Partition::single_block({}).block_count() == 0);
}

TEST_CASE("block ids are the smallest member") {
    Partition p = Partition::from_blocks({0, 1, 2, 3}, {{3, 1}, {0, 2}});
    CHECK(p.block_of(3) == 1);
    CHECK(p.block_of(2) == 0);
    CHECK(p.blocks().front().first == 0);
    CHECK(p.blocks().back().first == 1);
    CHECK(p.members(1) == std::vector<std::uint32_t>{1, 3});
    CHECK_THROWS_AS(p.members(2), error);
}

TEST_CASE("malformed partitions are rejected") {
    try {
        Partition::from_blocks({0, 1, 2}, {{0, 1}, {1, 2}});
        FAIL("expected OverlappingBlocks");
    } catch (const error &e) {
        CHECK(e.code() == errc::overlapping_blocks);
    }
    CHECK_THROWS_AS(Partition::from_blocks({0, 1, 2}, {{0, 1}}), error);      // not covering
    CHECK_THROWS_AS(Partition::from_blocks({0, 1}, {{0, 1, 5}}), error);      // foreign element
    CHECK_THROWS_AS(Partition::from_blocks({0, 1}, {{0}, {}, {1}}), error);   // empty block
    CHECK_THROWS_AS(Partition::identity({1, 1}), error);                      // dup carrier
    try {
        Partition::single_block({0, 1}).block_of(7);
        FAIL("expected KeyOutsideCarrier");
    } catch (const error &e) {
        CHECK(e.code() == errc::key_outside_carrier);
    }
}

TEST_CASE("carriers need not be contiguous") {
    Partition p = Partition::from_blocks({4, 7, 9}, {{9, 4}, {7}});
    CHECK(p.block_of(9) == 4);
    CHECK(p.block_of(7) == 7);
}

TEST_CASE("refines") {
    Partition fine = Partition::from_blocks({0, 1, 2, 3}, {{0}, {1}, {2, 3}});
    Partition coarse = Partition::from_blocks({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    CHECK(refines(fine, coarse));
    CHECK_FALSE(refines(coarse, fine));
    CHECK(refines(fine, fine));
    CHECK_THROWS_AS(refines(fine, Partition::single_block({0, 1})), error);
}

TEST_CASE("join is the finest common coarsening") {
    Partition a = Partition::from_blocks({0, 1, 2, 3}, {{0, 1}, {2}, {3}});
    Partition b = Partition::from_blocks({0, 1, 2, 3}, {{0}, {1, 2}, {3}});
    Partition j = join(a, b);
    CHECK(j.block_count() == 2);
    CHECK(j.same_block(0, 2));
    CHECK_FALSE(j.same_block(0, 3));
    CHECK(refines(a, j));
    CHECK(refines(b, j));
}

TEST_CASE("join on random partitions") {
    TestRng rng(8);
    for (int round = 0; round < 300; ++round) {
        std::uint32_t n = 1 + rng.below(7);
        Partition a = random_equivalence(n, rng.next());
        Partition b = random_equivalence(n, rng.next());
        Partition j = join(a, b);
        CHECK(refines(a, j));
        CHECK(refines(b, j));
        CHECK(join(a, a) == a);
    }
}

TEST_CASE("set partition enumeration matches the Bell numbers") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::uint32_t n = 0; n <= 8; ++n) {
        auto partitions = all_set_partitions(n);
        CHECK(partitions.size() == bell[n]);
        std::set<std::vector<std::uint32_t>> distinct(partitions.begin(), partitions.end());
        CHECK(distinct.size() == partitions.size());
        for (const auto &rgs : partitions) {
            // restricted growth: first occurrence of each block number ascending
            std::uint32_t max_seen = 0;
            for (std::size_t i = 0; i < rgs.size(); ++i) {
                CHECK(rgs[i] <= max_seen);
                max_seen = std::max(max_seen, rgs[i] + 1);
            }
        }
    }
}

TEST_CASE("partition from block assignment") {
    Partition p = partition_from_assignment({0, 1, 2}, {0, 1, 0});
    CHECK(p.block_count() == 2);
    CHECK(p.same_block(0, 2));
    CHECK_THROWS_AS(partition_from_assignment({0, 1}, {0}), error);
}
