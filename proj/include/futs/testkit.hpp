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

#include <random>

#include "futs/model_io.hpp"

namespace futs {

/// Deterministic RNG facade over mt19937_64. The distribution helpers are
/// hand-rolled because the standard distribution templates are
/// implementation-defined; identical (seed, params) must yield identical
/// documents on every platform.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint32_t below(std::uint32_t bound); // uniform-ish in [0, bound)
    bool chance(double probability);

    template <typename T> const T &pick(const std::vector<T> &pool) {
        if (pool.empty())
            raise(errc::bad_params, "cannot pick from an empty pool");
        return pool[below(static_cast<std::uint32_t>(pool.size()))];
    }

private:
    std::mt19937_64 engine_;
};

struct GeneratorParams {
    std::uint32_t n_states = 5;
    double density = 0.3;
    std::uint32_t n_actions = 2;
    // Small pools keep sums collision-prone on purpose: exact equality has to
    // tell 1/2 + 1/2 from 1, which floats would blur.
    std::vector<Rational> rate_pool = {Rational(1, 2), Rational(1), Rational(2)};
};

/// Random valid model of the kind; identical (kind, seed, params) produce
/// byte-identical documents. Kind futs is not generated directly.
ModelDocument random_model(ModelKind kind, std::uint64_t seed,
                           const GeneratorParams &params = {});

/// Random equivalence relation by sequential random block assignment.
Partition random_equivalence(std::uint32_t n_states, std::uint64_t seed);

} // namespace futs
