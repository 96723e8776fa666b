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

#include "futs/testkit.hpp"

#include <algorithm>
#include <numeric>

namespace futs {

std::uint32_t TestRng::below(std::uint32_t bound) {
    if (bound == 0)
        raise(errc::bad_params, "empty range");
    return static_cast<std::uint32_t>(next() % bound); // modulo bias is fine here
}

bool TestRng::chance(double probability) {
    // 53 uniform bits; exact arithmetic on IEEE doubles, so reproducible.
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < probability;
}

namespace {

std::vector<std::string> make_names(const char *prefix, std::uint32_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

std::vector<std::string> make_actions(std::uint32_t count) {
    std::vector<std::string> actions;
    for (std::uint32_t i = 0; i < count; ++i) {
        std::string name;
        std::uint32_t k = i;
        do {
            name.insert(name.begin(), static_cast<char>('a' + k % 26));
            k /= 26;
        } while (k > 0);
        actions.push_back(std::move(name));
    }
    return actions;
}

void check_params(const GeneratorParams &params) {
    if (params.n_states < 1)
        raise(errc::bad_params, "n_states must be >= 1");
    if (params.n_actions < 1)
        raise(errc::bad_params, "n_actions must be >= 1");
    if (params.density < 0.0 || params.density > 1.0)
        raise(errc::bad_params, "density must lie in [0, 1]");
    if (params.rate_pool.empty())
        raise(errc::bad_params, "rate pool must be nonempty");
    for (const Rational &rate : params.rate_pool)
        if (rate <= 0)
            raise(errc::bad_params, "rates must be > 0");
}

std::vector<LtsTransition> random_lts_part(TestRng &rng, const GeneratorParams &params) {
    std::vector<LtsTransition> transitions;
    for (std::uint32_t s = 0; s < params.n_states; ++s)
        for (std::uint32_t a = 0; a < params.n_actions; ++a)
            for (std::uint32_t t = 0; t < params.n_states; ++t)
                if (rng.chance(params.density))
                    transitions.push_back({s, a, t});
    return transitions;
}

std::vector<RateTransition> random_rate_part(TestRng &rng, const GeneratorParams &params) {
    std::vector<RateTransition> transitions;
    for (std::uint32_t s = 0; s < params.n_states; ++s)
        for (std::uint32_t t = 0; t < params.n_states; ++t) {
            if (!rng.chance(params.density))
                continue;
            transitions.push_back({s, rng.pick(params.rate_pool), t});
            // occasional duplicate triple, to exercise multiplicity summing
            if (rng.chance(0.25))
                transitions.push_back({s, rng.pick(params.rate_pool), t});
        }
    return transitions;
}

Distribution random_distribution(TestRng &rng, const GeneratorParams &params) {
    std::uint32_t support = 1 + rng.below(std::min(params.n_states, 3u));
    std::vector<std::uint32_t> targets;
    while (targets.size() < support) {
        std::uint32_t t = rng.below(params.n_states);
        if (std::find(targets.begin(), targets.end(), t) == targets.end())
            targets.push_back(t);
    }
    std::vector<std::uint32_t> weights(support);
    std::uint32_t total = 0;
    for (std::uint32_t &w : weights) {
        w = 1 + rng.below(3);
        total += w;
    }
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (std::uint32_t i = 0; i < support; ++i)
        entries.emplace_back(targets[i], Rational(weights[i], total));
    return make_distribution(std::move(entries));
}

std::vector<PaStep> random_steps(TestRng &rng, const GeneratorParams &params) {
    std::vector<PaStep> steps;
    for (std::uint32_t s = 0; s < params.n_states; ++s)
        for (std::uint32_t a = 0; a < params.n_actions; ++a) {
            if (!rng.chance(params.density))
                continue;
            std::uint32_t count = 1 + rng.below(2);
            for (std::uint32_t i = 0; i < count; ++i) {
                PaStep step{s, a, random_distribution(rng, params)};
                bool duplicate = false;
                for (const PaStep &existing : steps)
                    if (existing.src == step.src && existing.action == step.action &&
                        existing.distribution == step.distribution)
                        duplicate = true;
                if (!duplicate)
                    steps.push_back(std::move(step));
            }
        }
    return steps;
}

// Stochastic rows: each selected state distributes mass 1 over some targets.
std::vector<RateTransition> random_stochastic_part(TestRng &rng,
                                                   const GeneratorParams &params) {
    std::vector<RateTransition> transitions;
    for (std::uint32_t s = 0; s < params.n_states; ++s) {
        if (!rng.chance(params.density))
            continue;
        for (const auto &[t, p] : random_distribution(rng, params))
            transitions.push_back({s, p, t});
    }
    return transitions;
}

} // namespace

ModelDocument random_model(ModelKind kind, std::uint64_t seed,
                           const GeneratorParams &params) {
    check_params(params);
    TestRng rng(seed);
    std::vector<std::string> states = make_names("s", params.n_states);
    std::vector<std::string> actions = make_actions(params.n_actions);

    switch (kind) {
    case ModelKind::lts:
        return ModelDocument{kind, LtsModel{std::move(states), std::move(actions),
                                            random_lts_part(rng, params)}};
    case ModelKind::ctmc:
        return ModelDocument{kind,
                             CtmcModel{std::move(states), random_rate_part(rng, params), false}};
    case ModelKind::dtmc:
        return ModelDocument{
            kind, CtmcModel{std::move(states), random_stochastic_part(rng, params), true}};
    case ModelKind::imc: {
        std::vector<LtsTransition> interactive = random_lts_part(rng, params);
        return ModelDocument{kind, ImcModel{std::move(states), std::move(actions),
                                            std::move(interactive),
                                            random_rate_part(rng, params)}};
    }
    case ModelKind::pa:
        return ModelDocument{
            kind, PaModel{std::move(states), std::move(actions), random_steps(rng, params)}};
    case ModelKind::ma: {
        std::vector<PaStep> immediate = random_steps(rng, params);
        return ModelDocument{kind, MaModel{std::move(states), std::move(actions),
                                           std::move(immediate),
                                           random_rate_part(rng, params)}};
    }
    case ModelKind::futs:
        raise(errc::bad_params, "random raw futs generation is not supported");
    }
    raise(errc::bad_params, "unreachable");
}

Partition random_equivalence(std::uint32_t n_states, std::uint64_t seed) {
    if (n_states < 1)
        raise(errc::bad_params, "need at least one state");
    TestRng rng(seed);
    std::vector<std::uint32_t> assignment(n_states, 0);
    std::uint32_t blocks = 1;
    for (std::uint32_t i = 1; i < n_states; ++i) {
        std::uint32_t choice = rng.below(blocks + 1);
        assignment[i] = choice;
        if (choice == blocks)
            ++blocks;
    }
    std::vector<std::uint32_t> carrier(n_states);
    std::iota(carrier.begin(), carrier.end(), 0);
    return partition_from_assignment(carrier, assignment);
}

} // namespace futs
