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
#include <string>
#include <vector>

#include "futs/futs.hpp"
#include "futs/partition.hpp"

namespace futs {

/// Reserved label of the degenerate delay alphabet. Action alphabets may not
/// contain it; that keeps the file format free of component ambiguity.
inline constexpr const char *delay_label = "delta";

struct LtsTransition {
    std::uint32_t src;
    std::uint32_t action;
    std::uint32_t dst;

    auto operator<=>(const LtsTransition &) const = default;
};

struct RateTransition {
    std::uint32_t src;
    Rational rate; // > 0
    std::uint32_t dst;

    bool operator==(const RateTransition &) const = default;
};

/// Probability distribution over states: positive entries sorted by state,
/// total mass 1.
using Distribution = std::vector<std::pair<std::uint32_t, Rational>>;

/// Canonicalizes and validates: merges nothing, drops zero entries, sorts by
/// state, rejects duplicates and total mass != 1.
Distribution make_distribution(std::vector<std::pair<std::uint32_t, Rational>> entries);

struct PaStep {
    std::uint32_t src;
    std::uint32_t action;
    Distribution distribution;

    bool operator==(const PaStep &) const = default;
};

/// Image-finite labelled transition system.
struct LtsModel {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<LtsTransition> transitions;

    void validate() const; // ranges, nonempty alphabet, no duplicate triples
};

/// Continuous-time Markov chain; with the dtmc flag set, every state with
/// outgoing mass must have total rate exactly 1. Duplicate (src, dst) triples
/// are kept in the model and only summed by the encoding.
struct CtmcModel {
    std::vector<std::string> states;
    std::vector<RateTransition> transitions;
    bool dtmc = false;

    void validate() const;
};

/// Interactive Markov chain: an LTS part plus a CTMC part.
struct ImcModel {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<LtsTransition> interactive;
    std::vector<RateTransition> markovian;

    void validate() const;
};

/// Probabilistic (Segala) automaton.
struct PaModel {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<PaStep> steps;

    void validate() const;
};

/// Markov automaton: immediate probabilistic steps plus timed transitions.
struct MaModel {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<PaStep> immediate;
    std::vector<RateTransition> timed;

    void validate() const;
};

// FuTS encodings. The component layout follows the shape of the model:
//   LTS        (A, [bool])
//   CTMC/DTMC  ({delta}, [rat])
//   IMC        (A, [bool]) x ({delta}, [rat])
//   PA         (A, [rat, bool])
//   MA         (A, [rat, bool]) x ({delta}, [rat])
Futs encode_lts(const LtsModel &m);
Futs encode_ctmc(const CtmcModel &m);
Futs encode_imc(const ImcModel &m);
Futs encode_pa(const PaModel &m);
Futs encode_ma(const MaModel &m);

// Concrete bisimulation checkers, implemented directly on the models as in
// the literature. They share no code with the FuTS transfer condition and
// serve as its correspondence oracles.

/// Strong bisimulation: related states match each other's a-steps into
/// related states.
bool is_lts_bisimulation(const LtsModel &m, const Partition &R);

/// Lumpability: related states have equal aggregate rates into every class.
bool is_lumping(const CtmcModel &m, const Partition &R);

/// IMC strong bisimulation: class-wise action reachability plus lumping.
bool is_imc_bisimulation(const ImcModel &m, const Partition &R);

/// Probabilistic bisimulation: every a-step is matched by an a-step with
/// equal class masses.
bool is_pa_bisimulation(const PaModel &m, const Partition &R);

/// MA strong bisimulation: immediate steps compared up to the lifting of R
/// to the occurring distributions, timed part compared by lumping.
bool is_ma_bisimulation(const MaModel &m, const Partition &R);

} // namespace futs
