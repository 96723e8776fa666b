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

#include "futs/models.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace futs {

Distribution make_distribution(std::vector<std::pair<std::uint32_t, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    Rational mass = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i - 1].first == entries[i].first)
            raise(errc::duplicate_key,
                  "state " + std::to_string(entries[i].first) + " listed twice");
        if (entries[i].second < 0)
            raise(errc::bad_params, "negative probability");
        mass += entries[i].second;
    }
    if (mass != 1)
        raise(errc::not_stochastic, "distribution has mass " + to_string(mass));
    std::erase_if(entries, [](const auto &e) { return e.second == 0; });
    return entries;
}

namespace {

void check_state_names(const std::vector<std::string> &states) {
    std::set<std::string> seen(states.begin(), states.end());
    if (seen.size() != states.size())
        raise(errc::duplicate_key, "duplicate state name");
}

void check_actions(const std::vector<std::string> &actions) {
    if (actions.empty())
        raise(errc::bad_params, "action alphabet must be nonempty");
    std::set<std::string> seen;
    for (const std::string &action : actions) {
        if (action == delay_label)
            raise(errc::semantic_error,
                  std::string("'") + delay_label + "' is reserved for the delay component");
        if (!seen.insert(action).second)
            raise(errc::duplicate_key, "duplicate action '" + action + "'");
    }
}

void check_lts_part(const std::vector<std::string> &states,
                    const std::vector<std::string> &actions,
                    const std::vector<LtsTransition> &transitions) {
    std::set<LtsTransition> seen;
    for (const LtsTransition &t : transitions) {
        if (t.src >= states.size() || t.dst >= states.size())
            raise(errc::unknown_state, "transition endpoint out of range");
        if (t.action >= actions.size())
            raise(errc::unknown_label, "transition action out of range");
        if (!seen.insert(t).second)
            raise(errc::duplicate_key, "duplicate transition triple");
    }
}

void check_rate_part(const std::vector<std::string> &states,
                     const std::vector<RateTransition> &transitions) {
    for (const RateTransition &t : transitions) {
        if (t.src >= states.size() || t.dst >= states.size())
            raise(errc::unknown_state, "transition endpoint out of range");
        if (t.rate <= 0)
            raise(errc::semantic_error, "rate must be > 0, got " + to_string(t.rate));
    }
}

void check_steps(const std::vector<std::string> &states,
                 const std::vector<std::string> &actions,
                 const std::vector<PaStep> &steps) {
    std::set<std::pair<std::pair<std::uint32_t, std::uint32_t>, Distribution>> seen;
    for (const PaStep &step : steps) {
        if (step.src >= states.size())
            raise(errc::unknown_state, "step source out of range");
        if (step.action >= actions.size())
            raise(errc::unknown_label, "step action out of range");
        Distribution canonical = make_distribution(step.distribution);
        for (const auto &[state, probability] : canonical)
            if (state >= states.size())
                raise(errc::unknown_state, "distribution target out of range");
        if (!seen.insert({{step.src, step.action}, canonical}).second)
            raise(errc::duplicate_key, "duplicate probabilistic step");
    }
}

// R(s, dst) = sum of the rates of all (s, ., dst) triples.
std::vector<std::map<std::uint32_t, Rational>>
rate_matrix(std::size_t n, const std::vector<RateTransition> &transitions) {
    std::vector<std::map<std::uint32_t, Rational>> rates(n);
    for (const RateTransition &t : transitions)
        rates[t.src][t.dst] += t.rate;
    return rates;
}

std::map<std::uint32_t, Rational>
class_rates(const std::map<std::uint32_t, Rational> &row, const Partition &R) {
    std::map<std::uint32_t, Rational> sums;
    for (const auto &[dst, rate] : row)
        sums[R.block_of(dst)] += rate;
    std::erase_if(sums, [](const auto &e) { return e.second == 0; });
    return sums;
}

// pi[C] for every class C of R, nonzero entries only.
std::map<std::uint32_t, Rational> class_masses(const Distribution &distribution,
                                               const Partition &R) {
    std::map<std::uint32_t, Rational> masses;
    for (const auto &[state, probability] : distribution)
        masses[R.block_of(state)] += probability;
    std::erase_if(masses, [](const auto &e) { return e.second == 0; });
    return masses;
}

void require_carrier(const std::vector<std::string> &states, const Partition &R) {
    if (R.carrier().size() != states.size())
        raise(errc::carrier_mismatch, "relation carrier is not the state set");
    for (std::uint32_t i = 0; i < states.size(); ++i)
        if (!R.contains(i))
            raise(errc::carrier_mismatch, "relation carrier is not the state set");
}

} // namespace

void LtsModel::validate() const {
    check_state_names(states);
    check_actions(actions);
    check_lts_part(states, actions, transitions);
}

void CtmcModel::validate() const {
    check_state_names(states);
    check_rate_part(states, transitions);
    if (dtmc) {
        std::vector<Rational> total(states.size(), 0);
        for (const RateTransition &t : transitions)
            total[t.src] += t.rate;
        for (std::uint32_t s = 0; s < states.size(); ++s)
            if (total[s] != 0 && total[s] != 1)
                raise(errc::not_stochastic, "state '" + states[s] +
                                                "' has outgoing mass " +
                                                to_string(total[s]));
    }
}

void ImcModel::validate() const {
    check_state_names(states);
    check_actions(actions);
    check_lts_part(states, actions, interactive);
    check_rate_part(states, markovian);
}

void PaModel::validate() const {
    check_state_names(states);
    check_actions(actions);
    check_steps(states, actions, steps);
}

void MaModel::validate() const {
    check_state_names(states);
    check_actions(actions);
    check_steps(states, actions, immediate);
    check_rate_part(states, timed);
}

namespace {

// theta(s)(a) = {s' -> true | (s,a,s') in the relation}, one assignment per
// (source, action) pair with any transition.
std::vector<ThetaAssignment>
boolean_component(std::uint32_t component, const std::vector<std::string> &states,
                  const std::vector<std::string> &actions,
                  const std::vector<LtsTransition> &transitions) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> targets;
    for (const LtsTransition &t : transitions)
        targets[{t.src, t.action}].insert(t.dst);
    std::vector<ThetaAssignment> assignments;
    for (const auto &[key, dsts] : targets) {
        std::vector<Continuation::Entry> entries;
        for (std::uint32_t dst : dsts)
            entries.emplace_back(KeyRef::state(dst), Value::boolean(true));
        assignments.push_back(ThetaAssignment{
            component, states[key.first], actions[key.second],
            Continuation::make(SemiringId::boolean, 1, std::move(entries))});
    }
    return assignments;
}

// theta(s)(delta)(s') = sum of the rates of all (s, ., s') triples.
std::vector<ThetaAssignment>
rate_component(std::uint32_t component, const std::vector<std::string> &states,
               const std::vector<RateTransition> &transitions) {
    std::vector<std::map<std::uint32_t, Rational>> rates =
        rate_matrix(states.size(), transitions);
    std::vector<ThetaAssignment> assignments;
    for (std::uint32_t s = 0; s < states.size(); ++s) {
        if (rates[s].empty())
            continue;
        std::vector<Continuation::Entry> entries;
        for (const auto &[dst, rate] : rates[s])
            entries.emplace_back(KeyRef::state(dst), Value::rational(rate));
        assignments.push_back(ThetaAssignment{
            component, states[s], delay_label,
            Continuation::make(SemiringId::nonneg_rational, 1, std::move(entries))});
    }
    return assignments;
}

// theta(s)(a) = {pi -> true | s -a-> pi}, distributions hash-consed at
// level 1 of the registry.
std::vector<ThetaAssignment>
nested_component(std::uint32_t component, const std::vector<std::string> &states,
                 const std::vector<std::string> &actions,
                 const std::vector<PaStep> &steps, ContinuationRegistry &registry) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> keys;
    for (const PaStep &step : steps) {
        std::vector<Continuation::Entry> entries;
        for (const auto &[state, probability] : make_distribution(step.distribution))
            entries.emplace_back(KeyRef::state(state), Value::rational(probability));
        std::uint32_t id = registry.intern(
            Continuation::make(SemiringId::nonneg_rational, 1, std::move(entries)));
        keys[{step.src, step.action}].insert(id);
    }
    std::vector<ThetaAssignment> assignments;
    for (const auto &[key, ids] : keys) {
        std::vector<Continuation::Entry> entries;
        for (std::uint32_t id : ids)
            entries.emplace_back(KeyRef::continuation(id), Value::boolean(true));
        assignments.push_back(ThetaAssignment{
            component, states[key.first], actions[key.second],
            Continuation::make(SemiringId::boolean, 2, std::move(entries))});
    }
    return assignments;
}

void append(std::vector<ThetaAssignment> &into, std::vector<ThetaAssignment> &&from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
}

} // namespace

Futs encode_lts(const LtsModel &m) {
    m.validate();
    FutsType type{{FutsComponent{m.actions, {SemiringId::boolean}}}};
    return build_futs(std::move(type), m.states,
                      boolean_component(0, m.states, m.actions, m.transitions));
}

Futs encode_ctmc(const CtmcModel &m) {
    m.validate();
    FutsType type{{FutsComponent{{delay_label}, {SemiringId::nonneg_rational}}}};
    return build_futs(std::move(type), m.states,
                      rate_component(0, m.states, m.transitions));
}

Futs encode_imc(const ImcModel &m) {
    m.validate();
    FutsType type{{FutsComponent{m.actions, {SemiringId::boolean}},
                   FutsComponent{{delay_label}, {SemiringId::nonneg_rational}}}};
    std::vector<ThetaAssignment> assignments =
        boolean_component(0, m.states, m.actions, m.interactive);
    append(assignments, rate_component(1, m.states, m.markovian));
    return build_futs(std::move(type), m.states, std::move(assignments));
}

Futs encode_pa(const PaModel &m) {
    m.validate();
    FutsType type{{FutsComponent{m.actions, {SemiringId::nonneg_rational,
                                             SemiringId::boolean}}}};
    auto registry = std::make_shared<ContinuationRegistry>();
    std::vector<ThetaAssignment> assignments =
        nested_component(0, m.states, m.actions, m.steps, *registry);
    return build_futs(std::move(type), m.states, std::move(assignments), registry);
}

Futs encode_ma(const MaModel &m) {
    m.validate();
    FutsType type{{FutsComponent{m.actions, {SemiringId::nonneg_rational,
                                             SemiringId::boolean}},
                   FutsComponent{{delay_label}, {SemiringId::nonneg_rational}}}};
    auto registry = std::make_shared<ContinuationRegistry>();
    std::vector<ThetaAssignment> assignments =
        nested_component(0, m.states, m.actions, m.immediate, *registry);
    append(assignments, rate_component(1, m.states, m.timed));
    return build_futs(std::move(type), m.states, std::move(assignments), registry);
}

bool is_lts_bisimulation(const LtsModel &m, const Partition &R) {
    m.validate();
    require_carrier(m.states, R);
    // successor sets per (state, action)
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> succ;
    for (const LtsTransition &t : m.transitions)
        succ[{t.src, t.action}].push_back(t.dst);

    for (const auto &[block_id, members] : R.blocks()) {
        for (std::uint32_t s : members) {
            for (std::uint32_t t : members) {
                if (s == t)
                    continue;
                for (std::uint32_t a = 0; a < m.actions.size(); ++a) {
                    auto it = succ.find({s, a});
                    if (it == succ.end())
                        continue;
                    const auto match = succ.find({t, a});
                    for (std::uint32_t s_target : it->second) {
                        bool matched = false;
                        if (match != succ.end())
                            for (std::uint32_t t_target : match->second)
                                if (R.same_block(s_target, t_target)) {
                                    matched = true;
                                    break;
                                }
                        if (!matched)
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

bool is_lumping(const CtmcModel &m, const Partition &R) {
    m.validate();
    require_carrier(m.states, R);
    std::vector<std::map<std::uint32_t, Rational>> rates =
        rate_matrix(m.states.size(), m.transitions);
    for (const auto &[block_id, members] : R.blocks()) {
        std::map<std::uint32_t, Rational> reference = class_rates(rates[members.front()], R);
        for (std::uint32_t s : members)
            if (class_rates(rates[s], R) != reference)
                return false;
    }
    return true;
}

bool is_imc_bisimulation(const ImcModel &m, const Partition &R) {
    m.validate();
    require_carrier(m.states, R);

    // T(s, a, C): some interactive a-step from s into class C.
    auto action_classes = [&](std::uint32_t s) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> result; // (action, class)
        for (const LtsTransition &t : m.interactive)
            if (t.src == s)
                result.insert({t.action, R.block_of(t.dst)});
        return result;
    };
    std::vector<std::map<std::uint32_t, Rational>> rates =
        rate_matrix(m.states.size(), m.markovian);

    for (const auto &[block_id, members] : R.blocks()) {
        auto reference_actions = action_classes(members.front());
        auto reference_rates = class_rates(rates[members.front()], R);
        for (std::uint32_t s : members) {
            if (action_classes(s) != reference_actions)
                return false;
            if (class_rates(rates[s], R) != reference_rates)
                return false;
        }
    }
    return true;
}

bool is_pa_bisimulation(const PaModel &m, const Partition &R) {
    m.validate();
    require_carrier(m.states, R);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Distribution>> steps;
    for (const PaStep &step : m.steps)
        steps[{step.src, step.action}].push_back(make_distribution(step.distribution));

    for (const auto &[block_id, members] : R.blocks()) {
        for (std::uint32_t s : members) {
            for (std::uint32_t t : members) {
                if (s == t)
                    continue;
                for (std::uint32_t a = 0; a < m.actions.size(); ++a) {
                    auto it = steps.find({s, a});
                    if (it == steps.end())
                        continue;
                    auto candidates = steps.find({t, a});
                    for (const Distribution &pi : it->second) {
                        std::map<std::uint32_t, Rational> masses = class_masses(pi, R);
                        bool matched = false;
                        if (candidates != steps.end())
                            for (const Distribution &rho : candidates->second)
                                if (class_masses(rho, R) == masses) {
                                    matched = true;
                                    break;
                                }
                        if (!matched)
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

bool is_ma_bisimulation(const MaModel &m, const Partition &R) {
    m.validate();
    require_carrier(m.states, R);

    // Lifting of R to the distributions occurring in the immediate relation:
    // two distributions share a lifted class iff their class masses agree.
    // Steps outside the occurring set cannot affect T, so the restriction
    // preserves every T(s, a, Gamma) comparison.
    std::vector<Distribution> occurring;
    std::vector<std::size_t> step_class(m.immediate.size());
    std::vector<std::map<std::uint32_t, Rational>> class_signatures;
    for (std::size_t i = 0; i < m.immediate.size(); ++i) {
        Distribution pi = make_distribution(m.immediate[i].distribution);
        std::map<std::uint32_t, Rational> signature = class_masses(pi, R);
        std::size_t g = 0;
        while (g < class_signatures.size() && class_signatures[g] != signature)
            ++g;
        if (g == class_signatures.size()) {
            class_signatures.push_back(std::move(signature));
            occurring.push_back(std::move(pi));
        }
        step_class[i] = g;
    }

    // T(s, a, Gamma): some immediate a-step from s into the lifted class.
    auto immediate_classes = [&](std::uint32_t s) {
        std::set<std::pair<std::uint32_t, std::size_t>> result; // (action, Gamma)
        for (std::size_t i = 0; i < m.immediate.size(); ++i)
            if (m.immediate[i].src == s)
                result.insert({m.immediate[i].action, step_class[i]});
        return result;
    };
    std::vector<std::map<std::uint32_t, Rational>> rates =
        rate_matrix(m.states.size(), m.timed);

    for (const auto &[block_id, members] : R.blocks()) {
        auto reference_immediate = immediate_classes(members.front());
        auto reference_rates = class_rates(rates[members.front()], R);
        for (std::uint32_t s : members) {
            if (immediate_classes(s) != reference_immediate)
                return false;
            if (class_rates(rates[s], R) != reference_rates)
                return false;
        }
    }
    return true;
}

} // namespace futs
