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

#include "futs/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace futs {

const char *kind_name(ModelKind kind) {
    switch (kind) {
    case ModelKind::lts: return "lts";
    case ModelKind::ctmc: return "ctmc";
    case ModelKind::dtmc: return "dtmc";
    case ModelKind::imc: return "imc";
    case ModelKind::pa: return "pa";
    case ModelKind::ma: return "ma";
    case ModelKind::futs: return "futs";
    }
    return "?";
}

std::optional<ModelKind> kind_from_name(std::string_view name) {
    for (ModelKind kind : {ModelKind::lts, ModelKind::ctmc, ModelKind::dtmc,
                           ModelKind::imc, ModelKind::pa, ModelKind::ma, ModelKind::futs})
        if (name == kind_name(kind))
            return kind;
    return std::nullopt;
}

std::uint32_t ContinuationLiteral::depth() const {
    if (nested_entries.empty())
        return leaf_entries.empty() ? 0 : 1; // 0: the zero literal fits any level
    std::uint32_t inner = 0;
    for (const auto &[key, value] : nested_entries)
        inner = std::max(inner, key.depth());
    // zero keys are depth-flexible, but a nested literal is at least level 2
    return std::max(inner + 1, 2u);
}

const std::vector<std::string> &ModelDocument::state_names() const {
    return std::visit([](const auto &m) -> const std::vector<std::string> & { return m.states; },
                      model);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.';
}

bool is_identifier(std::string_view token) {
    if (token.empty() || !is_ident_start(token.front()))
        return false;
    return std::all_of(token.begin(), token.end(), is_ident_char);
}

bool is_number(std::string_view token) {
    return !token.empty() && std::isdigit(static_cast<unsigned char>(token.front()));
}

/// Character cursor over one line; all errors carry 1-based positions.
struct Cursor {
    std::string_view text;
    int line_no;
    std::size_t pos = 0;

    [[noreturn]] void fail(errc code, const std::string &message, std::size_t at) const {
        throw parse_error(code, line_no, static_cast<int>(at) + 1, message);
    }
    [[noreturn]] void fail(errc code, const std::string &message) const {
        fail(code, message, pos);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            fail(errc::syntax_error, std::string("expected '") + c + "'");
        ++pos;
    }

    std::string_view word() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && is_ident_start(text[pos])) {
            while (pos < text.size() && is_ident_char(text[pos]))
                ++pos;
        } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            while (pos < text.size() && is_number_char(text[pos]))
                ++pos;
        }
        if (start == pos)
            fail(errc::syntax_error, "expected an identifier or number");
        return text.substr(start, pos - start);
    }

    std::string_view identifier(const char *what) {
        std::size_t start = pos;
        std::string_view token = word();
        if (!is_identifier(token))
            fail(errc::syntax_error, std::string("expected ") + what, start);
        return token;
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        std::string_view token = word();
        if (!is_number(token))
            fail(errc::syntax_error, "expected a rational literal", start);
        try {
            return parse_rational(token);
        } catch (const error &e) {
            fail(errc::syntax_error, e.message(), start);
        }
    }
};

struct LineView {
    int number;
    std::string content; // comments stripped
};

std::vector<LineView> split_lines(std::string_view text) {
    std::vector<LineView> lines;
    int number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        std::string_view raw = end == std::string_view::npos
                                   ? text.substr(begin)
                                   : text.substr(begin, end - begin);
        ++number;
        std::string content(raw);
        if (auto hash = content.find('#'); hash != std::string::npos)
            content.erase(hash);
        lines.push_back(LineView{number, std::move(content)});
        if (end == std::string_view::npos)
            break;
        begin = end + 1;
    }
    return lines;
}

struct ParserState {
    ModelKind kind{};
    std::vector<std::string> states;
    std::map<std::string, std::uint32_t, std::less<>> state_index;
    std::vector<std::string> actions;
    std::map<std::string, std::uint32_t, std::less<>> action_index;
    // model parts
    std::vector<LtsTransition> lts_transitions;
    std::vector<RateTransition> rate_transitions;
    std::vector<PaStep> steps;
    // raw futs
    FutsType type;
    std::vector<RawFutsTransition> raw_transitions;
    std::set<std::tuple<std::uint32_t, std::string, std::string>> raw_assigned;

    bool wants_actions() const {
        return kind == ModelKind::lts || kind == ModelKind::imc ||
               kind == ModelKind::pa || kind == ModelKind::ma;
    }

    std::uint32_t resolve_state(Cursor &cursor, std::string_view name, std::size_t at) const {
        auto it = state_index.find(name);
        if (it == state_index.end())
            cursor.fail(errc::semantic_error,
                        "state '" + std::string(name) + "' not declared", at);
        return it->second;
    }

    std::uint32_t resolve_action(Cursor &cursor, std::string_view name, std::size_t at) const {
        auto it = action_index.find(name);
        if (it == action_index.end())
            cursor.fail(errc::semantic_error,
                        "action '" + std::string(name) + "' not declared", at);
        return it->second;
    }
};

Value parse_scalar(Cursor &cursor) {
    std::size_t start = cursor.pos;
    if (is_ident_start(cursor.peek())) {
        std::string_view token = cursor.word();
        if (token == "true")
            return Value::boolean(true);
        if (token == "false")
            return Value::boolean(false);
        cursor.fail(errc::syntax_error, "expected a semiring value", start);
    }
    return Value::rational(cursor.rational());
}

ContinuationLiteral parse_literal(Cursor &cursor);

void parse_literal_entry(Cursor &cursor, ContinuationLiteral &literal) {
    if (cursor.peek() == '{') {
        ContinuationLiteral key = parse_literal(cursor);
        cursor.expect(':');
        literal.nested_entries.emplace_back(std::move(key), parse_scalar(cursor));
    } else {
        std::string key(cursor.identifier("a state name"));
        cursor.expect(':');
        literal.leaf_entries.emplace_back(std::move(key), parse_scalar(cursor));
    }
}

ContinuationLiteral parse_literal(Cursor &cursor) {
    ContinuationLiteral literal;
    cursor.expect('{');
    if (cursor.peek() != '}') {
        parse_literal_entry(cursor, literal);
        while (cursor.peek() == ',') {
            ++cursor.pos;
            parse_literal_entry(cursor, literal);
        }
    }
    cursor.expect('}');
    if (!literal.leaf_entries.empty() && !literal.nested_entries.empty())
        cursor.fail(errc::semantic_error, "literal mixes states and nested continuations");
    return literal;
}

Distribution parse_distribution(Cursor &cursor, const ParserState &state) {
    std::size_t start = cursor.pos;
    ContinuationLiteral literal = parse_literal(cursor);
    if (!literal.nested_entries.empty())
        cursor.fail(errc::semantic_error, "a distribution maps states to probabilities", start);
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (const auto &[name, value] : literal.leaf_entries) {
        if (value.semiring() != SemiringId::nonneg_rational)
            cursor.fail(errc::semantic_error, "probabilities must be rational", start);
        entries.emplace_back(state.resolve_state(cursor, name, start), value.as_rational());
    }
    try {
        return make_distribution(std::move(entries));
    } catch (const error &e) {
        // mass != 1 is a semantic defect of the clause, not of a dtmc model
        cursor.fail(e.code() == errc::not_stochastic ? errc::semantic_error : e.code(),
                    e.message(), start);
    }
}

// Canonical form of a raw literal: zero entries dropped, keys unique and
// sorted (leaves by state declaration order, nested keys by rendering).
std::string render_literal(const ContinuationLiteral &literal,
                           const std::vector<std::string> &states);

ContinuationLiteral canonicalize_literal(Cursor &cursor, std::size_t at,
                                         ContinuationLiteral literal,
                                         const ParserState &state) {
    std::erase_if(literal.leaf_entries,
                  [](const auto &entry) { return entry.second.is_zero(); });
    std::erase_if(literal.nested_entries,
                  [](const auto &entry) { return entry.second.is_zero(); });
    for (auto &[key, value] : literal.nested_entries)
        key = canonicalize_literal(cursor, at, std::move(key), state);

    std::map<std::uint32_t, std::size_t> leaf_order;
    for (std::size_t i = 0; i < literal.leaf_entries.size(); ++i) {
        std::uint32_t index =
            state.resolve_state(cursor, literal.leaf_entries[i].first, at);
        if (!leaf_order.emplace(index, i).second)
            cursor.fail(errc::duplicate_key,
                        "state '" + literal.leaf_entries[i].first + "' listed twice", at);
    }
    std::vector<std::pair<std::string, Value>> leaves;
    leaves.reserve(leaf_order.size());
    for (const auto &[index, i] : leaf_order)
        leaves.push_back(std::move(literal.leaf_entries[i]));
    literal.leaf_entries = std::move(leaves);

    std::map<std::string, std::size_t> nested_order;
    for (std::size_t i = 0; i < literal.nested_entries.size(); ++i) {
        std::string rendered = render_literal(literal.nested_entries[i].first, state.states);
        if (!nested_order.emplace(std::move(rendered), i).second)
            cursor.fail(errc::duplicate_key, "continuation key listed twice", at);
    }
    std::vector<std::pair<ContinuationLiteral, Value>> nested;
    nested.reserve(nested_order.size());
    for (const auto &[rendered, i] : nested_order)
        nested.push_back(std::move(literal.nested_entries[i]));
    literal.nested_entries = std::move(nested);
    return literal;
}

void parse_declaration(Cursor &cursor, ParserState &state, std::string_view directive) {
    if (directive == "states") {
        while (!cursor.at_end()) {
            std::size_t at = cursor.pos;
            std::string name(cursor.identifier("a state name"));
            if (!state.state_index.emplace(name, state.states.size()).second)
                cursor.fail(errc::semantic_error, "state '" + name + "' declared twice", at);
            state.states.push_back(std::move(name));
        }
        return;
    }
    if (directive == "actions") {
        if (!state.wants_actions())
            cursor.fail(errc::semantic_error,
                        std::string(kind_name(state.kind)) + " models have no actions");
        while (!cursor.at_end()) {
            std::size_t at = cursor.pos;
            std::string name(cursor.identifier("an action name"));
            if (name == delay_label)
                cursor.fail(errc::semantic_error,
                            std::string("'") + delay_label + "' is reserved for delay", at);
            if (!state.action_index.emplace(name, state.actions.size()).second)
                cursor.fail(errc::semantic_error, "action '" + name + "' declared twice", at);
            state.actions.push_back(std::move(name));
        }
        return;
    }
    if (directive == "component") {
        if (state.kind != ModelKind::futs)
            cursor.fail(errc::semantic_error, "component declarations need kind futs");
        std::size_t at = cursor.pos;
        if (cursor.identifier("'labels'") != "labels")
            cursor.fail(errc::syntax_error, "expected 'labels'", at);
        FutsComponent component;
        // the keyword 'semirings' terminates the label list
        while (true) {
            std::size_t mark = cursor.pos;
            std::string_view token = cursor.at_end() ? std::string_view{} : cursor.word();
            if (token == "semirings") {
                break;
            }
            if (token.empty())
                cursor.fail(errc::syntax_error, "expected 'semirings'", mark);
            component.labels.emplace_back(token);
        }
        while (!cursor.at_end()) {
            std::size_t mark = cursor.pos;
            std::string_view token = cursor.identifier("a semiring name");
            std::optional<SemiringId> id = semiring_from_name(token);
            if (!id)
                cursor.fail(errc::semantic_error,
                            "unknown semiring '" + std::string(token) + "'", mark);
            component.semirings.push_back(*id);
        }
        if (component.labels.empty())
            cursor.fail(errc::semantic_error, "component needs at least one label");
        if (component.semirings.empty())
            cursor.fail(errc::semantic_error, "component needs at least one semiring");
        state.type.components.push_back(std::move(component));
        return;
    }
    cursor.fail(errc::syntax_error, "unknown directive '" + std::string(directive) + "'");
}

void check_literal_semirings(Cursor &cursor, std::size_t at,
                             const ContinuationLiteral &literal,
                             const FutsComponent &shape, std::uint32_t level);

void parse_transition(Cursor &cursor, ParserState &state) {
    // trans [component] SRC -LABEL-> TARGET
    std::optional<std::uint32_t> component;
    cursor.skip_ws();
    std::size_t src_at = cursor.pos;
    std::string_view src_token = cursor.word();
    if (state.kind == ModelKind::futs && is_number(src_token)) {
        if (!std::all_of(src_token.begin(), src_token.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            cursor.fail(errc::syntax_error, "component index must be an integer", src_at);
        std::size_t index = std::stoul(std::string(src_token));
        if (index < 1 || index > state.type.components.size())
            cursor.fail(errc::semantic_error,
                        "component index out of range", src_at);
        component = static_cast<std::uint32_t>(index - 1);
        src_at = cursor.pos;
        src_token = cursor.word();
    }
    if (!is_identifier(src_token))
        cursor.fail(errc::syntax_error, "expected a state name", src_at);
    std::uint32_t src = state.resolve_state(cursor, src_token, src_at);

    cursor.expect('-');
    std::size_t label_at = cursor.pos;
    std::size_t arrow = cursor.text.find("->", cursor.pos);
    if (arrow == std::string_view::npos)
        cursor.fail(errc::syntax_error, "expected '-label->'");
    std::string label(cursor.text.substr(cursor.pos, arrow - cursor.pos));
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
        label.pop_back();
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
        label.erase(label.begin());
    cursor.pos = arrow + 2;
    if (!(is_identifier(label) || is_number(label)))
        cursor.fail(errc::syntax_error, "transition label must be an action or a rate",
                    label_at);

    switch (state.kind) {
    case ModelKind::lts: {
        if (!is_identifier(label))
            cursor.fail(errc::semantic_error, "lts transitions carry actions", label_at);
        std::uint32_t action = state.resolve_action(cursor, label, label_at);
        std::size_t dst_at = cursor.pos;
        std::uint32_t dst = state.resolve_state(cursor, cursor.identifier("a state name"), dst_at);
        state.lts_transitions.push_back({src, action, dst});
        break;
    }
    case ModelKind::ctmc:
    case ModelKind::dtmc: {
        if (!is_number(label))
            cursor.fail(errc::semantic_error, "Markov chain transitions carry rates",
                        label_at);
        Rational rate = parse_rational(label);
        if (rate <= 0)
            cursor.fail(errc::semantic_error, "rate must be > 0", label_at);
        std::size_t dst_at = cursor.pos;
        std::uint32_t dst = state.resolve_state(cursor, cursor.identifier("a state name"), dst_at);
        state.rate_transitions.push_back({src, std::move(rate), dst});
        break;
    }
    case ModelKind::imc: {
        std::size_t dst_at = cursor.pos;
        std::uint32_t dst = state.resolve_state(cursor, cursor.identifier("a state name"), dst_at);
        if (is_number(label)) {
            Rational rate = parse_rational(label);
            if (rate <= 0)
                cursor.fail(errc::semantic_error, "rate must be > 0", label_at);
            state.rate_transitions.push_back({src, std::move(rate), dst});
        } else {
            std::uint32_t action = state.resolve_action(cursor, label, label_at);
            state.lts_transitions.push_back({src, action, dst});
        }
        break;
    }
    case ModelKind::pa:
    case ModelKind::ma: {
        if (is_number(label)) {
            if (state.kind == ModelKind::pa)
                cursor.fail(errc::semantic_error, "pa transitions carry actions", label_at);
            Rational rate = parse_rational(label);
            if (rate <= 0)
                cursor.fail(errc::semantic_error, "rate must be > 0", label_at);
            std::size_t dst_at = cursor.pos;
            std::uint32_t dst =
                state.resolve_state(cursor, cursor.identifier("a state name"), dst_at);
            state.rate_transitions.push_back({src, std::move(rate), dst});
            break;
        }
        std::uint32_t action = state.resolve_action(cursor, label, label_at);
        Distribution distribution;
        if (cursor.peek() == '{') {
            distribution = parse_distribution(cursor, state);
        } else {
            // plain target as Dirac sugar
            std::size_t dst_at = cursor.pos;
            std::uint32_t dst =
                state.resolve_state(cursor, cursor.identifier("a state name"), dst_at);
            distribution = {{dst, Rational(1)}};
        }
        state.steps.push_back(PaStep{src, action, std::move(distribution)});
        break;
    }
    case ModelKind::futs: {
        if (state.type.components.empty())
            cursor.fail(errc::semantic_error, "no components declared");
        if (!component) {
            std::vector<std::uint32_t> hits;
            for (std::uint32_t i = 0; i < state.type.components.size(); ++i) {
                const auto &labels = state.type.components[i].labels;
                if (std::find(labels.begin(), labels.end(), label) != labels.end())
                    hits.push_back(i);
            }
            if (hits.empty())
                cursor.fail(errc::semantic_error,
                            "label '" + label + "' not in any component", label_at);
            if (hits.size() > 1)
                cursor.fail(errc::semantic_error,
                            "label '" + label + "' is ambiguous; give a component index",
                            label_at);
            component = hits.front();
        } else {
            const auto &labels = state.type.components[*component].labels;
            if (std::find(labels.begin(), labels.end(), label) == labels.end())
                cursor.fail(errc::semantic_error,
                            "label '" + label + "' not in component " +
                                std::to_string(*component + 1),
                            label_at);
        }
        const FutsComponent &shape = state.type.components[*component];
        std::size_t value_at = cursor.pos;
        ContinuationLiteral literal =
            canonicalize_literal(cursor, value_at, parse_literal(cursor), state);
        std::uint32_t depth = literal.depth();
        if (depth != 0 && depth != shape.depth())
            cursor.fail(errc::level_mismatch,
                        "literal depth " + std::to_string(depth) +
                            " does not match component depth " +
                            std::to_string(shape.depth()),
                        value_at);
        if (depth == 0)
            break; // zero continuation is the default
        check_literal_semirings(cursor, value_at, literal, shape, shape.depth());
        auto key = std::make_tuple(*component, std::string(state.states[src]), label);
        if (!state.raw_assigned.insert(key).second)
            cursor.fail(errc::duplicate_key, "transition assigned twice", src_at);
        state.raw_transitions.push_back(
            RawFutsTransition{*component, state.states[src], label, std::move(literal)});
        break;
    }
    }
    if (!cursor.at_end())
        cursor.fail(errc::syntax_error, "trailing input after transition");
}

// Scalars inside a raw literal must live in the semiring assigned to their
// level; checked here so the error carries a position.
void check_literal_semirings(Cursor &cursor, std::size_t at,
                             const ContinuationLiteral &literal,
                             const FutsComponent &shape, std::uint32_t level) {
    SemiringId expected = shape.semirings[level - 1];
    for (const auto &[name, value] : literal.leaf_entries) {
        if (level != 1)
            cursor.fail(errc::level_mismatch, "state keys only appear at level 1", at);
        if (value.semiring() != expected)
            cursor.fail(errc::semiring_mismatch,
                        std::string("level-") + std::to_string(level) + " values must be " +
                            semiring_name(expected),
                        at);
    }
    for (const auto &[key, value] : literal.nested_entries) {
        if (level == 1)
            cursor.fail(errc::level_mismatch, "nested keys cannot appear at level 1", at);
        if (value.semiring() != expected)
            cursor.fail(errc::semiring_mismatch,
                        std::string("level-") + std::to_string(level) + " values must be " +
                            semiring_name(expected),
                        at);
        if (key.depth() != 0)
            check_literal_semirings(cursor, at, key, shape, level - 1);
    }
}

} // namespace

ModelDocument parse_model(std::string_view text) {
    std::vector<LineView> lines = split_lines(text);
    ParserState state;
    bool have_kind = false;

    for (const LineView &line : lines) {
        Cursor cursor{line.content, line.number};
        if (cursor.at_end())
            continue;
        std::size_t at = cursor.pos;
        std::string_view directive = cursor.identifier("a directive");
        if (!have_kind) {
            if (directive != "kind")
                cursor.fail(errc::syntax_error, "the first directive must be 'kind'", at);
            std::size_t name_at = cursor.pos;
            std::string_view name = cursor.identifier("a model kind");
            std::optional<ModelKind> kind = kind_from_name(name);
            if (!kind)
                cursor.fail(errc::semantic_error,
                            "unknown model kind '" + std::string(name) + "'", name_at);
            state.kind = *kind;
            have_kind = true;
            if (!cursor.at_end())
                cursor.fail(errc::syntax_error, "trailing input after kind");
            continue;
        }
        if (directive == "kind")
            cursor.fail(errc::semantic_error, "kind declared twice", at);
        if (directive == "trans")
            parse_transition(cursor, state);
        else
            parse_declaration(cursor, state, directive);
    }
    if (!have_kind)
        throw parse_error(errc::syntax_error, 1, 1, "empty input; expected 'kind'");

    auto finish = [&](auto model) {
        try {
            model.validate();
        } catch (const parse_error &) {
            throw;
        } catch (const error &e) {
            throw parse_error(e.code(), 1, 1, e.message());
        }
        ModelDocument doc{state.kind, std::move(model)};
        return doc;
    };

    switch (state.kind) {
    case ModelKind::lts:
        return finish(LtsModel{std::move(state.states), std::move(state.actions),
                               std::move(state.lts_transitions)});
    case ModelKind::ctmc:
    case ModelKind::dtmc:
        return finish(CtmcModel{std::move(state.states), std::move(state.rate_transitions),
                                state.kind == ModelKind::dtmc});
    case ModelKind::imc:
        return finish(ImcModel{std::move(state.states), std::move(state.actions),
                               std::move(state.lts_transitions),
                               std::move(state.rate_transitions)});
    case ModelKind::pa:
        return finish(PaModel{std::move(state.states), std::move(state.actions),
                              std::move(state.steps)});
    case ModelKind::ma:
        return finish(MaModel{std::move(state.states), std::move(state.actions),
                              std::move(state.steps), std::move(state.rate_transitions)});
    case ModelKind::futs: {
        try {
            state.type.validate();
        } catch (const error &e) {
            throw parse_error(e.code(), 1, 1, e.message());
        }
        ModelDocument doc{state.kind,
                          RawFutsModel{std::move(state.states), std::move(state.type),
                                       std::move(state.raw_transitions)}};
        return doc;
    }
    }
    throw parse_error(errc::syntax_error, 1, 1, "unreachable");
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string join_names(const std::vector<std::string> &names) {
    std::string out;
    for (const std::string &name : names) {
        out += ' ';
        out += name;
    }
    return out;
}

void emit_lts_transitions(std::ostringstream &os, const std::vector<std::string> &states,
                          const std::vector<std::string> &actions,
                          std::vector<LtsTransition> transitions) {
    std::sort(transitions.begin(), transitions.end());
    for (const LtsTransition &t : transitions)
        os << "trans " << states[t.src] << " -" << actions[t.action] << "-> "
           << states[t.dst] << "\n";
}

void emit_rate_transitions(std::ostringstream &os, const std::vector<std::string> &states,
                           std::vector<RateTransition> transitions) {
    std::sort(transitions.begin(), transitions.end(),
              [](const RateTransition &a, const RateTransition &b) {
                  return std::tie(a.src, a.dst, a.rate) < std::tie(b.src, b.dst, b.rate);
              });
    for (const RateTransition &t : transitions)
        os << "trans " << states[t.src] << " -" << to_string(t.rate) << "-> "
           << states[t.dst] << "\n";
}

std::string render_distribution(const Distribution &distribution,
                                const std::vector<std::string> &states) {
    std::string out = "{";
    bool first = true;
    for (const auto &[state, probability] : distribution) {
        if (!first)
            out += ", ";
        first = false;
        out += states[state];
        out += ':';
        out += to_string(probability);
    }
    out += '}';
    return out;
}

void emit_steps(std::ostringstream &os, const std::vector<std::string> &states,
                const std::vector<std::string> &actions, std::vector<PaStep> steps) {
    for (PaStep &step : steps)
        step.distribution = make_distribution(std::move(step.distribution));
    std::sort(steps.begin(), steps.end(), [](const PaStep &a, const PaStep &b) {
        return std::tie(a.src, a.action, a.distribution) <
               std::tie(b.src, b.action, b.distribution);
    });
    for (const PaStep &step : steps)
        os << "trans " << states[step.src] << " -" << actions[step.action] << "-> "
           << render_distribution(step.distribution, states) << "\n";
}

} // namespace

namespace {

std::string render_literal(const ContinuationLiteral &literal,
                           const std::vector<std::string> &states) {
    std::string out = "{";
    bool first = true;
    for (const auto &[name, value] : literal.leaf_entries) {
        if (!first)
            out += ", ";
        first = false;
        out += name;
        out += ':';
        out += to_string(value);
    }
    for (const auto &[key, value] : literal.nested_entries) {
        if (!first)
            out += ", ";
        first = false;
        out += render_literal(key, states);
        out += ':';
        out += to_string(value);
    }
    out += '}';
    return out;
}

} // namespace

std::string serialize_model(const ModelDocument &doc) {
    std::ostringstream os;
    os << "kind " << kind_name(doc.kind) << "\n";
    os << "states" << join_names(doc.state_names()) << "\n";

    std::visit(
        [&](const auto &model) {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, LtsModel>) {
                os << "actions" << join_names(model.actions) << "\n";
                emit_lts_transitions(os, model.states, model.actions, model.transitions);
            } else if constexpr (std::is_same_v<M, CtmcModel>) {
                emit_rate_transitions(os, model.states, model.transitions);
            } else if constexpr (std::is_same_v<M, ImcModel>) {
                os << "actions" << join_names(model.actions) << "\n";
                emit_lts_transitions(os, model.states, model.actions, model.interactive);
                emit_rate_transitions(os, model.states, model.markovian);
            } else if constexpr (std::is_same_v<M, PaModel>) {
                os << "actions" << join_names(model.actions) << "\n";
                emit_steps(os, model.states, model.actions, model.steps);
            } else if constexpr (std::is_same_v<M, MaModel>) {
                os << "actions" << join_names(model.actions) << "\n";
                emit_steps(os, model.states, model.actions, model.immediate);
                emit_rate_transitions(os, model.states, model.timed);
            } else {
                static_assert(std::is_same_v<M, RawFutsModel>);
                for (const FutsComponent &component : model.type.components) {
                    os << "component labels" << join_names(component.labels)
                       << " semirings";
                    for (SemiringId id : component.semirings)
                        os << ' ' << semiring_name(id);
                    os << "\n";
                }
                std::vector<const RawFutsTransition *> ordered;
                for (const RawFutsTransition &t : model.transitions)
                    ordered.push_back(&t);
                std::map<std::string, std::uint32_t> state_order;
                for (std::uint32_t i = 0; i < model.states.size(); ++i)
                    state_order.emplace(model.states[i], i);
                auto label_order = [&](const RawFutsTransition &t) {
                    const auto &labels = model.type.components[t.component].labels;
                    return std::find(labels.begin(), labels.end(), t.label) - labels.begin();
                };
                std::sort(ordered.begin(), ordered.end(),
                          [&](const RawFutsTransition *a, const RawFutsTransition *b) {
                              auto ka = std::make_tuple(a->component,
                                                        state_order.at(a->state),
                                                        label_order(*a));
                              auto kb = std::make_tuple(b->component,
                                                        state_order.at(b->state),
                                                        label_order(*b));
                              return ka < kb;
                          });
                for (const RawFutsTransition *t : ordered)
                    os << "trans " << (t->component + 1) << ' ' << t->state << " -"
                       << t->label << "-> " << render_literal(t->value, model.states)
                       << "\n";
            }
        },
        doc.model);
    return os.str();
}

// ---------------------------------------------------------------------------
// Encoding raw documents and decoding FuTS back to documents

namespace {

Continuation literal_to_continuation(const ContinuationLiteral &literal,
                                     const FutsComponent &shape, std::uint32_t level,
                                     const std::map<std::string, std::uint32_t> &state_index,
                                     ContinuationRegistry &registry) {
    if (level < 1 || (!literal.leaf_entries.empty() && level != 1) ||
        (!literal.nested_entries.empty() && level == 1))
        raise(errc::level_mismatch, "literal nesting does not match the component depth");
    SemiringId semiring = shape.semirings[level - 1];
    std::vector<Continuation::Entry> entries;
    for (const auto &[name, value] : literal.leaf_entries) {
        auto it = state_index.find(name);
        if (it == state_index.end())
            raise(errc::unknown_state, "state '" + name + "' not declared");
        entries.emplace_back(KeyRef::state(it->second), value);
    }
    for (const auto &[key, value] : literal.nested_entries) {
        Continuation inner =
            literal_to_continuation(key, shape, level - 1, state_index, registry);
        entries.emplace_back(KeyRef::continuation(registry.intern(inner)), value);
    }
    return Continuation::make(semiring, level, std::move(entries));
}

Futs encode_raw(const RawFutsModel &model) {
    model.type.validate();
    std::map<std::string, std::uint32_t> state_index;
    for (std::uint32_t i = 0; i < model.states.size(); ++i)
        state_index.emplace(model.states[i], i);
    auto registry = std::make_shared<ContinuationRegistry>();
    std::vector<ThetaAssignment> assignments;
    for (const RawFutsTransition &transition : model.transitions) {
        const FutsComponent &shape = model.type.components.at(transition.component);
        assignments.push_back(ThetaAssignment{
            transition.component, transition.state, transition.label,
            literal_to_continuation(transition.value, shape, shape.depth(), state_index,
                                    *registry)});
    }
    return build_futs(model.type, model.states, std::move(assignments), registry);
}

ContinuationLiteral continuation_to_literal(const Continuation &continuation,
                                            const Futs &futs) {
    ContinuationLiteral literal;
    for (const auto &[key, value] : continuation.entries()) {
        if (continuation.level() == 1) {
            literal.leaf_entries.emplace_back(futs.state_name(key.index), value);
        } else {
            literal.nested_entries.emplace_back(
                continuation_to_literal(
                    futs.registry().at(continuation.level() - 1, key.index), futs),
                value);
        }
    }
    return literal;
}

void require_shape(bool ok) {
    if (!ok)
        raise(errc::type_mismatch, "FuTS type does not match the requested model kind");
}

} // namespace

Futs encode_document(const ModelDocument &doc) {
    return std::visit(
        [&](const auto &model) -> Futs {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, LtsModel>)
                return encode_lts(model);
            else if constexpr (std::is_same_v<M, CtmcModel>)
                return encode_ctmc(model);
            else if constexpr (std::is_same_v<M, ImcModel>)
                return encode_imc(model);
            else if constexpr (std::is_same_v<M, PaModel>)
                return encode_pa(model);
            else if constexpr (std::is_same_v<M, MaModel>)
                return encode_ma(model);
            else
                return encode_raw(model);
        },
        doc.model);
}

std::optional<bool> concrete_is_bisimulation(const ModelDocument &doc, const Partition &R) {
    return std::visit(
        [&](const auto &model) -> std::optional<bool> {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, LtsModel>)
                return is_lts_bisimulation(model, R);
            else if constexpr (std::is_same_v<M, CtmcModel>)
                return is_lumping(model, R);
            else if constexpr (std::is_same_v<M, ImcModel>)
                return is_imc_bisimulation(model, R);
            else if constexpr (std::is_same_v<M, PaModel>)
                return is_pa_bisimulation(model, R);
            else if constexpr (std::is_same_v<M, MaModel>)
                return is_ma_bisimulation(model, R);
            else
                return std::nullopt;
        },
        doc.model);
}

std::optional<Partition> brute_force_concrete_coarsest(const ModelDocument &doc,
                                                       std::uint32_t max_states) {
    if (std::holds_alternative<RawFutsModel>(doc.model))
        return std::nullopt;
    const std::uint32_t n = static_cast<std::uint32_t>(doc.state_names().size());
    if (n > max_states)
        raise(errc::too_many_states, std::to_string(n) + " states exceed the cap of " +
                                         std::to_string(max_states));
    std::vector<std::uint32_t> carrier(n);
    for (std::uint32_t i = 0; i < n; ++i)
        carrier[i] = i;

    std::vector<Partition> passing;
    for (const std::vector<std::uint32_t> &assignment : all_set_partitions(n)) {
        Partition candidate = partition_from_assignment(carrier, assignment);
        if (*concrete_is_bisimulation(doc, candidate))
            passing.push_back(std::move(candidate));
    }
    const Partition *best = &passing.front();
    for (const Partition &candidate : passing)
        if (candidate.block_count() < best->block_count())
            best = &candidate;
    for (const Partition &candidate : passing)
        if (!refines(candidate, *best))
            raise(errc::not_a_bisimulation,
                  "no unique coarsest relation; lattice property violated");
    return *best;
}

std::string serialize_partition(const Partition &partition,
                                std::span<const std::string> names) {
    for (std::uint32_t element : partition.carrier())
        if (element >= names.size())
            raise(errc::index_out_of_range, "no name for element " + std::to_string(element));
    std::string out;
    for (const auto &[block_id, members] : partition.blocks()) {
        out += '{';
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += names[members[i]];
        }
        out += "}\n";
    }
    return out;
}

Partition parse_relation(std::string_view text, std::span<const std::string> states) {
    std::map<std::string_view, std::uint32_t> index;
    for (std::uint32_t i = 0; i < states.size(); ++i)
        index.emplace(states[i], i);

    std::vector<std::vector<std::uint32_t>> blocks;
    std::set<std::uint32_t> mentioned;
    for (const LineView &line : split_lines(text)) {
        Cursor cursor{line.content, line.number};
        if (cursor.at_end())
            continue;
        cursor.expect('{');
        std::vector<std::uint32_t> block;
        while (cursor.peek() != '}') {
            std::size_t at = cursor.pos;
            std::string_view name = cursor.identifier("a state name");
            auto it = index.find(name);
            if (it == index.end())
                cursor.fail(errc::unknown_state,
                            "state '" + std::string(name) + "' not declared", at);
            if (!mentioned.insert(it->second).second)
                cursor.fail(errc::overlapping_blocks,
                            "state '" + std::string(name) + "' appears twice", at);
            block.push_back(it->second);
        }
        cursor.expect('}');
        if (!cursor.at_end())
            cursor.fail(errc::syntax_error, "trailing input after block");
        if (!block.empty())
            blocks.push_back(std::move(block));
    }
    std::vector<std::uint32_t> carrier;
    for (std::uint32_t i = 0; i < states.size(); ++i) {
        carrier.push_back(i);
        if (!mentioned.contains(i))
            blocks.push_back({i});
    }
    return Partition::from_blocks(std::move(carrier), std::move(blocks));
}

std::string render_continuation(const Continuation &continuation, const Futs &futs) {
    return render_literal(continuation_to_literal(continuation, futs), futs.states());
}

ModelDocument decode_futs(const Futs &futs, ModelKind kind) {
    const FutsType &type = futs.type();
    auto is_bool_component = [&](std::uint32_t i) {
        return type.components[i].semirings == std::vector<SemiringId>{SemiringId::boolean};
    };
    auto is_rate_component = [&](std::uint32_t i) {
        return type.components[i].semirings ==
                   std::vector<SemiringId>{SemiringId::nonneg_rational} &&
               type.components[i].labels == std::vector<std::string>{delay_label};
    };
    auto is_nested_component = [&](std::uint32_t i) {
        return type.components[i].semirings ==
               std::vector<SemiringId>{SemiringId::nonneg_rational, SemiringId::boolean};
    };

    auto lts_part = [&](std::uint32_t component) {
        std::vector<LtsTransition> transitions;
        for (std::uint32_t s = 0; s < futs.state_count(); ++s)
            for (std::uint32_t a = 0; a < futs.label_count(component); ++a)
                for (const auto &[key, value] : futs.theta(component, s, a).entries())
                    transitions.push_back({s, a, key.index});
        return transitions;
    };
    auto rate_part = [&](std::uint32_t component) {
        std::vector<RateTransition> transitions;
        for (std::uint32_t s = 0; s < futs.state_count(); ++s)
            for (const auto &[key, value] : futs.theta(component, s, 0).entries())
                transitions.push_back({s, value.as_rational(), key.index});
        return transitions;
    };
    auto step_part = [&](std::uint32_t component) {
        std::vector<PaStep> steps;
        for (std::uint32_t s = 0; s < futs.state_count(); ++s)
            for (std::uint32_t a = 0; a < futs.label_count(component); ++a)
                for (const auto &[key, value] : futs.theta(component, s, a).entries()) {
                    Distribution distribution;
                    for (const auto &[state_key, probability] :
                         futs.registry().at(1, key.index).entries())
                        distribution.emplace_back(state_key.index,
                                                  probability.as_rational());
                    steps.push_back(PaStep{s, a, std::move(distribution)});
                }
        return steps;
    };

    switch (kind) {
    case ModelKind::lts: {
        require_shape(type.components.size() == 1 && is_bool_component(0));
        return ModelDocument{
            kind, LtsModel{futs.states(), type.components[0].labels, lts_part(0)}};
    }
    case ModelKind::ctmc:
    case ModelKind::dtmc: {
        require_shape(type.components.size() == 1 && is_rate_component(0));
        return ModelDocument{
            kind, CtmcModel{futs.states(), rate_part(0), kind == ModelKind::dtmc}};
    }
    case ModelKind::imc: {
        require_shape(type.components.size() == 2 && is_bool_component(0) &&
                      is_rate_component(1));
        return ModelDocument{kind, ImcModel{futs.states(), type.components[0].labels,
                                            lts_part(0), rate_part(1)}};
    }
    case ModelKind::pa: {
        require_shape(type.components.size() == 1 && is_nested_component(0));
        return ModelDocument{
            kind, PaModel{futs.states(), type.components[0].labels, step_part(0)}};
    }
    case ModelKind::ma: {
        require_shape(type.components.size() == 2 && is_nested_component(0) &&
                      is_rate_component(1));
        return ModelDocument{kind, MaModel{futs.states(), type.components[0].labels,
                                           step_part(0), rate_part(1)}};
    }
    case ModelKind::futs: {
        RawFutsModel model{futs.states(), type, {}};
        for (std::uint32_t i = 0; i < futs.component_count(); ++i)
            for (std::uint32_t s = 0; s < futs.state_count(); ++s)
                for (std::uint32_t l = 0; l < futs.label_count(i); ++l) {
                    const Continuation &value = futs.theta(i, s, l);
                    if (value.is_zero())
                        continue;
                    model.transitions.push_back(
                        RawFutsTransition{i, futs.state_name(s),
                                          type.components[i].labels[l],
                                          continuation_to_literal(value, futs)});
                }
        return ModelDocument{kind, std::move(model)};
    }
    }
    raise(errc::bad_params, "unreachable");
}

} // namespace futs
