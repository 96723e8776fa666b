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

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "futs/models.hpp"

namespace futs {

enum class ModelKind { lts, ctmc, dtmc, imc, pa, ma, futs };

const char *kind_name(ModelKind kind);
std::optional<ModelKind> kind_from_name(std::string_view name);

/// Parsed continuation literal of a raw `futs` document, prior to state and
/// semiring resolution. Level-1 literals map state names, deeper literals map
/// nested literals.
struct ContinuationLiteral {
    std::vector<std::pair<std::string, Value>> leaf_entries;
    std::vector<std::pair<ContinuationLiteral, Value>> nested_entries;

    std::uint32_t depth() const;
    bool operator==(const ContinuationLiteral &) const = default;
};

struct RawFutsTransition {
    std::uint32_t component;
    std::string state;
    std::string label;
    ContinuationLiteral value;
};

/// A direct description of a FuTS: explicit type descriptor plus transition
/// clauses with (possibly nested) continuation literals.
struct RawFutsModel {
    std::vector<std::string> states;
    FutsType type;
    std::vector<RawFutsTransition> transitions;
};

struct ModelDocument {
    ModelKind kind;
    std::variant<LtsModel, CtmcModel, ImcModel, PaModel, MaModel, RawFutsModel> model;

    const std::vector<std::string> &state_names() const;
};

/// Parses the line-oriented model format:
///
///   kind lts                    # lts ctmc dtmc imc pa ma futs
///   states p q
///   actions a b                 # absent for ctmc/dtmc
///   trans p -a-> q              # action step (lts, imc)
///   trans p -3/2-> q            # timed step, positive rational (ctmc dtmc imc ma)
///   trans p -a-> {q:1/2, r:1/2} # probabilistic step (pa, ma)
///
/// and for kind futs component declarations plus nested literals:
///
///   component labels a b semirings rat bool
///   trans 1 p -a-> {{q:1/2, r:1/2}:true}
///
/// Reports the first error with its 1-based line and column.
ModelDocument parse_model(std::string_view text);

/// Canonical serialization; parse(serialize(doc)) reproduces the document and
/// serialize(parse(text)) is byte-identical for canonical inputs.
std::string serialize_model(const ModelDocument &doc);

Futs encode_document(const ModelDocument &doc);

/// Concrete-notion verdict for the document's kind; nullopt for raw futs
/// documents, which have no concrete counterpart.
std::optional<bool> concrete_is_bisimulation(const ModelDocument &doc, const Partition &R);

/// Coarsest relation accepted by the kind's concrete checker, by exhaustive
/// enumeration; nullopt for raw futs documents.
std::optional<Partition> brute_force_concrete_coarsest(const ModelDocument &doc,
                                                       std::uint32_t max_states);

/// One block per line, members in declaration order, blocks ordered by their
/// smallest member: "{s0}\n{s1 s2}\n".
std::string serialize_partition(const Partition &partition,
                                std::span<const std::string> names);

/// Inverse of serialize_partition; states not mentioned become singletons.
Partition parse_relation(std::string_view text, std::span<const std::string> states);

/// Reads a FuTS back into a document of the given kind (used to print
/// quotients in the input's format).
ModelDocument decode_futs(const Futs &futs, ModelKind kind);

/// Literal syntax of a registered continuation, e.g. "{u:1/2, v:1/2}".
std::string render_continuation(const Continuation &continuation, const Futs &futs);

} // namespace futs
