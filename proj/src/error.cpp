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

#include "futs/error.hpp"

namespace futs {

const char *errc_name(errc code) {
    switch (code) {
    case errc::mixed_semiring: return "MixedSemiring";
    case errc::missing_semiring_id: return "MissingSemiringId";
    case errc::duplicate_key: return "DuplicateKey";
    case errc::bad_level: return "BadLevel";
    case errc::unmapped_key: return "UnmappedKey";
    case errc::unknown_state: return "UnknownState";
    case errc::unknown_label: return "UnknownLabel";
    case errc::level_mismatch: return "LevelMismatch";
    case errc::semiring_mismatch: return "SemiringMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::key_outside_carrier: return "KeyOutsideCarrier";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::too_many_states: return "TooManyStates";
    case errc::not_a_bisimulation: return "NotABisimulation";
    case errc::type_mismatch: return "TypeMismatch";
    case errc::not_stochastic: return "NotStochastic";
    case errc::overlapping_blocks: return "OverlappingBlocks";
    case errc::syntax_error: return "SyntaxError";
    case errc::semantic_error: return "SemanticError";
    case errc::bad_params: return "BadParams";
    }
    return "UnknownError";
}

error::error(errc code, const std::string &message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code),
      message_(message) {}

parse_error::parse_error(errc code, int line, int column, const std::string &message)
    : error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), raw_message_(message) {}

void raise(errc code, const std::string &message) {
    throw error(code, message);
}

} // namespace futs
