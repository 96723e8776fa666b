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

#include <stdexcept>
#include <string>

namespace futs {

enum class errc {
    mixed_semiring,
    missing_semiring_id,
    duplicate_key,
    bad_level,
    unmapped_key,
    unknown_state,
    unknown_label,
    level_mismatch,
    semiring_mismatch,
    index_out_of_range,
    key_outside_carrier,
    carrier_mismatch,
    too_many_states,
    not_a_bisimulation,
    type_mismatch,
    not_stochastic,
    overlapping_blocks,
    syntax_error,
    semantic_error,
    bad_params,
};

const char *errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string &message);

    errc code() const { return code_; }
    /// The message without the "<ErrcName>: " prefix that what() carries.
    const std::string &message() const { return message_; }

private:
    errc code_;
    std::string message_;
};

/// Error with a 1-based source position, raised by the model parsers.
class parse_error : public error {
public:
    parse_error(errc code, int line, int column, const std::string &message);

    int line() const { return line_; }
    int column() const { return column_; }
    /// The message without the "line:col: " prefix.
    const std::string &raw_message() const { return raw_message_; }

private:
    int line_;
    int column_;
    std::string raw_message_;
};

[[noreturn]] void raise(errc code, const std::string &message);

} // namespace futs
