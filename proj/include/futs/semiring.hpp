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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "futs/error.hpp"

namespace futs {

/// Exact nonnegative rational arithmetic. Block identity during refinement
/// depends on decidable value equality, so no floating point is used anywhere
/// in the core.
using Rational = boost::multiprecision::cpp_rational;

/// The two semiring instances transition weights can live in: the Boolean
/// semiring (or/and) and the nonnegative rationals (plus/times). Extension to
/// user-defined semirings is a documented non-goal of this version; the
/// closed enumeration keeps values hashable and serializable.
enum class SemiringId : std::uint8_t {
    boolean,
    nonneg_rational,
};

const char *semiring_name(SemiringId id); // "bool" / "rat"
std::optional<SemiringId> semiring_from_name(std::string_view name);

/// One element of a semiring. Immutable; equality is exact.
class Value {
public:
    static Value boolean(bool b) { return Value(b); }
    static Value rational(Rational q);
    static Value zero(SemiringId id);
    static Value one(SemiringId id);

    SemiringId semiring() const {
        return std::holds_alternative<bool>(payload_) ? SemiringId::boolean
                                                      : SemiringId::nonneg_rational;
    }
    bool is_zero() const;
    bool as_bool() const;
    const Rational &as_rational() const;

    bool operator==(const Value &other) const = default;
    /// Total order: by semiring id, then by payload. Used only to make
    /// serialized output deterministic.
    bool operator<(const Value &other) const;

private:
    explicit Value(bool b) : payload_(b) {}
    explicit Value(Rational q) : payload_(std::move(q)) {}

    std::variant<bool, Rational> payload_;
};

Value add(const Value &a, const Value &b);
Value mul(const Value &a, const Value &b);

/// Iterated add. The empty sum needs an explicit semiring to produce its
/// zero; otherwise MissingSemiringId is raised.
Value sum(std::span<const Value> values, std::optional<SemiringId> id = std::nullopt);

std::size_t hash_value(const Value &v);

std::string to_string(const Value &v);
std::string to_string(const Rational &q); // reduced "3" or "3/4"
std::ostream &operator<<(std::ostream &os, const Value &v);

/// Accepts "3", "3/4" and "0.25" (decimals are converted exactly).
Rational parse_rational(std::string_view text);

} // namespace futs

template <> struct std::hash<futs::Value> {
    std::size_t operator()(const futs::Value &v) const { return futs::hash_value(v); }
};
