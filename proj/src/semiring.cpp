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

#include "futs/semiring.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <ostream>
#include <sstream>

namespace futs {

const char *semiring_name(SemiringId id) {
    return id == SemiringId::boolean ? "bool" : "rat";
}

std::optional<SemiringId> semiring_from_name(std::string_view name) {
    if (name == "bool")
        return SemiringId::boolean;
    if (name == "rat")
        return SemiringId::nonneg_rational;
    return std::nullopt;
}

Value Value::rational(Rational q) {
    if (q < 0)
        raise(errc::bad_params, "rational semiring value must be nonnegative, got " + to_string(q));
    return Value(std::move(q));
}

Value Value::zero(SemiringId id) {
    return id == SemiringId::boolean ? Value(false) : Value(Rational(0));
}

Value Value::one(SemiringId id) {
    return id == SemiringId::boolean ? Value(true) : Value(Rational(1));
}

bool Value::is_zero() const {
    if (const bool *b = std::get_if<bool>(&payload_))
        return !*b;
    return std::get<Rational>(payload_) == 0;
}

bool Value::as_bool() const {
    if (semiring() != SemiringId::boolean)
        raise(errc::mixed_semiring, "value is not Boolean");
    return std::get<bool>(payload_);
}

const Rational &Value::as_rational() const {
    if (semiring() != SemiringId::nonneg_rational)
        raise(errc::mixed_semiring, "value is not rational");
    return std::get<Rational>(payload_);
}

bool Value::operator<(const Value &other) const {
    if (semiring() != other.semiring())
        return semiring() < other.semiring();
    if (semiring() == SemiringId::boolean)
        return !as_bool() && other.as_bool();
    return as_rational() < other.as_rational();
}

namespace {

void require_same_semiring(const Value &a, const Value &b) {
    if (a.semiring() != b.semiring())
        raise(errc::mixed_semiring, std::string("cannot combine ") + semiring_name(a.semiring()) +
                                        " with " + semiring_name(b.semiring()));
}

} // namespace

Value add(const Value &a, const Value &b) {
    require_same_semiring(a, b);
    if (a.semiring() == SemiringId::boolean)
        return Value::boolean(a.as_bool() || b.as_bool());
    return Value::rational(a.as_rational() + b.as_rational());
}

Value mul(const Value &a, const Value &b) {
    require_same_semiring(a, b);
    if (a.semiring() == SemiringId::boolean)
        return Value::boolean(a.as_bool() && b.as_bool());
    return Value::rational(a.as_rational() * b.as_rational());
}

Value sum(std::span<const Value> values, std::optional<SemiringId> id) {
    if (values.empty()) {
        if (!id)
            raise(errc::missing_semiring_id, "empty sum without a semiring");
        return Value::zero(*id);
    }
    Value acc = id ? Value::zero(*id) : Value::zero(values.front().semiring());
    for (const Value &v : values)
        acc = add(acc, v);
    return acc;
}

std::size_t hash_value(const Value &v) {
    std::size_t seed = static_cast<std::size_t>(v.semiring());
    if (v.semiring() == SemiringId::boolean) {
        boost::hash_combine(seed, v.as_bool());
    } else {
        boost::hash_combine(seed, boost::hash<Rational>{}(v.as_rational()));
    }
    return seed;
}

std::string to_string(const Rational &q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1)
        os << '/' << denominator(q);
    return os.str();
}

std::string to_string(const Value &v) {
    if (v.semiring() == SemiringId::boolean)
        return v.as_bool() ? "true" : "false";
    return to_string(v.as_rational());
}

std::ostream &operator<<(std::ostream &os, const Value &v) {
    return os << to_string(v);
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!digits(num) || !digits(den))
            raise(errc::syntax_error, "malformed rational literal '" + std::string(text) + "'");
        Rational d{boost::multiprecision::cpp_int(std::string(den))};
        if (d == 0)
            raise(errc::syntax_error, "zero denominator in '" + std::string(text) + "'");
        return Rational(boost::multiprecision::cpp_int(std::string(num)),
                        boost::multiprecision::cpp_int(std::string(den)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!digits(whole) || !digits(frac))
            raise(errc::syntax_error, "malformed decimal literal '" + std::string(text) + "'");
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        boost::multiprecision::cpp_int num =
            boost::multiprecision::cpp_int(std::string(whole)) * scale +
            boost::multiprecision::cpp_int(std::string(frac));
        return Rational(num, scale);
    }
    if (!digits(text))
        raise(errc::syntax_error, "malformed rational literal '" + std::string(text) + "'");
    return Rational(boost::multiprecision::cpp_int(std::string(text)));
}

} // namespace futs
