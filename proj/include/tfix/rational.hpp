#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tfix {

using Rational = mpq_class;

/// Parses "a/b" (b > 0) or a finite decimal such as "0.6" exactly.
/// Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b" in lowest terms, or "a" for integers.
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);

}  // namespace tfix
