#pragma once

#include <gmpxx.h>

#include <string>

namespace bifc {

using Rational = mpq_class;

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" with q > 0 after sign handling. Throws
// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace bifc
