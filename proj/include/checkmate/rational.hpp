#ifndef CHECKMATE_RATIONAL_HPP
#define CHECKMATE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace checkmate {

// Exact rational arithmetic everywhere; no floating point.
using Rational = mpq_class;

// Parses a decimal literal: "2", "0.5", "12.25". Signs are handled by the
// expression layer, not here.
std::optional<Rational> parse_decimal(const std::string &text);

// Renders a rational in decimal form when the denominator divides a power
// of ten ("2" -> "2.0", "1/2" -> "0.5"), otherwise as "p/q".
std::string decimal_string(const Rational &q);

// Same, but valid SMT-LIB: non-terminating values become "(/ p q)" and
// negatives "(- v)".
std::string smt2_literal(const Rational &q);

std::size_t hash_rational(const Rational &q);

}  // namespace checkmate

#endif
