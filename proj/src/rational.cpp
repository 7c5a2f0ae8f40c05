#include "checkmate/rational.hpp"

#include <cctype>
#include <functional>

namespace checkmate {

std::optional<Rational> parse_decimal(const std::string &text) {
	if (text.empty())
		return std::nullopt;
	std::string digits;
	long frac_digits = -1;
	for (char c : text) {
		if (c == '.') {
			if (frac_digits >= 0)
				return std::nullopt;
			frac_digits = 0;
			continue;
		}
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return std::nullopt;
		digits.push_back(c);
		if (frac_digits >= 0)
			frac_digits++;
	}
	if (digits.empty())
		return std::nullopt;
	mpz_class numerator(digits, 10);
	mpz_class denominator(1);
	for (long i = 0; i < frac_digits; i++)
		denominator *= 10;
	Rational value(numerator, denominator);
	value.canonicalize();
	return value;
}

std::string decimal_string(const Rational &q) {
	mpz_class num = q.get_num();
	mpz_class den = q.get_den();
	bool negative = num < 0;
	if (negative)
		num = -num;
	// strip factors of 2 and 5; decimal terminates iff nothing remains
	mpz_class rest = den;
	unsigned twos = 0, fives = 0;
	while (rest % 2 == 0) {
		rest /= 2;
		twos++;
	}
	while (rest % 5 == 0) {
		rest /= 5;
		fives++;
	}
	if (rest != 1) {
		std::string s = num.get_str() + "/" + den.get_str();
		return negative ? "-" + s : s;
	}
	unsigned shift = twos > fives ? twos : fives;
	mpz_class scale(1);
	for (unsigned i = 0; i < shift; i++)
		scale *= 10;
	mpz_class scaled = num * (scale / den);
	std::string s = scaled.get_str();
	std::string out;
	if (shift == 0) {
		out = s + ".0";
	} else {
		while (s.size() <= shift)
			s.insert(s.begin(), '0');
		out = s.substr(0, s.size() - shift) + "." + s.substr(s.size() - shift);
	}
	return negative ? "-" + out : out;
}

std::string smt2_literal(const Rational &q) {
	if (q < 0) {
		Rational pos = -q;
		return "(- " + smt2_literal(pos) + ")";
	}
	mpz_class rest = q.get_den();
	while (rest % 2 == 0)
		rest /= 2;
	while (rest % 5 == 0)
		rest /= 5;
	if (rest != 1)
		return "(/ " + q.get_num().get_str() + ".0 " + q.get_den().get_str() + ".0)";
	return decimal_string(q);
}

std::size_t hash_rational(const Rational &q) {
	std::size_t h = std::hash<std::string>{}(q.get_str());
	return h;
}

}  // namespace checkmate
