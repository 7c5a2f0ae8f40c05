#include "checkmate/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace checkmate {

unsigned SymbolTable::add(const std::string &name, SymbolKind kind) {
	if (!valid_identifier(name))
		throw std::invalid_argument("invalid symbol name '" + name + "'");
	if (by_name_.count(name))
		throw std::invalid_argument("duplicate symbol '" + name + "'");
	unsigned index = static_cast<unsigned>(symbols_.size());
	symbols_.push_back(Symbol{name, kind});
	by_name_.emplace(name, index);
	return index;
}

std::optional<unsigned> SymbolTable::find(const std::string &name) const {
	auto it = by_name_.find(name);
	if (it == by_name_.end())
		return std::nullopt;
	return it->second;
}

bool SymbolTable::valid_identifier(const std::string &name) {
	if (name.empty())
		return false;
	if (std::isdigit(static_cast<unsigned char>(name[0])))
		return false;
	for (char c : name)
		if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
			return false;
	return true;
}

Monomial Monomial::times(const Monomial &other) const {
	Monomial result;
	result.factors.resize(factors.size() + other.factors.size());
	std::merge(factors.begin(), factors.end(), other.factors.begin(),
	           other.factors.end(), result.factors.begin());
	return result;
}

bool Monomial::operator<(const Monomial &other) const {
	if (factors.size() != other.factors.size())
		return factors.size() > other.factors.size();
	return factors < other.factors;
}

Polynomial Polynomial::constant(const Rational &value) {
	Polynomial p;
	if (value != 0)
		p.terms_.emplace_back(Monomial{}, value);
	return p;
}

Polynomial Polynomial::variable(unsigned symbol) {
	Polynomial p;
	p.terms_.emplace_back(Monomial{{symbol}}, Rational(1));
	return p;
}

bool Polynomial::is_constant() const {
	return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

Rational Polynomial::constant_value() const {
	assert(is_constant());
	return terms_.empty() ? Rational(0) : terms_[0].second;
}

unsigned Polynomial::degree() const {
	unsigned d = 0;
	for (const auto &[m, c] : terms_)
		d = std::max(d, m.degree());
	return d;
}

Polynomial merge(const Polynomial &a, const Polynomial &b, bool negate_second) {
	Polynomial out;
	std::size_t i = 0, j = 0;
	while (i < a.terms_.size() || j < b.terms_.size()) {
		if (j == b.terms_.size() ||
		    (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
			out.terms_.push_back(a.terms_[i++]);
		} else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
			out.terms_.push_back(b.terms_[j]);
			if (negate_second)
				out.terms_.back().second = -out.terms_.back().second;
			j++;
		} else {
			Rational c = negate_second ? Rational(a.terms_[i].second - b.terms_[j].second)
			                           : Rational(a.terms_[i].second + b.terms_[j].second);
			if (c != 0)
				out.terms_.emplace_back(a.terms_[i].first, c);
			i++;
			j++;
		}
	}
	return out;
}

Polynomial Polynomial::operator+(const Polynomial &other) const {
	return merge(*this, other, false);
}

Polynomial Polynomial::operator-(const Polynomial &other) const {
	return merge(*this, other, true);
}

void Polynomial::add_term(const Monomial &m, const Rational &coeff) {
	auto it = std::lower_bound(
	    terms_.begin(), terms_.end(), m,
	    [](const auto &term, const Monomial &key) { return term.first < key; });
	if (it != terms_.end() && it->first == m) {
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	} else {
		terms_.insert(it, {m, coeff});
	}
}

Polynomial Polynomial::operator*(const Polynomial &other) const {
	Polynomial out;
	for (const auto &[ma, ca] : terms_)
		for (const auto &[mb, cb] : other.terms_) {
			Rational c = ca * cb;
			if (c != 0)
				out.add_term(ma.times(mb), c);
		}
	return out;
}

Polynomial Polynomial::operator-() const {
	Polynomial out = *this;
	for (auto &[m, c] : out.terms_)
		c = -c;
	return out;
}

Polynomial Polynomial::scaled(const Rational &factor) const {
	if (factor == 0)
		return Polynomial();
	Polynomial out = *this;
	for (auto &[m, c] : out.terms_)
		c *= factor;
	return out;
}

bool Polynomial::operator<(const Polynomial &other) const {
	std::size_t n = std::min(terms_.size(), other.terms_.size());
	for (std::size_t i = 0; i < n; i++) {
		if (terms_[i].first < other.terms_[i].first)
			return true;
		if (other.terms_[i].first < terms_[i].first)
			return false;
		int cmp = ::cmp(terms_[i].second, other.terms_[i].second);
		if (cmp != 0)
			return cmp < 0;
	}
	return terms_.size() < other.terms_.size();
}

Rational Polynomial::evaluate(std::span<const Rational> assignment) const {
	Rational total(0);
	for (const auto &[m, c] : terms_) {
		Rational value = c;
		for (unsigned symbol : m.factors) {
			if (symbol >= assignment.size())
				throw std::out_of_range("missing symbol in assignment");
			value *= assignment[symbol];
		}
		total += value;
	}
	return total;
}

bool Polynomial::is_linear() const {
	for (const auto &[m, c] : terms_)
		if (m.degree() > 1)
			return false;
	return true;
}

bool Polynomial::contains_symbol(unsigned symbol) const {
	for (const auto &[m, c] : terms_)
		for (unsigned s : m.factors)
			if (s == symbol)
				return true;
	return false;
}

void Polynomial::collect_symbols(std::vector<bool> &seen) const {
	for (const auto &[m, c] : terms_)
		for (unsigned s : m.factors) {
			if (s >= seen.size())
				seen.resize(s + 1, false);
			seen[s] = true;
		}
}

Polynomial Polynomial::normalized() const {
	if (terms_.empty())
		return *this;
	// content = gcd of numerators / lcm of denominators
	mpz_class num_gcd(0), den_lcm(1);
	for (const auto &[m, c] : terms_) {
		mpz_class num = abs(c.get_num());
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
	}
	Rational content(num_gcd, den_lcm);
	content.canonicalize();
	if (content == 0 || content == 1)
		return *this;
	return scaled(Rational(1) / content);
}

std::size_t Polynomial::hash() const {
	std::size_t h = terms_.size();
	for (const auto &[m, c] : terms_) {
		for (unsigned s : m.factors)
			h = h * 1000003u + s + 1;
		h = h * 1000003u + hash_rational(c);
	}
	return h;
}

UtilityPair utility_arith(ArithOp op, const UtilityPair &u, const UtilityPair &v) {
	switch (op) {
	case ArithOp::Add:
		return UtilityPair{u.real + v.real, u.inf + v.inf};
	case ArithOp::Sub:
		return UtilityPair{u.real - v.real, u.inf - v.inf};
	case ArithOp::Mul:
		if (!u.inf.is_zero() && !v.inf.is_zero())
			throw UtilityError("product of two terms with infinitesimal parts");
		return UtilityPair{u.real * v.real, u.real * v.inf + v.real * u.inf};
	}
	throw std::logic_error("unreachable");
}

void check_utility_invariants(const UtilityPair &u, const SymbolTable &symbols) {
	for (const auto &[m, c] : u.real.terms())
		for (unsigned s : m.factors)
			if (symbols.is_infinitesimal(s))
				throw UtilityError("infinitesimal symbol '" + symbols.name(s) +
				                   "' in real part");
	for (const auto &[m, c] : u.inf.terms()) {
		unsigned inf_degree = 0;
		for (unsigned s : m.factors)
			if (symbols.is_infinitesimal(s))
				inf_degree++;
		if (inf_degree != 1)
			throw UtilityError("infinitesimal part must be linear in infinitesimals");
	}
}

std::pair<Rational, Rational> evaluate(const UtilityPair &u,
                                       std::span<const Rational> assignment) {
	return {u.real.evaluate(assignment), u.inf.evaluate(assignment)};
}

CmpOp negate(CmpOp op) {
	switch (op) {
	case CmpOp::Eq:
		return CmpOp::Ne;
	case CmpOp::Ne:
		return CmpOp::Eq;
	case CmpOp::Lt:
		return CmpOp::Ge;
	case CmpOp::Le:
		return CmpOp::Gt;
	case CmpOp::Gt:
		return CmpOp::Le;
	case CmpOp::Ge:
		return CmpOp::Lt;
	}
	throw std::logic_error("unreachable");
}

const char *cmp_op_smt2(CmpOp op) {
	switch (op) {
	case CmpOp::Eq:
		return "=";
	case CmpOp::Ne:
		return "distinct";
	case CmpOp::Lt:
		return "<";
	case CmpOp::Le:
		return "<=";
	case CmpOp::Gt:
		return ">";
	case CmpOp::Ge:
		return ">=";
	}
	throw std::logic_error("unreachable");
}

bool compare_rationals(CmpOp op, const Rational &lhs, const Rational &rhs) {
	switch (op) {
	case CmpOp::Eq:
		return lhs == rhs;
	case CmpOp::Ne:
		return lhs != rhs;
	case CmpOp::Lt:
		return lhs < rhs;
	case CmpOp::Le:
		return lhs <= rhs;
	case CmpOp::Gt:
		return lhs > rhs;
	case CmpOp::Ge:
		return lhs >= rhs;
	}
	throw std::logic_error("unreachable");
}

RealAtom RealAtom::make(CmpOp op, const Polynomial &lhs, const Polynomial &rhs) {
	return make(op, lhs - rhs);
}

RealAtom RealAtom::make(CmpOp op, Polynomial difference) {
	return RealAtom{op, difference.normalized()};
}

std::optional<bool> RealAtom::ground_value() const {
	if (!poly.is_constant())
		return std::nullopt;
	return compare_rationals(op, poly.constant_value(), Rational(0));
}

bool RealAtom::evaluate(std::span<const Rational> assignment) const {
	return compare_rationals(op, poly.evaluate(assignment), Rational(0));
}

bool RealAtom::operator<(const RealAtom &other) const {
	if (op != other.op)
		return static_cast<int>(op) < static_cast<int>(other.op);
	return poly < other.poly;
}

std::size_t RealAtom::hash() const {
	return poly.hash() * 7 + static_cast<std::size_t>(op);
}

namespace {

std::string monomial_smt2(const Monomial &m, const Rational &coeff,
                          const SymbolTable &symbols) {
	Rational c = abs(coeff);
	std::vector<std::string> parts;
	if (c != 1 || m.is_constant())
		parts.push_back(smt2_literal(c));
	for (unsigned s : m.factors)
		parts.push_back(symbols.name(s));
	if (parts.size() == 1)
		return parts[0];
	std::string out = "(*";
	for (const auto &p : parts)
		out += " " + p;
	return out + ")";
}

std::string fold_sum(const std::vector<std::string> &parts) {
	if (parts.size() == 1)
		return parts[0];
	std::string out = "(+";
	for (const auto &p : parts)
		out += " " + p;
	return out + ")";
}

}  // namespace

std::string polynomial_smt2(const Polynomial &p, const SymbolTable &symbols) {
	if (p.is_zero())
		return "0.0";
	std::vector<std::string> positive, negative;
	for (const auto &[m, c] : p.terms()) {
		if (c > 0)
			positive.push_back(monomial_smt2(m, c, symbols));
		else
			negative.push_back(monomial_smt2(m, c, symbols));
	}
	if (negative.empty())
		return fold_sum(positive);
	if (positive.empty())
		return "(- " + fold_sum(negative) + ")";
	return "(- " + fold_sum(positive) + " " + fold_sum(negative) + ")";
}

std::string RealAtom::smt2(const SymbolTable &symbols) const {
	if (op == CmpOp::Ne)
		return "(not (= " + polynomial_smt2(poly, symbols) + " 0.0))";
	return std::string("(") + cmp_op_smt2(op) + " " + polynomial_smt2(poly, symbols) +
	       " 0.0)";
}

std::string RealAtom::smt2_bound_style(const SymbolTable &symbols) const {
	// single variable with a constant offset: render as "var op bound"
	const auto &terms = poly.terms();
	Rational coeff, offset(0);
	Monomial var;
	if (terms.size() == 1 && terms[0].first.degree() == 1) {
		var = terms[0].first;
		coeff = terms[0].second;
	} else if (terms.size() == 2 && terms[0].first.degree() == 1 &&
	           terms[1].first.is_constant()) {
		var = terms[0].first;
		coeff = terms[0].second;
		offset = terms[1].second;
	} else {
		return smt2(symbols);
	}
	Rational bound = -offset / coeff;
	CmpOp shown = op;
	if (coeff < 0) {
		switch (op) {
		case CmpOp::Lt:
			shown = CmpOp::Gt;
			break;
		case CmpOp::Le:
			shown = CmpOp::Ge;
			break;
		case CmpOp::Gt:
			shown = CmpOp::Lt;
			break;
		case CmpOp::Ge:
			shown = CmpOp::Le;
			break;
		default:
			break;
		}
	}
	if (shown == CmpOp::Ne)
		return "(not (= " + symbols.name(var.factors[0]) + " " + smt2_literal(bound) +
		       "))";
	return std::string("(") + cmp_op_smt2(shown) + " " + symbols.name(var.factors[0]) +
	       " " + smt2_literal(bound) + ")";
}

}  // namespace checkmate
