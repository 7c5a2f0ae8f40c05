#ifndef CHECKMATE_TERM_HPP
#define CHECKMATE_TERM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "checkmate/rational.hpp"

namespace checkmate {

enum class SymbolKind { Constant, Infinitesimal };

struct Symbol {
	std::string name;
	SymbolKind kind;
};

// Declared symbols of one game. Names are unique across both kinds and must
// match the token grammar (letters, digits, underscore; no leading digit).
class SymbolTable {
public:
	unsigned add(const std::string &name, SymbolKind kind);
	std::optional<unsigned> find(const std::string &name) const;
	const Symbol &operator[](unsigned index) const { return symbols_.at(index); }
	unsigned size() const { return static_cast<unsigned>(symbols_.size()); }
	bool is_infinitesimal(unsigned index) const {
		return symbols_.at(index).kind == SymbolKind::Infinitesimal;
	}
	const std::string &name(unsigned index) const { return symbols_.at(index).name; }

	static bool valid_identifier(const std::string &name);

private:
	std::vector<Symbol> symbols_;
	std::unordered_map<std::string, unsigned> by_name_;
};

// Product of symbols with multiplicity, kept sorted. The empty monomial is
// the constant term.
struct Monomial {
	std::vector<unsigned> factors;

	unsigned degree() const { return static_cast<unsigned>(factors.size()); }
	bool is_constant() const { return factors.empty(); }
	Monomial times(const Monomial &other) const;
	// graded order: degree first, then lexicographic on factor indices
	bool operator<(const Monomial &other) const;
	bool operator==(const Monomial &other) const { return factors == other.factors; }
};

// Canonical sparse polynomial: terms sorted by monomial, nonzero
// coefficients only. Structural equality is semantic equality.
class Polynomial {
public:
	Polynomial() = default;
	static Polynomial constant(const Rational &value);
	static Polynomial variable(unsigned symbol);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	// defined only when is_constant()
	Rational constant_value() const;
	unsigned degree() const;
	std::size_t term_count() const { return terms_.size(); }

	Polynomial operator+(const Polynomial &other) const;
	Polynomial operator-(const Polynomial &other) const;
	Polynomial operator*(const Polynomial &other) const;
	Polynomial operator-() const;
	Polynomial scaled(const Rational &factor) const;

	bool operator==(const Polynomial &other) const { return terms_ == other.terms_; }
	bool operator!=(const Polynomial &other) const { return !(*this == other); }
	bool operator<(const Polynomial &other) const;

	Rational evaluate(std::span<const Rational> assignment) const;
	// true if every monomial has degree <= 1
	bool is_linear() const;
	bool contains_symbol(unsigned symbol) const;
	void collect_symbols(std::vector<bool> &seen) const;

	const std::vector<std::pair<Monomial, Rational>> &terms() const { return terms_; }
	// scales so the content (gcd of coefficients) is 1; sign is preserved
	Polynomial normalized() const;

	std::size_t hash() const;

private:
	std::vector<std::pair<Monomial, Rational>> terms_;

	void add_term(const Monomial &m, const Rational &coeff);
	friend Polynomial merge(const Polynomial &, const Polynomial &, bool negate_second);
};

// Pay-off term split into a real part and a part infinitely closer to zero.
// The inf part is linear in infinitesimal symbols; the real part never
// mentions them.
struct UtilityPair {
	Polynomial real;
	Polynomial inf;

	bool operator==(const UtilityPair &other) const {
		return real == other.real && inf == other.inf;
	}
	static UtilityPair zero() { return UtilityPair{}; }
};

class UtilityError : public std::runtime_error {
public:
	explicit UtilityError(const std::string &what) : std::runtime_error(what) {}
};

enum class ArithOp { Add, Sub, Mul };

// Componentwise for +/-; products require one operand with a vanishing inf
// part and yield (u.real*v.real, u.real*v.inf + v.real*u.inf).
UtilityPair utility_arith(ArithOp op, const UtilityPair &u, const UtilityPair &v);

// Checks the degree guard: real part free of infinitesimals, inf part of
// infinitesimal-degree exactly one. Throws UtilityError otherwise.
void check_utility_invariants(const UtilityPair &u, const SymbolTable &symbols);

// Exact evaluation to a (real, inf) pair of rationals; pairs compare
// lexicographically.
std::pair<Rational, Rational> evaluate(const UtilityPair &u,
                                       std::span<const Rational> assignment);

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

CmpOp negate(CmpOp op);
const char *cmp_op_smt2(CmpOp op);

// One directly assertable literal of real arithmetic: poly `op` 0, with the
// polynomial scale-normalized.
struct RealAtom {
	CmpOp op;
	Polynomial poly;

	static RealAtom make(CmpOp op, const Polynomial &lhs, const Polynomial &rhs);
	static RealAtom make(CmpOp op, Polynomial difference);

	RealAtom negated() const { return RealAtom{negate(op), poly}; }
	// value if the polynomial is a literal constant
	std::optional<bool> ground_value() const;
	bool evaluate(std::span<const Rational> assignment) const;

	bool operator==(const RealAtom &other) const {
		return op == other.op && poly == other.poly;
	}
	bool operator<(const RealAtom &other) const;
	std::size_t hash() const;

	// prefix rendering, e.g. "(>= (- a 2.0) 0.0)"
	std::string smt2(const SymbolTable &symbols) const;
	// bound rendering for single-variable linear atoms, e.g. "(>= a 2.0)";
	// falls back to smt2() otherwise
	std::string smt2_bound_style(const SymbolTable &symbols) const;
};

bool compare_rationals(CmpOp op, const Rational &lhs, const Rational &rhs);

std::string polynomial_smt2(const Polynomial &p, const SymbolTable &symbols);

}  // namespace checkmate

#endif
