#ifndef CHECKMATE_EXPR_HPP
#define CHECKMATE_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "checkmate/formula.hpp"
#include "checkmate/term.hpp"

namespace checkmate {

// Infix expression AST. Comparisons and disjunctions never appear below an
// arithmetic operator; disjunction children are comparisons or disjunctions.
struct Expr {
	enum class Kind { Lit, Sym, Neg, Add, Sub, Mul, Cmp, Or };

	Kind kind;
	Rational literal;         // Lit
	unsigned symbol = 0;      // Sym
	CmpOp cmp = CmpOp::Eq;    // Cmp
	std::shared_ptr<const Expr> lhs, rhs;  // binary; Neg uses lhs only

	bool is_boolean() const { return kind == Kind::Cmp || kind == Kind::Or; }
	bool structurally_equal(const Expr &other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &message, std::size_t position)
	    : std::runtime_error(message + " at position " + std::to_string(position)),
	      position(position) {}
	std::size_t position;
};

// Parses the expression grammar with precedence (tightest first): unary
// minus; *; binary + and -; comparisons; |. Identifiers must be declared.
ExprPtr parse_expr(const std::string &text, const SymbolTable &symbols);

// Canonical infix rendering; parse_expr(print_expr(e)) is structurally
// equal to e.
std::string print_expr(const Expr &e, const SymbolTable &symbols);

// Splits a purely arithmetic expression into (real, inf) parts, rejecting
// any monomial with two infinitesimal factors.
UtilityPair to_utility(const Expr &e, const SymbolTable &symbols);

// Compiles a Boolean expression (comparison or disjunction) into a formula
// over real atoms; mixed constant/infinitesimal comparisons use the same
// pair expansion as utilities.
Formula to_formula(const Expr &e, const SymbolTable &symbols);

// Truth of a Boolean expression at a concrete assignment, under the pair
// semantics of mixed comparisons.
bool evaluate_bool(const Expr &e, const SymbolTable &symbols,
                   std::span<const Rational> assignment);

}  // namespace checkmate

#endif
