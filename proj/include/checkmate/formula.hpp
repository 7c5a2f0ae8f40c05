#ifndef CHECKMATE_FORMULA_HPP
#define CHECKMATE_FORMULA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "checkmate/term.hpp"

namespace checkmate {

// Immutable Boolean formula over real-arithmetic atoms and Boolean
// variables. Construction simplifies constants and flattens nested
// conjunctions/disjunctions.
class Formula {
public:
	enum class Kind { True, False, Atom, Var, Not, And, Or };

	Formula() : Formula(truth(true)) {}

	static Formula truth(bool value);
	static Formula atom(const RealAtom &a);
	static Formula var(unsigned id);
	static Formula negation(const Formula &f);
	static Formula conjunction(std::vector<Formula> parts);
	static Formula disjunction(std::vector<Formula> parts);
	static Formula implication(const Formula &lhs, const Formula &rhs);

	Kind kind() const { return node_->kind; }
	bool is_true() const { return kind() == Kind::True; }
	bool is_false() const { return kind() == Kind::False; }
	const RealAtom &atom_value() const { return node_->atom; }
	unsigned var_id() const { return node_->var; }
	const std::vector<Formula> &children() const { return node_->children; }

	// every distinct RealAtom, left-to-right first-occurrence order
	void collect_atoms(std::vector<RealAtom> &out) const;
	void visit_atoms(const std::function<void(const RealAtom &)> &fn) const;

	// tri-valued evaluation: atoms map through `atom_value` (true/false),
	// Boolean variables are unresolved so only constant-forced results return
	std::optional<bool> evaluate_atoms(
	    const std::function<bool(const RealAtom &)> &atom_value) const;

	// substitutes truth values for atoms, leaving Boolean variables intact
	Formula substitute_atoms(
	    const std::function<bool(const RealAtom &)> &atom_value) const;

	bool evaluate(std::span<const Rational> assignment,
	              const std::function<bool(unsigned)> &var_value) const;

	std::string smt2(const SymbolTable &symbols,
	                 const std::function<std::string(unsigned)> &var_name) const;

private:
	struct Node {
		Kind kind;
		RealAtom atom;
		unsigned var = 0;
		std::vector<Formula> children;
	};
	std::shared_ptr<const Node> node_;

	explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	static Formula make(Node node);
};

// Lexicographic comparison of two utility pairs, expanded over real atoms.
// Atoms with syntactically identical sides simplify away, e.g. comparing
// equal inf parts merges the expansion into a single real-part atom.
Formula compare_utilities(CmpOp op, const UtilityPair &u, const UtilityPair &v);

}  // namespace checkmate

#endif
