#include "checkmate/formula.hpp"

#include <algorithm>
#include <set>

namespace checkmate {

Formula Formula::make(Node node) {
	return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::truth(bool value) {
	static const Formula yes = make(Node{Kind::True});
	static const Formula no = make(Node{Kind::False});
	return value ? yes : no;
}

Formula Formula::atom(const RealAtom &a) {
	if (auto ground = a.ground_value())
		return truth(*ground);
	Node n{Kind::Atom};
	n.atom = a;
	return make(std::move(n));
}

Formula Formula::var(unsigned id) {
	Node n{Kind::Var};
	n.var = id;
	return make(std::move(n));
}

Formula Formula::negation(const Formula &f) {
	switch (f.kind()) {
	case Kind::True:
		return truth(false);
	case Kind::False:
		return truth(true);
	case Kind::Atom:
		return atom(f.atom_value().negated());
	case Kind::Not:
		return f.children()[0];
	default: {
		Node n{Kind::Not};
		n.children = {f};
		return make(std::move(n));
	}
	}
}

Formula Formula::conjunction(std::vector<Formula> parts) {
	std::vector<Formula> kids;
	for (auto &p : parts) {
		if (p.is_false())
			return truth(false);
		if (p.is_true())
			continue;
		if (p.kind() == Kind::And) {
			for (const auto &k : p.children())
				kids.push_back(k);
		} else {
			kids.push_back(p);
		}
	}
	if (kids.empty())
		return truth(true);
	if (kids.size() == 1)
		return kids[0];
	Node n{Kind::And};
	n.children = std::move(kids);
	return make(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
	std::vector<Formula> kids;
	for (auto &p : parts) {
		if (p.is_true())
			return truth(true);
		if (p.is_false())
			continue;
		if (p.kind() == Kind::Or) {
			for (const auto &k : p.children())
				kids.push_back(k);
		} else {
			kids.push_back(p);
		}
	}
	if (kids.empty())
		return truth(false);
	if (kids.size() == 1)
		return kids[0];
	Node n{Kind::Or};
	n.children = std::move(kids);
	return make(std::move(n));
}

Formula Formula::implication(const Formula &lhs, const Formula &rhs) {
	return disjunction({negation(lhs), rhs});
}

void Formula::visit_atoms(const std::function<void(const RealAtom &)> &fn) const {
	switch (kind()) {
	case Kind::Atom:
		fn(atom_value());
		break;
	case Kind::Not:
	case Kind::And:
	case Kind::Or:
		for (const auto &k : children())
			k.visit_atoms(fn);
		break;
	default:
		break;
	}
}

void Formula::collect_atoms(std::vector<RealAtom> &out) const {
	visit_atoms([&](const RealAtom &a) {
		if (std::find(out.begin(), out.end(), a) == out.end())
			out.push_back(a);
	});
}

std::optional<bool> Formula::evaluate_atoms(
    const std::function<bool(const RealAtom &)> &lookup) const {
	switch (kind()) {
	case Kind::True:
		return true;
	case Kind::False:
		return false;
	case Kind::Atom:
		return lookup(atom_value());
	case Kind::Var:
		return std::nullopt;
	case Kind::Not: {
		auto inner = children()[0].evaluate_atoms(lookup);
		if (!inner)
			return std::nullopt;
		return !*inner;
	}
	case Kind::And: {
		bool unknown = false;
		for (const auto &k : children()) {
			auto v = k.evaluate_atoms(lookup);
			if (!v)
				unknown = true;
			else if (!*v)
				return false;
		}
		if (unknown)
			return std::nullopt;
		return true;
	}
	case Kind::Or: {
		bool unknown = false;
		for (const auto &k : children()) {
			auto v = k.evaluate_atoms(lookup);
			if (!v)
				unknown = true;
			else if (*v)
				return true;
		}
		if (unknown)
			return std::nullopt;
		return false;
	}
	}
	return std::nullopt;
}

Formula Formula::substitute_atoms(
    const std::function<bool(const RealAtom &)> &lookup) const {
	switch (kind()) {
	case Kind::Atom:
		return truth(lookup(atom_value()));
	case Kind::Not:
		return negation(children()[0].substitute_atoms(lookup));
	case Kind::And:
	case Kind::Or: {
		std::vector<Formula> kids;
		kids.reserve(children().size());
		for (const auto &k : children())
			kids.push_back(k.substitute_atoms(lookup));
		return kind() == Kind::And ? conjunction(std::move(kids))
		                           : disjunction(std::move(kids));
	}
	default:
		return *this;
	}
}

bool Formula::evaluate(std::span<const Rational> assignment,
                       const std::function<bool(unsigned)> &var_value) const {
	switch (kind()) {
	case Kind::True:
		return true;
	case Kind::False:
		return false;
	case Kind::Atom:
		return atom_value().evaluate(assignment);
	case Kind::Var:
		return var_value(var_id());
	case Kind::Not:
		return !children()[0].evaluate(assignment, var_value);
	case Kind::And:
		for (const auto &k : children())
			if (!k.evaluate(assignment, var_value))
				return false;
		return true;
	case Kind::Or:
		for (const auto &k : children())
			if (k.evaluate(assignment, var_value))
				return true;
		return false;
	}
	return false;
}

std::string Formula::smt2(
    const SymbolTable &symbols,
    const std::function<std::string(unsigned)> &var_name) const {
	switch (kind()) {
	case Kind::True:
		return "true";
	case Kind::False:
		return "false";
	case Kind::Atom:
		return atom_value().smt2(symbols);
	case Kind::Var:
		return var_name(var_id());
	case Kind::Not:
		return "(not " + children()[0].smt2(symbols, var_name) + ")";
	case Kind::And:
	case Kind::Or: {
		std::string out = kind() == Kind::And ? "(and" : "(or";
		for (const auto &k : children())
			out += " " + k.smt2(symbols, var_name);
		return out + ")";
	}
	}
	return "false";
}

Formula compare_utilities(CmpOp op, const UtilityPair &u, const UtilityPair &v) {
	Polynomial dr = u.real - v.real;
	Polynomial di = u.inf - v.inf;
	switch (op) {
	case CmpOp::Eq:
		return Formula::conjunction({Formula::atom(RealAtom::make(CmpOp::Eq, dr)),
		                             Formula::atom(RealAtom::make(CmpOp::Eq, di))});
	case CmpOp::Ne:
		return Formula::disjunction({Formula::atom(RealAtom::make(CmpOp::Ne, dr)),
		                             Formula::atom(RealAtom::make(CmpOp::Ne, di))});
	case CmpOp::Lt:
		return compare_utilities(CmpOp::Gt, v, u);
	case CmpOp::Le:
		return compare_utilities(CmpOp::Ge, v, u);
	case CmpOp::Gt:
	case CmpOp::Ge: {
		CmpOp inf_op = op;
		if (di.is_zero())
			return Formula::atom(RealAtom::make(op, dr));
		if (dr.is_zero())
			return Formula::atom(RealAtom::make(inf_op, di));
		return Formula::disjunction(
		    {Formula::atom(RealAtom::make(CmpOp::Gt, dr)),
		     Formula::conjunction({Formula::atom(RealAtom::make(CmpOp::Eq, dr)),
		                           Formula::atom(RealAtom::make(inf_op, di))})});
	}
	}
	throw std::logic_error("unreachable");
}

}  // namespace checkmate
