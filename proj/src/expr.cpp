#include "checkmate/expr.hpp"

#include <cassert>
#include <cctype>

namespace checkmate {

bool Expr::structurally_equal(const Expr &other) const {
	if (kind != other.kind)
		return false;
	switch (kind) {
	case Kind::Lit:
		return literal == other.literal;
	case Kind::Sym:
		return symbol == other.symbol;
	case Kind::Neg:
		return lhs->structurally_equal(*other.lhs);
	case Kind::Cmp:
		if (cmp != other.cmp)
			return false;
		[[fallthrough]];
	default:
		return lhs->structurally_equal(*other.lhs) && rhs->structurally_equal(*other.rhs);
	}
}

namespace {

struct Token {
	enum class Kind { Number, Ident, Op, End };
	Kind kind;
	std::string text;
	Rational number;
	std::size_t position;
};

class Lexer {
public:
	explicit Lexer(const std::string &text) : text_(text) { advance(); }

	const Token &peek() const { return current_; }
	Token take() {
		Token t = current_;
		advance();
		return t;
	}

private:
	const std::string &text_;
	std::size_t pos_ = 0;
	Token current_;

	void advance() {
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			pos_++;
		current_.position = pos_;
		if (pos_ >= text_.size()) {
			current_.kind = Token::Kind::End;
			current_.text.clear();
			return;
		}
		char c = text_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
				pos_++;
			std::string literal = text_.substr(start, pos_ - start);
			auto value = parse_decimal(literal);
			if (!value)
				throw ParseError("malformed number '" + literal + "'", start);
			current_.kind = Token::Kind::Number;
			current_.text = literal;
			current_.number = *value;
			return;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
				pos_++;
			current_.kind = Token::Kind::Ident;
			current_.text = text_.substr(start, pos_ - start);
			return;
		}
		static const char *two_char[] = {"<=", ">=", "!="};
		for (const char *op : two_char)
			if (text_.compare(pos_, 2, op) == 0) {
				current_.kind = Token::Kind::Op;
				current_.text = op;
				pos_ += 2;
				return;
			}
		if (std::string("+-*()|<>=").find(c) != std::string::npos) {
			current_.kind = Token::Kind::Op;
			current_.text = std::string(1, c);
			pos_++;
			return;
		}
		throw ParseError(std::string("unexpected character '") + c + "'", pos_);
	}
};

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
public:
	Parser(const std::string &text, const SymbolTable &symbols)
	    : lexer_(text), symbols_(symbols) {}

	ExprPtr parse() {
		ExprPtr e = parse_or();
		if (lexer_.peek().kind != Token::Kind::End)
			throw ParseError("trailing input '" + lexer_.peek().text + "'",
			                 lexer_.peek().position);
		return e;
	}

private:
	Lexer lexer_;
	const SymbolTable &symbols_;

	bool at_op(const char *op) const {
		return lexer_.peek().kind == Token::Kind::Op && lexer_.peek().text == op;
	}

	ExprPtr parse_or() {
		ExprPtr lhs = parse_comparison();
		while (at_op("|")) {
			std::size_t pos = lexer_.take().position;
			ExprPtr rhs = parse_comparison();
			if (!lhs->is_boolean() || !rhs->is_boolean())
				throw ParseError("'|' requires comparison operands", pos);
			Expr e{Expr::Kind::Or};
			e.lhs = lhs;
			e.rhs = rhs;
			lhs = make_expr(std::move(e));
		}
		return lhs;
	}

	ExprPtr parse_comparison() {
		ExprPtr lhs = parse_additive();
		if (lexer_.peek().kind == Token::Kind::Op) {
			const std::string &op = lexer_.peek().text;
			CmpOp cmp;
			if (op == "=")
				cmp = CmpOp::Eq;
			else if (op == "!=")
				cmp = CmpOp::Ne;
			else if (op == "<")
				cmp = CmpOp::Lt;
			else if (op == "<=")
				cmp = CmpOp::Le;
			else if (op == ">")
				cmp = CmpOp::Gt;
			else if (op == ">=")
				cmp = CmpOp::Ge;
			else
				return lhs;
			std::size_t pos = lexer_.take().position;
			ExprPtr rhs = parse_additive();
			if (lhs->is_boolean() || rhs->is_boolean())
				throw ParseError("chained comparison", pos);
			Expr e{Expr::Kind::Cmp};
			e.cmp = cmp;
			e.lhs = lhs;
			e.rhs = rhs;
			return make_expr(std::move(e));
		}
		return lhs;
	}

	ExprPtr parse_additive() {
		ExprPtr lhs = parse_multiplicative();
		while (at_op("+") || at_op("-")) {
			Token t = lexer_.take();
			ExprPtr rhs = parse_multiplicative();
			require_arithmetic(lhs, t.position);
			require_arithmetic(rhs, t.position);
			Expr e{t.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub};
			e.lhs = lhs;
			e.rhs = rhs;
			lhs = make_expr(std::move(e));
		}
		return lhs;
	}

	ExprPtr parse_multiplicative() {
		ExprPtr lhs = parse_unary();
		while (at_op("*")) {
			std::size_t pos = lexer_.take().position;
			ExprPtr rhs = parse_unary();
			require_arithmetic(lhs, pos);
			require_arithmetic(rhs, pos);
			Expr e{Expr::Kind::Mul};
			e.lhs = lhs;
			e.rhs = rhs;
			lhs = make_expr(std::move(e));
		}
		return lhs;
	}

	ExprPtr parse_unary() {
		if (at_op("-")) {
			std::size_t pos = lexer_.take().position;
			ExprPtr operand = parse_unary();
			require_arithmetic(operand, pos);
			Expr e{Expr::Kind::Neg};
			e.lhs = operand;
			return make_expr(std::move(e));
		}
		return parse_primary();
	}

	ExprPtr parse_primary() {
		Token t = lexer_.take();
		switch (t.kind) {
		case Token::Kind::Number: {
			Expr e{Expr::Kind::Lit};
			e.literal = t.number;
			return make_expr(std::move(e));
		}
		case Token::Kind::Ident: {
			auto symbol = symbols_.find(t.text);
			if (!symbol)
				throw ParseError("unknown identifier '" + t.text + "'", t.position);
			Expr e{Expr::Kind::Sym};
			e.symbol = *symbol;
			return make_expr(std::move(e));
		}
		case Token::Kind::Op:
			if (t.text == "(") {
				ExprPtr inner = parse_or();
				if (!at_op(")"))
					throw ParseError("expected ')'", lexer_.peek().position);
				lexer_.take();
				return inner;
			}
			throw ParseError("unexpected '" + t.text + "'", t.position);
		case Token::Kind::End:
			throw ParseError("unexpected end of input", t.position);
		}
		throw ParseError("unexpected token", t.position);
	}

	static void require_arithmetic(const ExprPtr &e, std::size_t position) {
		if (e->is_boolean())
			throw ParseError("comparison nested in arithmetic", position);
	}
};

int precedence(Expr::Kind kind) {
	switch (kind) {
	case Expr::Kind::Or:
		return 0;
	case Expr::Kind::Cmp:
		return 1;
	case Expr::Kind::Add:
	case Expr::Kind::Sub:
		return 2;
	case Expr::Kind::Mul:
		return 3;
	case Expr::Kind::Neg:
		return 4;
	default:
		return 5;
	}
}

const char *cmp_text(CmpOp op) {
	switch (op) {
	case CmpOp::Eq:
		return "=";
	case CmpOp::Ne:
		return "!=";
	case CmpOp::Lt:
		return "<";
	case CmpOp::Le:
		return "<=";
	case CmpOp::Gt:
		return ">";
	case CmpOp::Ge:
		return ">=";
	}
	return "?";
}

void print_rec(const Expr &e, const SymbolTable &symbols, int parent_prec,
               bool right_operand, std::string &out) {
	int prec = precedence(e.kind);
	// left-associative operators need parens on a right operand of equal
	// precedence, e.g. a-(b+c)
	bool parens = prec < parent_prec || (right_operand && prec == parent_prec &&
	                                     prec >= 2 && prec <= 3);
	if (parens)
		out += "(";
	switch (e.kind) {
	case Expr::Kind::Lit:
		out += decimal_string(e.literal);
		break;
	case Expr::Kind::Sym:
		out += symbols.name(e.symbol);
		break;
	case Expr::Kind::Neg:
		out += "-";
		print_rec(*e.lhs, symbols, prec + 1, false, out);
		break;
	case Expr::Kind::Add:
	case Expr::Kind::Sub:
	case Expr::Kind::Mul: {
		const char *op = e.kind == Expr::Kind::Add ? "+"
		                 : e.kind == Expr::Kind::Sub ? "-"
		                                             : "*";
		print_rec(*e.lhs, symbols, prec, false, out);
		out += op;
		print_rec(*e.rhs, symbols, prec, true, out);
		break;
	}
	case Expr::Kind::Cmp:
		print_rec(*e.lhs, symbols, prec + 1, false, out);
		out += cmp_text(e.cmp);
		print_rec(*e.rhs, symbols, prec + 1, true, out);
		break;
	case Expr::Kind::Or:
		print_rec(*e.lhs, symbols, prec, false, out);
		out += " | ";
		print_rec(*e.rhs, symbols, prec, true, out);
		break;
	}
	if (parens)
		out += ")";
}

}  // namespace

ExprPtr parse_expr(const std::string &text, const SymbolTable &symbols) {
	if (text.empty())
		throw ParseError("empty expression", 0);
	return Parser(text, symbols).parse();
}

std::string print_expr(const Expr &e, const SymbolTable &symbols) {
	std::string out;
	print_rec(e, symbols, 0, false, out);
	return out;
}

UtilityPair to_utility(const Expr &e, const SymbolTable &symbols) {
	switch (e.kind) {
	case Expr::Kind::Lit:
		return UtilityPair{Polynomial::constant(e.literal), Polynomial()};
	case Expr::Kind::Sym:
		if (symbols.is_infinitesimal(e.symbol))
			return UtilityPair{Polynomial(), Polynomial::variable(e.symbol)};
		return UtilityPair{Polynomial::variable(e.symbol), Polynomial()};
	case Expr::Kind::Neg: {
		UtilityPair u = to_utility(*e.lhs, symbols);
		return UtilityPair{-u.real, -u.inf};
	}
	case Expr::Kind::Add:
	case Expr::Kind::Sub:
	case Expr::Kind::Mul: {
		ArithOp op = e.kind == Expr::Kind::Add ? ArithOp::Add
		             : e.kind == Expr::Kind::Sub ? ArithOp::Sub
		                                         : ArithOp::Mul;
		return utility_arith(op, to_utility(*e.lhs, symbols), to_utility(*e.rhs, symbols));
	}
	default:
		throw UtilityError("comparison cannot be used as a utility term");
	}
}

Formula to_formula(const Expr &e, const SymbolTable &symbols) {
	switch (e.kind) {
	case Expr::Kind::Or:
		return Formula::disjunction(
		    {to_formula(*e.lhs, symbols), to_formula(*e.rhs, symbols)});
	case Expr::Kind::Cmp:
		return compare_utilities(e.cmp, to_utility(*e.lhs, symbols),
		                         to_utility(*e.rhs, symbols));
	default:
		throw UtilityError("expected a comparison or disjunction");
	}
}

bool evaluate_bool(const Expr &e, const SymbolTable &symbols,
                   std::span<const Rational> assignment) {
	switch (e.kind) {
	case Expr::Kind::Or:
		return evaluate_bool(*e.lhs, symbols, assignment) ||
		       evaluate_bool(*e.rhs, symbols, assignment);
	case Expr::Kind::Cmp: {
		auto lhs = evaluate(to_utility(*e.lhs, symbols), assignment);
		auto rhs = evaluate(to_utility(*e.rhs, symbols), assignment);
		if (lhs.first != rhs.first)
			return compare_rationals(e.cmp, lhs.first, rhs.first);
		return compare_rationals(e.cmp, lhs.second, rhs.second);
	}
	default:
		throw UtilityError("expected a comparison or disjunction");
	}
}

}  // namespace checkmate
