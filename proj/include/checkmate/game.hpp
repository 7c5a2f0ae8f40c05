#ifndef CHECKMATE_GAME_HPP
#define CHECKMATE_GAME_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "checkmate/expr.hpp"
#include "checkmate/formula.hpp"
#include "checkmate/term.hpp"

namespace checkmate {

enum class PropertyKind {
	WeakImmunity,
	WeakerImmunity,
	CollusionResilience,
	Practicality,
};

constexpr std::size_t PROPERTY_COUNT = 4;
extern const PropertyKind ALL_PROPERTIES[PROPERTY_COUNT];

const char *property_key(PropertyKind p);       // e.g. "weak_immunity"
const char *property_header(PropertyKind p);    // e.g. "WEAK IMMUNITY"
const char *property_adjective(PropertyKind p); // e.g. "weak immune"

class GameError : public std::runtime_error {
public:
	GameError(const std::string &message, const std::string &json_path)
	    : std::runtime_error(json_path.empty() ? message : message + " (at " + json_path + ")"),
	      path(json_path) {}
	std::string path;
};

// A node of the game tree: a leaf carries one utility per player, a branch
// carries the player to move and its ordered children.
struct GameNode {
	// branch
	unsigned player = 0;
	std::vector<std::pair<std::string, std::unique_ptr<GameNode>>> children;
	// leaf
	std::vector<UtilityPair> utilities;
	std::vector<std::string> utility_texts;

	// filled by Game::index_tree
	unsigned id = 0;
	const GameNode *parent = nullptr;
	unsigned incoming_action = 0;  // index into parent->children

	bool is_leaf() const { return children.empty(); }
	std::vector<std::string> history() const;
};

using History = std::vector<std::string>;

std::string render_history(const History &h);

struct Game {
	std::vector<std::string> players;
	std::vector<std::string> actions;
	SymbolTable symbols;
	std::vector<ExprPtr> initial_constraints;
	std::vector<std::string> initial_constraint_texts;
	std::map<PropertyKind, std::vector<ExprPtr>> property_constraints;
	std::map<PropertyKind, std::vector<std::string>> property_constraint_texts;
	std::vector<History> honest_histories;
	std::unique_ptr<GameNode> tree;

	// preorder list of every node; [0] is the root
	std::vector<const GameNode *> nodes;
	std::vector<const GameNode *> leaves;
	std::vector<const GameNode *> branches;

	unsigned player_index(const std::string &name) const;

	// conjunction of initial constraints and the selected property's
	// constraints, as a formula over real atoms
	Formula assumptions(PropertyKind property) const;

	void index_tree();
};

// Parses and validates a document against the input schema and the
// structural invariants; failures carry a JSON path.
Game parse_game(const std::string &json_text);

std::string serialize_game(const Game &game);

// Follows a history edge by edge from the given subtree root.
const GameNode *resolve(const GameNode &root, const History &h);

// Utility map at the leaf reached by a declared honest history.
const std::vector<UtilityPair> &honest_leaf_utilities(const Game &game, const History &h);

}  // namespace checkmate

#endif
