#include "checkmate/game.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace checkmate {

using json = nlohmann::json;

const PropertyKind ALL_PROPERTIES[PROPERTY_COUNT] = {
    PropertyKind::WeakImmunity,
    PropertyKind::WeakerImmunity,
    PropertyKind::CollusionResilience,
    PropertyKind::Practicality,
};

const char *property_key(PropertyKind p) {
	switch (p) {
	case PropertyKind::WeakImmunity:
		return "weak_immunity";
	case PropertyKind::WeakerImmunity:
		return "weaker_immunity";
	case PropertyKind::CollusionResilience:
		return "collusion_resilience";
	case PropertyKind::Practicality:
		return "practicality";
	}
	return "";
}

const char *property_header(PropertyKind p) {
	switch (p) {
	case PropertyKind::WeakImmunity:
		return "WEAK IMMUNITY";
	case PropertyKind::WeakerImmunity:
		return "WEAKER IMMUNITY";
	case PropertyKind::CollusionResilience:
		return "COLLUSION RESILIENCE";
	case PropertyKind::Practicality:
		return "PRACTICALITY";
	}
	return "";
}

const char *property_adjective(PropertyKind p) {
	switch (p) {
	case PropertyKind::WeakImmunity:
		return "weak immune";
	case PropertyKind::WeakerImmunity:
		return "weaker immune";
	case PropertyKind::CollusionResilience:
		return "collusion resilient";
	case PropertyKind::Practicality:
		return "practical";
	}
	return "";
}

std::vector<std::string> GameNode::history() const {
	std::vector<std::string> h;
	for (const GameNode *node = this; node->parent != nullptr; node = node->parent)
		h.push_back(node->parent->children[node->incoming_action].first);
	std::reverse(h.begin(), h.end());
	return h;
}

std::string render_history(const History &h) {
	std::string out = "[";
	for (std::size_t i = 0; i < h.size(); i++) {
		if (i)
			out += ", ";
		out += h[i];
	}
	return out + "]";
}

unsigned Game::player_index(const std::string &name) const {
	auto it = std::find(players.begin(), players.end(), name);
	if (it == players.end())
		throw GameError("unknown player '" + name + "'", "");
	return static_cast<unsigned>(it - players.begin());
}

Formula Game::assumptions(PropertyKind property) const {
	std::vector<Formula> parts;
	for (const auto &c : initial_constraints)
		parts.push_back(to_formula(*c, symbols));
	auto it = property_constraints.find(property);
	if (it != property_constraints.end())
		for (const auto &c : it->second)
			parts.push_back(to_formula(*c, symbols));
	return Formula::conjunction(std::move(parts));
}

namespace {

void index_rec(GameNode *node, const GameNode *parent, unsigned incoming, Game &game) {
	node->parent = parent;
	node->incoming_action = incoming;
	node->id = static_cast<unsigned>(game.nodes.size());
	game.nodes.push_back(node);
	if (node->is_leaf()) {
		game.leaves.push_back(node);
	} else {
		game.branches.push_back(node);
		for (unsigned i = 0; i < node->children.size(); i++)
			index_rec(node->children[i].second.get(), node, i, game);
	}
}

std::string join_path(const std::string &base, const std::string &key) {
	return base + "/" + key;
}

const json &expect(const json &object, const char *key, const std::string &path) {
	if (!object.is_object())
		throw GameError("expected an object", path);
	auto it = object.find(key);
	if (it == object.end())
		throw GameError(std::string("missing key '") + key + "'", path);
	return *it;
}

void reject_unknown_keys(const json &object, const std::set<std::string> &allowed,
                         const std::string &path) {
	for (auto it = object.begin(); it != object.end(); ++it)
		if (!allowed.count(it.key()))
			throw GameError("unknown key '" + it.key() + "'", path);
}

std::vector<std::string> string_list(const json &value, const std::string &path) {
	if (!value.is_array())
		throw GameError("expected an array of strings", path);
	std::vector<std::string> out;
	for (std::size_t i = 0; i < value.size(); i++) {
		if (!value[i].is_string())
			throw GameError("expected a string", join_path(path, std::to_string(i)));
		out.push_back(value[i].get<std::string>());
	}
	return out;
}

ExprPtr parse_constraint(const std::string &text, const SymbolTable &symbols,
                         const std::string &path) {
	ExprPtr e;
	try {
		e = parse_expr(text, symbols);
	} catch (const ParseError &err) {
		throw GameError(std::string("cannot parse '") + text + "': " + err.what(), path);
	}
	if (!e->is_boolean())
		throw GameError("constraint '" + text + "' is not a comparison", path);
	return e;
}

std::unique_ptr<GameNode> parse_tree(const json &value, const Game &game,
                                     const std::set<std::string> &declared_actions,
                                     const std::string &path) {
	if (!value.is_object())
		throw GameError("expected an object", path);
	auto node = std::make_unique<GameNode>();
	if (value.contains("utility")) {
		reject_unknown_keys(value, {"utility"}, path);
		const json &utility = value["utility"];
		if (!utility.is_array())
			throw GameError("expected an array", join_path(path, "utility"));
		node->utilities.resize(game.players.size());
		node->utility_texts.resize(game.players.size());
		std::vector<bool> covered(game.players.size(), false);
		for (std::size_t i = 0; i < utility.size(); i++) {
			std::string item_path = join_path(join_path(path, "utility"), std::to_string(i));
			const json &item = utility[i];
			reject_unknown_keys(item, {"player", "value"}, item_path);
			std::string player = expect(item, "player", item_path).get<std::string>();
			auto player_it = std::find(game.players.begin(), game.players.end(), player);
			if (player_it == game.players.end())
				throw GameError("undeclared player '" + player + "'", item_path);
			unsigned index = static_cast<unsigned>(player_it - game.players.begin());
			if (covered[index])
				throw GameError("duplicate utility for player '" + player + "'", item_path);
			covered[index] = true;
			const json &value_field = expect(item, "value", item_path);
			std::string text;
			if (value_field.is_string())
				text = value_field.get<std::string>();
			else if (value_field.is_number_integer())
				text = std::to_string(value_field.get<long long>());
			else
				throw GameError("utility value must be a string",
				                join_path(item_path, "value"));
			ExprPtr e;
			try {
				e = parse_expr(text, game.symbols);
				node->utilities[index] = to_utility(*e, game.symbols);
				check_utility_invariants(node->utilities[index], game.symbols);
			} catch (const std::exception &err) {
				throw GameError(std::string("bad utility '") + text + "': " + err.what(),
				                join_path(item_path, "value"));
			}
			node->utility_texts[index] = text;
		}
		for (std::size_t i = 0; i < covered.size(); i++)
			if (!covered[i])
				throw GameError("utility missing for player '" + game.players[i] + "'",
				                join_path(path, "utility"));
		return node;
	}
	reject_unknown_keys(value, {"player", "children"}, path);
	std::string player = expect(value, "player", path).get<std::string>();
	auto player_it = std::find(game.players.begin(), game.players.end(), player);
	if (player_it == game.players.end())
		throw GameError("undeclared player '" + player + "'", join_path(path, "player"));
	node->player = static_cast<unsigned>(player_it - game.players.begin());
	const json &children = expect(value, "children", path);
	if (!children.is_array() || children.empty())
		throw GameError("branch needs at least one child", join_path(path, "children"));
	std::set<std::string> sibling_actions;
	for (std::size_t i = 0; i < children.size(); i++) {
		std::string child_path = join_path(join_path(path, "children"), std::to_string(i));
		const json &child = children[i];
		reject_unknown_keys(child, {"action", "child"}, child_path);
		std::string action = expect(child, "action", child_path).get<std::string>();
		if (!declared_actions.count(action))
			throw GameError("undeclared action '" + action + "'",
			                join_path(child_path, "action"));
		if (!sibling_actions.insert(action).second)
			throw GameError("duplicate sibling action '" + action + "'",
			                join_path(child_path, "action"));
		node->children.emplace_back(
		    action, parse_tree(expect(child, "child", child_path), game, declared_actions,
		                       join_path(child_path, "child")));
	}
	return node;
}

}  // namespace

void Game::index_tree() {
	nodes.clear();
	leaves.clear();
	branches.clear();
	index_rec(tree.get(), nullptr, 0, *this);
}

Game parse_game(const std::string &json_text) {
	json document;
	try {
		document = json::parse(json_text);
	} catch (const json::parse_error &err) {
		throw GameError(std::string("malformed JSON: ") + err.what(), "");
	}

	static const std::set<std::string> top_keys = {
	    "players",           "actions",
	    "infinitesimals",    "constants",
	    "initial_constraints", "property_constraints",
	    "honest_histories",  "tree"};
	reject_unknown_keys(document, top_keys, "");

	Game game;
	game.players = string_list(expect(document, "players", ""), "/players");
	if (game.players.empty())
		throw GameError("at least one player required", "/players");
	std::set<std::string> player_set(game.players.begin(), game.players.end());
	if (player_set.size() != game.players.size())
		throw GameError("duplicate player", "/players");

	game.actions = string_list(expect(document, "actions", ""), "/actions");
	std::set<std::string> action_set(game.actions.begin(), game.actions.end());
	if (action_set.size() != game.actions.size())
		throw GameError("duplicate action", "/actions");

	auto infinitesimals = string_list(expect(document, "infinitesimals", ""),
	                                  "/infinitesimals");
	auto constants = string_list(expect(document, "constants", ""), "/constants");
	try {
		for (const auto &name : constants)
			game.symbols.add(name, SymbolKind::Constant);
		for (const auto &name : infinitesimals)
			game.symbols.add(name, SymbolKind::Infinitesimal);
	} catch (const std::invalid_argument &err) {
		throw GameError(err.what(), "/constants");
	}

	game.initial_constraint_texts =
	    string_list(expect(document, "initial_constraints", ""), "/initial_constraints");
	for (std::size_t i = 0; i < game.initial_constraint_texts.size(); i++)
		game.initial_constraints.push_back(
		    parse_constraint(game.initial_constraint_texts[i], game.symbols,
		                     "/initial_constraints/" + std::to_string(i)));

	const json &property_constraints = expect(document, "property_constraints", "");
	static const std::set<std::string> property_keys = {
	    "weak_immunity", "weaker_immunity", "collusion_resilience", "practicality"};
	reject_unknown_keys(property_constraints, property_keys, "/property_constraints");
	for (PropertyKind p : ALL_PROPERTIES) {
		std::string path = std::string("/property_constraints/") + property_key(p);
		auto texts = string_list(expect(property_constraints, property_key(p),
		                                "/property_constraints"),
		                         path);
		game.property_constraint_texts[p] = texts;
		for (std::size_t i = 0; i < texts.size(); i++)
			game.property_constraints[p].push_back(
			    parse_constraint(texts[i], game.symbols, path + "/" + std::to_string(i)));
	}

	const json &histories = expect(document, "honest_histories", "");
	if (!histories.is_array() || histories.empty())
		throw GameError("at least one honest history required", "/honest_histories");
	for (std::size_t i = 0; i < histories.size(); i++)
		game.honest_histories.push_back(
		    string_list(histories[i], "/honest_histories/" + std::to_string(i)));

	game.tree = parse_tree(expect(document, "tree", ""), game, action_set, "/tree");
	game.index_tree();

	for (std::size_t i = 0; i < game.honest_histories.size(); i++) {
		std::string path = "/honest_histories/" + std::to_string(i);
		const GameNode *node;
		try {
			node = resolve(*game.tree, game.honest_histories[i]);
		} catch (const GameError &err) {
			throw GameError(err.what(), path);
		}
		if (!node->is_leaf())
			throw GameError("honest history must reach a leaf", path);
	}
	return game;
}

std::string serialize_game(const Game &game) {
	json document;
	document["players"] = game.players;
	document["actions"] = game.actions;
	json infinitesimals = json::array(), constants = json::array();
	for (unsigned i = 0; i < game.symbols.size(); i++) {
		if (game.symbols.is_infinitesimal(i))
			infinitesimals.push_back(game.symbols.name(i));
		else
			constants.push_back(game.symbols.name(i));
	}
	document["infinitesimals"] = infinitesimals;
	document["constants"] = constants;
	document["initial_constraints"] = game.initial_constraint_texts;
	json property_constraints;
	for (PropertyKind p : ALL_PROPERTIES)
		property_constraints[property_key(p)] = game.property_constraint_texts.at(p);
	document["property_constraints"] = property_constraints;
	document["honest_histories"] = game.honest_histories;

	std::function<json(const GameNode &)> serialize_node =
	    [&](const GameNode &node) -> json {
		json out;
		if (node.is_leaf()) {
			json utility = json::array();
			for (std::size_t i = 0; i < node.utilities.size(); i++)
				utility.push_back({{"player", game.players[i]},
				                   {"value", node.utility_texts[i]}});
			out["utility"] = utility;
			return out;
		}
		out["player"] = game.players[node.player];
		json children = json::array();
		for (const auto &[action, child] : node.children)
			children.push_back({{"action", action}, {"child", serialize_node(*child)}});
		out["children"] = children;
		return out;
	};
	document["tree"] = serialize_node(*game.tree);
	return document.dump(2);
}

const GameNode *resolve(const GameNode &root, const History &h) {
	const GameNode *node = &root;
	for (const auto &action : h) {
		if (node->is_leaf())
			throw GameError("history continues past a leaf at '" + action + "'", "");
		bool found = false;
		for (const auto &[edge, child] : node->children)
			if (edge == action) {
				node = child.get();
				found = true;
				break;
			}
		if (!found)
			throw GameError("action '" + action + "' not available", "");
	}
	return node;
}

const std::vector<UtilityPair> &honest_leaf_utilities(const Game &game, const History &h) {
	bool declared = false;
	for (const auto &honest : game.honest_histories)
		if (honest == h)
			declared = true;
	if (!declared)
		throw GameError("history " + render_history(h) + " is not declared honest", "");
	return resolve(*game.tree, h)->utilities;
}

}  // namespace checkmate
