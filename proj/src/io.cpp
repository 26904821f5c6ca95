#include "valgebra/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace valgebra {

using nlohmann::json;

std::vector<std::string> default_basis_names(std::size_t dim) {
	std::vector<std::string> names;
	names.reserve(dim);
	for (std::size_t i = 1; i <= dim; ++i)
		names.push_back("e" + std::to_string(i));
	return names;
}

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
	throw ParseError(origin + ": " + what);
}

std::size_t basis_index(const std::map<std::string, std::size_t>& index,
                        const json& j, const std::string& origin,
                        const std::string& field) {
	if (!j.is_string())
		fail(origin, field + ": expected a basis name string");
	const std::string name = j.get<std::string>();
	auto it = index.find(name);
	if (it == index.end())
		fail(origin, field + ": unknown basis name '" + name + "'");
	return it->second;
}

Rational parse_rational_field(const json& j, const std::string& origin,
                              const std::string& field) {
	if (j.is_number_integer())
		return Rational(j.get<long>());
	if (!j.is_string())
		fail(origin, field + ": expected a rational string like \"3\" or \"-1/2\"");
	try {
		return Rational::parse(j.get<std::string>());
	} catch (const std::invalid_argument& e) {
		fail(origin, field + ": " + e.what());
	}
}

MultTable parse_products(const json& products,
                         const std::map<std::string, std::size_t>& index,
                         std::size_t dim, const std::string& origin,
                         const std::string& where) {
	if (!products.is_array())
		fail(origin, where + ": expected an array of product entries");
	MultTable table(dim);
	std::set<std::pair<std::size_t, std::size_t>> defined;
	std::size_t pos = 0;
	for (const json& entry : products) {
		std::string field = where + "[" + std::to_string(pos) + "]";
		if (!entry.is_object())
			fail(origin, field + ": expected an object");
		if (!entry.contains("left") || !entry.contains("right") || !entry.contains("value"))
			fail(origin, field + ": needs fields left, right, value");
		std::size_t i = basis_index(index, entry["left"], origin, field + ".left");
		std::size_t j = basis_index(index, entry["right"], origin, field + ".right");
		if (!defined.insert({i, j}).second)
			fail(origin, field + ": duplicate product for this (left, right) pair");
		const json& value = entry["value"];
		if (!value.is_object())
			fail(origin, field + ".value: expected a map from basis names to rationals");
		for (auto it = value.begin(); it != value.end(); ++it) {
			auto bi = index.find(it.key());
			if (bi == index.end())
				fail(origin, field + ".value: unknown basis name '" + it.key() + "'");
			table.at(i, j, bi->second) =
			    parse_rational_field(it.value(), origin, field + ".value." + it.key());
		}
		++pos;
	}
	return table;
}

}  // namespace

WorkbenchInput parse_input_text(const std::string& text, const std::string& origin) {
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error& e) {
		throw ParseError(origin + ": " + e.what());
	}
	if (!doc.is_object())
		fail(origin, "top level: expected an object");
	if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
		fail(origin, "dimension: expected a positive integer");
	WorkbenchInput input;
	input.dimension = doc["dimension"].get<std::size_t>();
	if (input.dimension == 0)
		fail(origin, "dimension: must be positive");

	if (doc.contains("basis")) {
		if (!doc["basis"].is_array())
			fail(origin, "basis: expected an array of names");
		for (const json& b : doc["basis"]) {
			if (!b.is_string())
				fail(origin, "basis: entries must be strings");
			input.basis.push_back(b.get<std::string>());
		}
	} else {
		input.basis = default_basis_names(input.dimension);
	}
	if (input.basis.size() != input.dimension)
		fail(origin, "basis: got " + std::to_string(input.basis.size()) +
		                 " names for dimension " + std::to_string(input.dimension));

	std::map<std::string, std::size_t> index;
	for (std::size_t i = 0; i < input.basis.size(); ++i)
		if (!index.emplace(input.basis[i], i).second)
			fail(origin, "basis: duplicate name '" + input.basis[i] + "'");

	input.table = doc.contains("products")
	                  ? parse_products(doc["products"], index, input.dimension, origin,
	                                   "products")
	                  : MultTable(input.dimension);

	if (doc.contains("jets")) {
		if (!doc["jets"].is_array())
			fail(origin, "jets: expected an array of jets");
		std::size_t jn = 0;
		for (const json& jet : doc["jets"]) {
			std::string where = "jets[" + std::to_string(jn) + "]";
			if (!jet.is_array() || jet.empty())
				fail(origin, where + ": expected a non-empty array of term tables");
			std::vector<MultTable> terms;
			std::size_t tn = 0;
			for (const json& term : jet) {
				terms.push_back(parse_products(term, index, input.dimension, origin,
				                               where + "[" + std::to_string(tn) + "]"));
				++tn;
			}
			input.jets.push_back(make_jet(std::move(terms)));
			++jn;
		}
	}

	if (doc.contains("vectors")) {
		if (!doc["vectors"].is_object())
			fail(origin, "vectors: expected a map from names to expressions");
		for (auto it = doc["vectors"].begin(); it != doc["vectors"].end(); ++it) {
			if (!it.value().is_string())
				fail(origin, "vectors." + it.key() + ": expected an expression string");
			try {
				input.vectors.emplace(it.key(),
				                      parse_group_vector(it.value().get<std::string>()));
			} catch (const std::invalid_argument& e) {
				fail(origin, "vectors." + it.key() + ": " + e.what());
			}
		}
	}
	return input;
}

WorkbenchInput parse_input(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw ParseError(path + ": cannot open file");
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_input_text(ss.str(), path);
}

std::string emit_algebra(const MultTable& table, const std::vector<std::string>& basis) {
	json products = json::array();
	for (std::size_t i = 0; i < table.dim; ++i)
		for (std::size_t j = 0; j < table.dim; ++j) {
			json value = json::object();
			for (std::size_t k = 0; k < table.dim; ++k)
				if (!table.at(i, j, k).is_zero())
					value[basis[k]] = table.at(i, j, k).str();
			if (!value.empty())
				products.push_back({{"left", basis[i]},
				                    {"right", basis[j]},
				                    {"value", value}});
		}
	json doc = {{"dimension", table.dim}, {"basis", basis}, {"products", products}};
	return doc.dump(2) + "\n";
}

}  // namespace valgebra
