#pragma once

#include "valgebra/deformation.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace valgebra {

struct ParseError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Parsed workbench input. Rationals arrive as strings ("p" or "p/q") so
/// exactness survives the file format. Unspecified products are zero.
struct WorkbenchInput {
	std::size_t dimension = 0;
	std::vector<std::string> basis;
	MultTable table;
	std::vector<Jet> jets;
	std::map<std::string, GroupVector> vectors;
};

/// Reads and fully validates a JSON input file. Diagnostics name the
/// offending field, e.g. "products[3].left: unknown basis name 'e9'".
WorkbenchInput parse_input(const std::string& path);

/// Same, from an in-memory document. `origin` labels diagnostics.
WorkbenchInput parse_input_text(const std::string& text, const std::string& origin);

/// Serializes a table as a complete input document (dimension, basis,
/// products with rationals as strings). Parsing it back yields exactly
/// equal tables.
std::string emit_algebra(const MultTable& table, const std::vector<std::string>& basis);

std::vector<std::string> default_basis_names(std::size_t dim);

}  // namespace valgebra
