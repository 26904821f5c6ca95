#include "valgebra/sigma3.hpp"

#include <cctype>
#include <stdexcept>

namespace valgebra {

Perm perm(int index) {
	return Perm{perm_images[static_cast<std::size_t>(index)]};
}

int perm_index(const Perm& p) {
	for (int s = 0; s < 6; ++s)
		if (perm_images[static_cast<std::size_t>(s)] == p.images)
			return s;
	throw std::invalid_argument("perm_index: not a permutation of {1,2,3}");
}

Perm compose(const Perm& s1, const Perm& s2) {
	Perm r{};
	for (int i = 1; i <= 3; ++i)
		r.images[static_cast<std::size_t>(i - 1)] = s1(s2(i));
	return r;
}

namespace {

struct CayleyTable {
	std::array<std::array<int, 6>, 6> prod{};
	std::array<int, 6> inv{};

	CayleyTable() {
		for (int i = 0; i < 6; ++i)
			for (int j = 0; j < 6; ++j)
				prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
				    perm_index(compose(perm(i), perm(j)));
		for (int i = 0; i < 6; ++i)
			for (int j = 0; j < 6; ++j)
				if (prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0)
					inv[static_cast<std::size_t>(i)] = j;
	}
};

const CayleyTable& cayley() {
	static const CayleyTable table;
	return table;
}

}  // namespace

int compose_index(int i, int j) {
	return cayley().prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int inverse_index(int i) {
	return cayley().inv[static_cast<std::size_t>(i)];
}

int perm_sign(int index) {
	return (index == 1 || index == 2 || index == 3) ? -1 : 1;
}

GroupVector basis_group_vector(int index) {
	GroupVector v;
	v.c[static_cast<std::size_t>(index)] = 1;
	return v;
}

GroupVector make_group_vector(std::array<Rational, 6> coeffs) {
	GroupVector v;
	v.c = std::move(coeffs);
	return v;
}

GroupVector group_product(const GroupVector& v1, const GroupVector& v2) {
	GroupVector r;
	for (int i = 0; i < 6; ++i) {
		if (v1.c[static_cast<std::size_t>(i)].is_zero())
			continue;
		for (int j = 0; j < 6; ++j) {
			if (v2.c[static_cast<std::size_t>(j)].is_zero())
				continue;
			r.c[static_cast<std::size_t>(compose_index(i, j))] +=
			    v1.c[static_cast<std::size_t>(i)] * v2.c[static_cast<std::size_t>(j)];
		}
	}
	return r;
}

GroupVector left_translate(int sigma_index, const GroupVector& v) {
	GroupVector r;
	for (int i = 0; i < 6; ++i)
		r.c[static_cast<std::size_t>(compose_index(sigma_index, i))] =
		    r.c[static_cast<std::size_t>(compose_index(sigma_index, i))] +
		    v.c[static_cast<std::size_t>(i)];
	return r;
}

std::array<GroupVector, 6> orbit(const GroupVector& v) {
	std::array<GroupVector, 6> o;
	for (int s = 0; s < 6; ++s)
		o[static_cast<std::size_t>(s)] = left_translate(s, v);
	return o;
}

QMatrix mv_matrix(const GroupVector& v) {
	QMatrix m(6, 6);
	for (int j = 0; j < 6; ++j) {
		GroupVector col = left_translate(j, v);
		for (std::size_t i = 0; i < 6; ++i)
			m.at(i, static_cast<std::size_t>(j)) = col.c[i];
	}
	return m;
}

std::size_t rank_v(const GroupVector& v) {
	return rank(mv_matrix(v));
}

Rational lambda_coefficient(const GroupVector& v) {
	return v.c[0] - v.c[1] - v.c[2] - v.c[3] + v.c[4] + v.c[5];
}

namespace {

Rational require_param(const std::map<std::string, Rational>& params,
                       const std::string& vector_name, const std::string& key) {
	auto it = params.find(key);
	if (it == params.end())
		throw std::invalid_argument("named_vector: '" + vector_name +
		                            "' needs parameter '" + key + "'");
	return it->second;
}

}  // namespace

GroupVector named_vector(const std::string& name,
                         const std::map<std::string, Rational>& params) {
	auto gv = [](long a1, long a2, long a3, long a4, long a5, long a6) {
		return make_group_vector({Rational(a1), Rational(a2), Rational(a3),
		                          Rational(a4), Rational(a5), Rational(a6)});
	};
	if (name == "V_Lad")
		return gv(1, -1, -1, -1, 1, 1);
	if (name == "V_3Pa")
		return gv(1, 1, 1, 1, 1, 1);
	if (name == "cyclic")
		return gv(1, 0, 0, 0, 1, 1);
	if (name == "pre_lie")
		return gv(1, -1, 0, 0, 0, 0);
	if (name == "g3")
		return gv(1, 0, -1, 0, 0, 0);
	if (name == "g4")
		return gv(1, 0, 0, -1, 0, 0);
	if (name == "weakly_assoc")
		return gv(1, -1, 0, 0, 1, 0);
	if (name == "rank5")
		return gv(2, -1, -1, -1, 1, 0);
	if (name == "fam_a") {
		Rational a = require_param(params, name, "a");
		return make_group_vector({Rational(1), a, Rational(0), Rational(-1),
		                          Rational(0), -a});
	}
	if (name == "fam_b")
		return gv(1, -1, 0, -2, 2, 0);
	if (name == "c_family") {
		Rational alpha = require_param(params, name, "alpha");
		return make_group_vector({Rational(2), Rational(1) + alpha, Rational(1),
		                          Rational(0), Rational(1), Rational(1) - alpha});
	}
	if (name == "v1_invertible")
		return make_group_vector({Rational(1, 3), Rational(-1), Rational(7, 12),
		                          Rational(0), Rational(0), Rational(1, 4)});
	throw std::invalid_argument("named_vector: unknown name '" + name + "'");
}

namespace {

struct Token {
	enum Kind { Plus, Minus, Number, Symbol, End } kind;
	std::string text;
};

std::vector<Token> lex_expr(const std::string& text) {
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < text.size()) {
		char ch = text[i];
		if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
			++i;
			continue;
		}
		if (ch == '+') {
			out.push_back({Token::Plus, "+"});
			++i;
		} else if (ch == '-') {
			out.push_back({Token::Minus, "-"});
			++i;
		} else if (std::isdigit(static_cast<unsigned char>(ch))) {
			std::size_t j = i;
			while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
				++j;
			if (j < text.size() && text[j] == '/') {
				++j;
				while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
					++j;
			}
			out.push_back({Token::Number, text.substr(i, j - i)});
			i = j;
		} else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
			std::size_t j = i;
			while (j < text.size() &&
			       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
				++j;
			out.push_back({Token::Symbol, text.substr(i, j - i)});
			i = j;
		} else {
			throw std::invalid_argument("vector expression: unexpected character '" +
			                            std::string(1, ch) + "' in '" + text + "'");
		}
	}
	out.push_back({Token::End, ""});
	return out;
}

GroupVector resolve_atom(const std::string& symbol,
                         const std::map<std::string, Rational>& params) {
	for (int s = 0; s < 6; ++s)
		if (symbol == perm_names[static_cast<std::size_t>(s)])
			return basis_group_vector(s);
	return named_vector(symbol, params);
}

}  // namespace

GroupVector parse_group_vector(const std::string& text,
                               const std::map<std::string, Rational>& params) {
	std::vector<Token> toks = lex_expr(text);
	if (toks.size() == 2 && toks[0].kind == Token::Number &&
	    Rational::parse(toks[0].text).is_zero())
		return GroupVector{};
	GroupVector total;
	std::size_t i = 0;
	bool first = true;
	while (toks[i].kind != Token::End) {
		Rational sign(1);
		if (toks[i].kind == Token::Plus || toks[i].kind == Token::Minus) {
			if (toks[i].kind == Token::Minus)
				sign = Rational(-1);
			++i;
		} else if (!first) {
			throw std::invalid_argument("vector expression: expected '+' or '-' in '" +
			                            text + "'");
		}
		Rational coeff(1);
		if (toks[i].kind == Token::Number) {
			coeff = Rational::parse(toks[i].text);
			++i;
		}
		if (toks[i].kind != Token::Symbol)
			throw std::invalid_argument("vector expression: expected a basis token or "
			                            "vector name in '" + text + "'");
		GroupVector atom = resolve_atom(toks[i].text, params);
		++i;
		total += (sign * coeff) * atom;
		first = false;
	}
	if (first)
		throw std::invalid_argument("vector expression: empty expression");
	return total;
}

std::string format_group_vector(const GroupVector& v) {
	std::string out;
	for (std::size_t s = 0; s < 6; ++s) {
		const Rational& x = v.c[s];
		if (x.is_zero())
			continue;
		Rational mag = x.sign() < 0 ? -x : x;
		if (out.empty())
			out += x.sign() < 0 ? "-" : "";
		else
			out += x.sign() < 0 ? " - " : " + ";
		if (!(mag == Rational(1)))
			out += mag.str() + " ";
		out += perm_names[s];
	}
	return out.empty() ? "0" : out;
}

QVector to_qvector(const GroupVector& v) {
	return QVector(v.c.begin(), v.c.end());
}

GroupVector group_vector_from(const QVector& v) {
	if (v.size() != 6)
		throw std::invalid_argument("group_vector_from: need exactly 6 coefficients");
	GroupVector g;
	for (std::size_t i = 0; i < 6; ++i)
		g.c[i] = v[i];
	return g;
}

}  // namespace valgebra
