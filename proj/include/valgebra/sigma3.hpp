#pragma once

#include "valgebra/matrix.hpp"

#include <array>
#include <map>
#include <string>

namespace valgebra {

/// The six permutations of {1,2,3} in canonical order id, t12, t13, t23,
/// c, c2. One-line images: perm_images[s][i-1] = sigma(i). The 3-cycle c
/// is pinned to [2,3,1] so that the induced argument action sends
/// (X,Y,Z) to (Y,Z,X); every other convention follows from that choice.
inline constexpr std::array<std::array<int, 3>, 6> perm_images = {{
    {1, 2, 3},
    {2, 1, 3},
    {3, 2, 1},
    {1, 3, 2},
    {2, 3, 1},
    {3, 1, 2},
}};

inline constexpr std::array<const char*, 6> perm_names = {"id", "t12", "t13", "t23", "c", "c2"};

struct Perm {
	std::array<int, 3> images;  // images[i-1] = sigma(i), values in {1,2,3}

	int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
	friend bool operator==(const Perm&, const Perm&) = default;
};

Perm perm(int index);
int perm_index(const Perm& p);

/// Composition sigma1 ∘ sigma2 (apply sigma2 first).
Perm compose(const Perm& s1, const Perm& s2);
int compose_index(int i, int j);
int inverse_index(int i);

/// +1 on id, c, c2; -1 on the transpositions.
int perm_sign(int index);

/// Element of the rational group algebra of Sigma_3, stored on the
/// canonical basis (id, t12, t13, t23, c, c2).
struct GroupVector {
	std::array<Rational, 6> c{};

	bool is_zero() const {
		for (const Rational& x : c)
			if (!x.is_zero())
				return false;
		return true;
	}

	GroupVector& operator+=(const GroupVector& o) {
		for (std::size_t i = 0; i < 6; ++i)
			c[i] += o.c[i];
		return *this;
	}
	GroupVector& operator-=(const GroupVector& o) {
		for (std::size_t i = 0; i < 6; ++i)
			c[i] -= o.c[i];
		return *this;
	}
	GroupVector operator-() const {
		GroupVector r;
		for (std::size_t i = 0; i < 6; ++i)
			r.c[i] = -c[i];
		return r;
	}
	friend GroupVector operator+(GroupVector a, const GroupVector& b) { return a += b; }
	friend GroupVector operator-(GroupVector a, const GroupVector& b) { return a -= b; }
	friend GroupVector operator*(const Rational& s, const GroupVector& v) {
		GroupVector r;
		for (std::size_t i = 0; i < 6; ++i)
			r.c[i] = s * v.c[i];
		return r;
	}
	friend bool operator==(const GroupVector&, const GroupVector&) = default;
};

GroupVector basis_group_vector(int index);
GroupVector make_group_vector(std::array<Rational, 6> coeffs);

/// Bilinear extension of composition: coefficient of sigma in v1·v2 is
/// the sum of v1[si]·v2[sj] over pairs with si∘sj = sigma.
GroupVector group_product(const GroupVector& v1, const GroupVector& v2);

/// sigma · v = sum_i a_i (sigma sigma_i).
GroupVector left_translate(int sigma_index, const GroupVector& v);

/// The six left translates in canonical sigma order, duplicates kept.
std::array<GroupVector, 6> orbit(const GroupVector& v);

/// 6x6 matrix whose column j is left_translate(sigma_j, v); consequently
/// mv_matrix(v)·v1 = group_product(v1, v) on coefficient vectors.
QMatrix mv_matrix(const GroupVector& v);

/// Dimension of the span of the orbit of v.
std::size_t rank_v(const GroupVector& v);

/// a1 - a2 - a3 - a4 + a5 + a6.
Rational lambda_coefficient(const GroupVector& v);

/// Registry of the named vectors used throughout: V_Lad, V_3Pa, cyclic,
/// pre_lie, g3, g4, weakly_assoc, rank5, fam_a(a), fam_b,
/// c_family(alpha), v1_invertible. Throws on unknown names or missing
/// parameters.
GroupVector named_vector(const std::string& name,
                         const std::map<std::string, Rational>& params = {});

/// Linear-combination syntax over {id, t12, t13, t23, c, c2} and the
/// registry names, e.g. "id - t12 + c", "2id - t12 - t13 - t23 + c",
/// "1/3 id - t12 + 7/12 t13 + 1/4 c2".
GroupVector parse_group_vector(const std::string& text,
                               const std::map<std::string, Rational>& params = {});

std::string format_group_vector(const GroupVector& v);

QVector to_qvector(const GroupVector& v);
GroupVector group_vector_from(const QVector& v);

}  // namespace valgebra
