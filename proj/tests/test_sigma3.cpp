#include "valgebra/sigma3.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace valgebra;
using namespace valgebra::testing;

namespace {

GroupVector gv(long a1, long a2, long a3, long a4, long a5, long a6) {
	return make_group_vector({Rational(a1), Rational(a2), Rational(a3), Rational(a4),
	                          Rational(a5), Rational(a6)});
}

// Independent composition oracle on one-line arrays.
std::array<int, 3> oracle_compose(const std::array<int, 3>& a, const std::array<int, 3>& b) {
	std::array<int, 3> r{};
	for (int i = 0; i < 3; ++i)
		r[static_cast<std::size_t>(i)] =
		    a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)] - 1)];
	return r;
}

// Independent group product: all 36 composition pairs.
GroupVector oracle_group_product(const GroupVector& u, const GroupVector& v) {
	GroupVector r;
	for (int i = 0; i < 6; ++i)
		for (int j = 0; j < 6; ++j) {
			std::array<int, 3> prod = oracle_compose(perm_images[static_cast<std::size_t>(i)],
			                                         perm_images[static_cast<std::size_t>(j)]);
			int idx = perm_index(Perm{prod});
			r.c[static_cast<std::size_t>(idx)] += u.c[static_cast<std::size_t>(i)] *
			                                      v.c[static_cast<std::size_t>(j)];
		}
	return r;
}

}  // namespace

TEST_CASE("composition matches hand-computed products") {
	CHECK(perm_index(compose(perm(0), perm(4))) == 4);   // id c = c
	CHECK(perm_index(compose(perm(1), perm(1))) == 0);   // t12 t12 = id
	CHECK(perm_index(compose(perm(2), perm(1))) == 4);   // t13 t12 = c
	CHECK(perm_index(compose(perm(1), perm(2))) == 5);   // t12 t13 = c2
	for (int i = 0; i < 6; ++i)
		for (int j = 0; j < 6; ++j) {
			std::array<int, 3> expect =
			    oracle_compose(perm_images[static_cast<std::size_t>(i)],
			                   perm_images[static_cast<std::size_t>(j)]);
			CHECK(compose(perm(i), perm(j)).images == expect);
		}
}

TEST_CASE("group law: associativity over all 216 triples, inverses exist") {
	for (int i = 0; i < 6; ++i) {
		for (int j = 0; j < 6; ++j)
			for (int k = 0; k < 6; ++k)
				CHECK(compose_index(compose_index(i, j), k) ==
				      compose_index(i, compose_index(j, k)));
		CHECK(compose_index(i, inverse_index(i)) == 0);
		CHECK(compose_index(inverse_index(i), i) == 0);
	}
}

TEST_CASE("signs") {
	CHECK(perm_sign(0) == 1);
	CHECK(perm_sign(1) == -1);
	CHECK(perm_sign(2) == -1);
	CHECK(perm_sign(3) == -1);
	CHECK(perm_sign(4) == 1);
	CHECK(perm_sign(5) == 1);
}

TEST_CASE("left translation") {
	GroupVector v = rand_group_vector();
	CHECK(left_translate(0, v) == v);
	GroupVector v3pa = named_vector("V_3Pa");
	CHECK(left_translate(1, v3pa) == v3pa);
	GroupVector vlad = named_vector("V_Lad");
	CHECK(left_translate(1, vlad) == -vlad);
	for (int s1 = 0; s1 < 6; ++s1)
		for (int s2 = 0; s2 < 6; ++s2)
			CHECK(left_translate(s1, left_translate(s2, v)) ==
			      left_translate(compose_index(s1, s2), v));
}

TEST_CASE("group product against the brute-force oracle") {
	GroupVector vlad = named_vector("V_Lad");
	CHECK(group_product(basis_group_vector(0), vlad) == vlad);

	// frozen from the 36-pair oracle: V_Lad · V_Lad = 6 V_Lad
	GroupVector expected = oracle_group_product(vlad, vlad);
	CHECK(expected == Rational(6) * vlad);
	CHECK(group_product(vlad, vlad) == expected);

	for (int trial = 0; trial < 30; ++trial) {
		GroupVector a = rand_group_vector();
		GroupVector b = rand_group_vector();
		CHECK(group_product(a, b) == oracle_group_product(a, b));
	}

	// v1 · V_Lad = (sum_i eps(s_i) v1[i]) V_Lad
	for (int trial = 0; trial < 20; ++trial) {
		GroupVector a = rand_group_vector();
		Rational scale;
		for (int s = 0; s < 6; ++s)
			scale += Rational(perm_sign(s)) * a.c[static_cast<std::size_t>(s)];
		CHECK(group_product(a, vlad) == scale * vlad);
	}

	// v · V_3Pa is always a multiple of V_3Pa
	GroupVector v3pa = named_vector("V_3Pa");
	for (int trial = 0; trial < 20; ++trial) {
		GroupVector a = rand_group_vector();
		Rational scale;
		for (const Rational& x : a.c)
			scale += x;
		CHECK(group_product(a, v3pa) == scale * v3pa);
	}
}

TEST_CASE("orbits") {
	GroupVector zero;
	for (const GroupVector& t : orbit(zero))
		CHECK(t.is_zero());

	GroupVector vlad = named_vector("V_Lad");
	std::set<std::array<std::string, 6>> as_set;
	auto key = [](const GroupVector& g) {
		std::array<std::string, 6> k;
		for (std::size_t i = 0; i < 6; ++i)
			k[i] = g.c[i].str();
		return k;
	};
	for (const GroupVector& t : orbit(vlad))
		as_set.insert(key(t));
	CHECK(as_set == std::set<std::array<std::string, 6>>{key(vlad), key(-vlad)});

	GroupVector cyc = named_vector("cyclic");
	std::set<std::array<std::string, 6>> cyc_set;
	for (const GroupVector& t : orbit(cyc))
		cyc_set.insert(key(t));
	CHECK(cyc_set ==
	      std::set<std::array<std::string, 6>>{key(cyc), key(gv(0, 1, 1, 1, 0, 0))});
}

TEST_CASE("mv_matrix basics") {
	CHECK(mv_matrix(basis_group_vector(0)) == QMatrix::identity(6));

	for (int trial = 0; trial < 30; ++trial) {
		GroupVector v = rand_group_vector();
		GroupVector v1 = rand_group_vector();
		QVector lhs = mat_vec(mv_matrix(v), to_qvector(v1));
		CHECK(group_vector_from(lhs) == group_product(v1, v));
		// the (6,6) entry follows the group law: it is a1, not a6
		CHECK(mv_matrix(v).at(5, 5) == v.c[0]);
	}
}

TEST_CASE("lambda eigenvector law on 100 random vectors") {
	GroupVector vlad = named_vector("V_Lad");
	for (int trial = 0; trial < 100; ++trial) {
		GroupVector v = rand_group_vector();
		QVector image = mat_vec(mv_matrix(v), to_qvector(vlad));
		CHECK(group_vector_from(image) == lambda_coefficient(v) * vlad);
	}
}

TEST_CASE("rank catalog") {
	CHECK(rank_v(named_vector("V_Lad")) == 1);
	CHECK(rank_v(named_vector("V_3Pa")) == 1);
	CHECK(rank_v(named_vector("cyclic")) == 2);
	CHECK(rank_v(gv(1, 0, 1, 0, 0, 0)) == 3);  // id + t13
	CHECK(rank_v(named_vector("pre_lie")) == 3);
	CHECK(rank_v(named_vector("g3")) == 3);
	CHECK(rank_v(named_vector("fam_a", {{"a", Rational(2)}})) == 3);
	CHECK(rank_v(named_vector("fam_b")) == 3);
	CHECK(rank_v(named_vector("weakly_assoc")) == 4);
	CHECK(rank_v(named_vector("rank5")) == 5);
	CHECK(rank_v(basis_group_vector(0)) == 6);
}

TEST_CASE("orbit elements generate the same module") {
	for (int trial = 0; trial < 15; ++trial) {
		GroupVector v = rand_group_vector();
		if (v.is_zero())
			continue;
		std::size_t r = rank_v(v);
		for (const GroupVector& t : orbit(v)) {
			if (t.is_zero())
				continue;
			CHECK(rank_v(t) == r);
		}
	}
}

TEST_CASE("rank one only on the signed and unsigned full sums") {
	GroupVector vlad = named_vector("V_Lad");
	GroupVector v3pa = named_vector("V_3Pa");
	std::vector<QVector> lad_line{to_qvector(vlad)};
	std::vector<QVector> pa_line{to_qvector(v3pa)};
	long entries[3] = {-1, 0, 1};
	for (long a1 : entries)
		for (long a2 : entries)
			for (long a3 : entries)
				for (long a4 : entries)
					for (long a5 : entries)
						for (long a6 : entries) {
							GroupVector v = gv(a1, a2, a3, a4, a5, a6);
							if (v.is_zero() || rank_v(v) != 1)
								continue;
							bool lad = span_contains(lad_line, to_qvector(v));
							bool pa = span_contains(pa_line, to_qvector(v));
							CHECK((lad || pa));
						}
}

TEST_CASE("named vectors") {
	CHECK(named_vector("V_Lad") == gv(1, -1, -1, -1, 1, 1));
	CHECK(named_vector("weakly_assoc") == gv(1, -1, 0, 0, 1, 0));
	CHECK(named_vector("fam_a", {{"a", Rational(2)}}) == gv(1, 2, 0, -1, 0, -2));
	CHECK(named_vector("v1_invertible") ==
	      make_group_vector({Rational(1, 3), Rational(-1), Rational(7, 12), Rational(0),
	                         Rational(0), Rational(1, 4)}));
	CHECK_THROWS_AS(named_vector("nope"), std::invalid_argument);
	CHECK_THROWS_AS(named_vector("fam_a"), std::invalid_argument);
}

TEST_CASE("vector expression parsing") {
	CHECK(parse_group_vector("id - t12 + c") == named_vector("weakly_assoc"));
	CHECK(parse_group_vector("2id - t12 - t13 - t23 + c") == named_vector("rank5"));
	CHECK(parse_group_vector("1/3 id - t12 + 7/12 t13 + 1/4 c2") ==
	      named_vector("v1_invertible"));
	CHECK(parse_group_vector("V_Lad") == named_vector("V_Lad"));
	CHECK(parse_group_vector("fam_a", {{"a", Rational(2)}}) == gv(1, 2, 0, -1, 0, -2));
	CHECK(parse_group_vector("V_Lad + 2 c") == gv(1, -1, -1, -1, 3, 1));
	CHECK_THROWS_AS(parse_group_vector(""), std::invalid_argument);
	CHECK_THROWS_AS(parse_group_vector("id + + c"), std::invalid_argument);
	CHECK_THROWS_AS(parse_group_vector("2"), std::invalid_argument);
	CHECK_THROWS_AS(parse_group_vector("id ? c"), std::invalid_argument);

	for (int trial = 0; trial < 20; ++trial) {
		GroupVector v = rand_group_vector();
		CHECK(parse_group_vector(format_group_vector(v)) == v);
	}
	CHECK(format_group_vector(GroupVector{}) == "0");
}
