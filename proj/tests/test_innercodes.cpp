#include <doctest.h>

#include "mrlrc/innercodes.hpp"

using namespace mrlrc;

TEST_CASE("vandermonde generators") {
    FqPtr f2 = field_make(2, 1);
    MatrixFq rep = vandermonde_mds(f2, 2, 1);
    CHECK(rep.e == std::vector<std::uint32_t>{1, 1});

    // r = q+1 appends the (0,..,0,1) column
    MatrixFq ext = vandermonde_mds(f2, 3, 2);
    CHECK(ext.at(0, 0) == 1);
    CHECK(ext.at(1, 0) == 0);
    CHECK(ext.at(0, 1) == 1);
    CHECK(ext.at(1, 1) == 1);
    CHECK(ext.at(0, 2) == 0);
    CHECK(ext.at(1, 2) == 1);

    FqPtr f4 = field_make(2, 2);
    MatrixFq v = vandermonde_mds(f4, 4, 2);
    // points 0, 1, w, w^2
    CHECK(v.at(1, 0) == 0);
    CHECK(v.at(1, 1) == 1);
    CHECK(v.at(1, 2) == 2);
    CHECK(v.at(1, 3) == 3);
    // every 2x2 minor nonzero
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<int> idx{i, j};
            REQUIRE(fq_rank(fq_columns(v, idx)) == 2);
        }
    CHECK_THROWS_AS(vandermonde_mds(f2, 4, 2), Error);  // r > q+1
}

TEST_CASE("identity and mds families") {
    FqPtr f2 = field_make(2, 1);
    FqPtr f4 = field_make(2, 2);
    FqPtr f5 = field_make(5, 1);

    IndependentFamily id = identity_family(f2, 5, 3);
    CHECK(id.s == 3);
    CHECK(verify_family(id));
    CHECK_THROWS_AS(identity_family(f2, 2, 3), Error);

    IndependentFamily m1 = mds_family(f4, 3, 4);
    CHECK(m1.s == 3);
    CHECK(verify_family(m1));
    IndependentFamily m2 = mds_family(f5, 2, 4);
    CHECK(m2.s == 2);
    CHECK(verify_family(m2));
    IndependentFamily m3 = mds_family(f4, 4, 4);  // invertible square case
    CHECK(verify_family(m3));
}

TEST_CASE("verify_family rejects a dependent set") {
    FqPtr f2 = field_make(2, 1);
    IndependentFamily fam;
    fam.ctx = f2;
    fam.m = 2;
    fam.r = 2;
    fam.s = 2;
    fam.m_used = 2;
    fam.cols = MatrixFq(f2, 2, 2);
    fam.cols.at(0, 0) = 1;
    fam.cols.at(0, 1) = 1;  // e1 twice
    fam.route = "test";
    CHECK_FALSE(verify_family(fam));
    CHECK_THROWS_AS(verify_family(fam, 0), CapExceeded);
}

TEST_CASE("bch families") {
    // r=8, d=4 is the extended Hamming construction
    IndependentFamily f84 = bch_family(8, 4);
    CHECK(f84.m == 4);
    CHECK(f84.m_used == 4);
    CHECK(f84.s == 3);
    CHECK(verify_family(f84));

    IndependentFamily f42 = bch_family(4, 2);
    CHECK(f42.m == 1);
    for (int j = 0; j < 4; ++j) CHECK(f42.cols.at(0, j) == 1);

    IndependentFamily f166 = bch_family(16, 6);
    CHECK(f166.m == 9);
    CHECK(f166.s == 5);
    CHECK(verify_family(f166));  // C(16,5) = 4368 subsets

    CHECK_THROWS_AS(bch_family(4, 5), Error);  // forces m >= r
    CHECK_THROWS_AS(bch_family(3, 3), Error);
}

TEST_CASE("brute-force minimum distance") {
    FqPtr f2 = field_make(2, 1);
    CHECK(brute_min_distance(vandermonde_mds(f2, 2, 1)) == 2);

    FqPtr f4 = field_make(2, 2);
    CHECK(brute_min_distance(vandermonde_mds(f4, 4, 2)) == 3);  // MDS: r-a+1

    // the [8,4] code behind bch_family(8,4) has distance exactly 4
    IndependentFamily f84 = bch_family(8, 4);
    MatrixFq h(f2, f84.m_used, 8);
    for (int i = 0; i < f84.m_used; ++i)
        for (int j = 0; j < 8; ++j) h.at(i, j) = f84.cols.at(i, j);
    MatrixFq ns = fq_nullspace(h);
    MatrixFq gen(f2, ns.cols, 8);
    for (int i = 0; i < ns.cols; ++i)
        for (int j = 0; j < 8; ++j) gen.at(i, j) = ns.at(j, i);
    REQUIRE(gen.rows == 4);
    CHECK(brute_min_distance(gen) == 4);

    CHECK_THROWS_AS(brute_min_distance(gen, 3), CapExceeded);

    // degenerate: a zero generator row makes the map non-injective
    MatrixFq zero(f2, 1, 4);
    CHECK(brute_min_distance(zero) == 0);
}

TEST_CASE("mds generators meet the Singleton distance across small fields") {
    for (unsigned t : {1u, 2u}) {
        FqPtr k = field_make(2, t);
        for (int r = 1; r <= static_cast<int>(k->q()) + 1; ++r)
            for (int a = 1; a <= r; ++a)
                REQUIRE(brute_min_distance(vandermonde_mds(k, r, a)) == r - a + 1);
    }
}
