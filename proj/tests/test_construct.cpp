#include <doctest.h>

#include "mrlrc/verify.hpp"

using namespace mrlrc;

TEST_CASE("planner validates manual parameters") {
    LrcParams p = plan(8, 4, 2, 1, Route::Manual, CodeForm::Parity, 4, 3);
    CHECK(p.g == 2);
    CHECK(p.k() == 5);
    CHECK(p.deg_q_poly() == 6);  // min{hm, gm}

    CHECK_THROWS_AS(plan(9, 4, 2, 1, Route::Manual, CodeForm::Parity, 4, 3), Error);  // r | n
    CHECK_THROWS_AS(plan(8, 4, 2, 1, Route::Manual, CodeForm::Parity, 6, 3), Error);  // q not a prime power
    CHECK_THROWS_AS(plan(8, 4, 2, 1, Route::Manual, CodeForm::Parity, 2, 3), Error);  // r > q+1
    // supply condition: 2^3 < 3*4
    CHECK_THROWS_AS(plan(12, 3, 3, 1, Route::Manual, CodeForm::Parity, 2, 3), Error);
    CHECK_THROWS_AS(plan(8, 4, 7, 1, Route::Manual, CodeForm::Parity, 4, 3), Error);  // ga+h >= n
}

TEST_CASE("auto route picks the smallest valid (q, m)") {
    LrcParams p1 = plan(8, 4, 2, 1, Route::Auto, CodeForm::Parity);
    CHECK(p1.q == 3);
    CHECK(p1.m == 3);
    LrcParams p2 = plan(9, 3, 2, 1, Route::Auto, CodeForm::Parity);
    CHECK(p2.q == 2);
    CHECK(p2.m == 4);
    LrcParams p3 = plan(12, 3, 3, 1, Route::Auto, CodeForm::Parity);
    CHECK(p3.q == 2);
    CHECK(p3.m == 4);
    LrcParams p4 = plan(6, 3, 1, 1, Route::Auto, CodeForm::Generator);
    CHECK(p4.q == 2);
    CHECK(p4.m == 2);
}

TEST_CASE("theorem routes fix (q, m) as their proofs do") {
    LrcParams t312 = plan(8, 4, 2, 1, Route::T312);
    CHECK(t312.q == 8);  // smallest power of two with q-1 >= r
    CHECK(t312.m == 3);  // max{h+a, log term}

    LrcParams t39 = plan(64, 8, 2, 1, Route::T39);
    CHECK(t39.q == 2);
    CHECK(t39.m == 7);  // max{floor(3/2)*3+1, ceil(3 + 2 log2 3)} = max{4, 7}

    LrcParams t310 = plan(64, 8, 2, 1, Route::T310);
    CHECK(t310.m == 8);  // max{r, 7}

    LrcParams t313 = plan(8, 4, 2, 1, Route::T313);
    CHECK(t313.q == 4);
    CHECK(t313.m == 4);

    LrcParams t33 = plan(8, 4, 1, 1, Route::T33);
    CHECK(t33.form == CodeForm::Generator);
    CHECK(t33.m == 4);  // m = r since 2^r >= n

    LrcParams t35 = plan(16, 8, 2, 1, Route::T35);
    CHECK(t35.m == 10);  // floor((r-a)/2)*ceil(log2 r)+1

    CHECK_THROWS_AS(plan(12, 3, 2, 1, Route::T39), Error);   // r < h+2
    CHECK_THROWS_AS(plan(12, 3, 2, 2, Route::T310), Error);  // a != 1
}

TEST_CASE("family dispatch follows the m >= r split") {
    FqPtr f2 = field_make(2, 1);
    FqPtr f4 = field_make(2, 2);
    CHECK(family_dispatch(f2, 10, 8, 7).route == "identity");  // m >= r wins
    CHECK(family_dispatch(f4, 5, 4, 3).route == "identity");
    CHECK(family_dispatch(f4, 3, 4, 3).route == "mds");
    IndependentFamily bch = family_dispatch(f2, 4, 8, 3);
    CHECK(bch.route == "bch");
    CHECK(bch.m == 4);
    IndependentFamily padded = family_dispatch(f2, 6, 8, 3);  // pad 4 -> 6
    CHECK(padded.m == 6);
    CHECK(verify_family(padded));
    CHECK_THROWS_AS(family_dispatch(f4, 2, 6, 3), Error);  // no route
}

TEST_CASE("parity construction matches the field-size formula") {
    MrLrcCode c1 = build_parity(plan(8, 4, 2, 1, Route::Manual, CodeForm::Parity, 4, 3));
    CHECK(c1.ext->degree() == 6);  // ell = 4^6
    CHECK(c1.mat.rows == 4);
    CHECK(c1.mat.cols == 8);

    MrLrcCode c2 = build_parity(plan(8, 4, 2, 1, Route::Auto, CodeForm::Parity));
    CHECK(c2.params.q == 3);
    CHECK(c2.ext->degree() == 6);

    // g = 1 degenerate: deg Q = m
    MrLrcCode c3 = build_parity(plan(4, 4, 2, 1, Route::Manual, CodeForm::Parity, 4, 4));
    CHECK(c3.ext->degree() == 4);
    CHECK(poly::gcd(*c3.fq, c3.Q, c3.coprime.members[0]).deg() == 0);

    // h = 0 degenerate: no heavy rows, ell = q
    MrLrcCode c4 = build_parity(plan(8, 4, 0, 1, Route::Auto, CodeForm::Parity));
    CHECK(c4.ext->degree() == 1);
    CHECK(c4.mat.rows == 2);
}

TEST_CASE("generator construction matches the field-size formula") {
    MrLrcCode c = build_generator(plan(8, 4, 1, 1, Route::Manual, CodeForm::Generator, 2, 4));
    CHECK(c.params.k() == 5);
    CHECK(c.ext->degree() == 8);  // min{km, gm} = min{20, 8}
    CHECK(c.mat.rows == 5);
    CHECK(c.mat.cols == 8);

    MrLrcCode c2 = build_generator(plan(6, 3, 1, 1, Route::Auto, CodeForm::Generator));
    CHECK(c2.ext->degree() == 4);  // min{3*2, 2*2}

    // k = 0 is rejected
    CHECK_THROWS_AS(plan(4, 2, 2, 1, Route::Manual, CodeForm::Generator, 4, 2), Error);
}

TEST_CASE("constructed Q is coprime with every group polynomial") {
    for (const MrLrcCode& code :
         {build_parity(plan(8, 4, 2, 1, Route::Auto, CodeForm::Parity)),
          build_parity(plan(12, 3, 3, 1, Route::Auto, CodeForm::Parity)),
          build_generator(plan(6, 3, 1, 1, Route::Auto, CodeForm::Generator))}) {
        for (const Poly& p : code.coprime.members)
            REQUIRE(poly::gcd(*code.fq, code.Q, p).deg() == 0);
    }
}

TEST_CASE("construction is deterministic") {
    MrLrcCode a = build_parity(plan(12, 4, 2, 1, Route::Auto, CodeForm::Parity));
    MrLrcCode b = build_parity(plan(12, 4, 2, 1, Route::Auto, CodeForm::Parity));
    CHECK(a.mat == b.mat);
    CHECK(a.inner_mds == b.inner_mds);
    CHECK(a.Q == b.Q);
}

TEST_CASE("embedded local rows behave like their base-field counterparts") {
    MrLrcCode code = build_parity(plan(8, 4, 2, 1, Route::Auto, CodeForm::Parity));
    const LrcParams& p = code.params;
    // rank over F_ell of the A-rows restricted to one group equals the F_q rank
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        int grp = static_cast<int>(rng.below(p.g));
        std::vector<int> cols;
        for (int j = 0; j < p.r; ++j)
            if (rng.below(2)) cols.push_back(grp * p.r + j);
        if (cols.empty()) continue;
        ExtMatrix sub(code.ext, p.a, static_cast<int>(cols.size()));
        MatrixFq subq(code.fq, p.a, static_cast<int>(cols.size()));
        for (int i = 0; i < p.a; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                sub.set(i, static_cast<int>(j), code.mat.get(grp * p.a + i, cols[j]));
                subq.at(i, static_cast<int>(j)) = code.inner_mds.at(i, cols[j] % p.r);
            }
        REQUIRE(ext_rank(sub) == fq_rank(subq));
    }
}
