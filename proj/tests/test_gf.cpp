#include <doctest.h>

#include "mrlrc/poly.hpp"

using namespace mrlrc;

TEST_CASE("prime field basics") {
    FqPtr f2 = field_make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->mul(1, 1) == 1);
    FqPtr f5 = field_make(5, 1);
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->mul(3, 4) == 2);
    CHECK(f5->inv(3) == 2);
    CHECK(f5->neg(2) == 3);
}

TEST_CASE("field_make picks the lexicographically smallest modulus") {
    CHECK(field_make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(field_make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
    CHECK(field_make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("field_make rejects bad input") {
    CHECK_THROWS_AS(field_make(4, 1), Error);
    CHECK_THROWS_AS(field_make(2, 25), Error);  // above the default cap
    CHECK_THROWS_AS(Fq(2, 2, {1, 0, 1}), Error);  // reducible modulus (x+1)^2
}

TEST_CASE("F4 arithmetic matches hand reduction") {
    FqPtr f4 = field_make(2, 2);
    // encodings: 2 = x, 3 = x+1
    CHECK(f4->mul(2, 2) == 3);   // x*x = x+1
    CHECK(f4->inv(2) == 3);      // x(x+1) = 1
    CHECK(f4->mul(2, 3) == 1);
    CHECK_THROWS_AS(f4->inv(0), Error);
}

TEST_CASE("field axioms hold on random elements") {
    for (auto [p, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {5, 1}}) {
        FqPtr k = field_make(p, t);
        Rng rng(0xA0 + p + t);
        for (int i = 0; i < 10000; ++i) {
            std::uint32_t a = static_cast<std::uint32_t>(rng.below(k->q()));
            std::uint32_t b = static_cast<std::uint32_t>(rng.below(k->q()));
            std::uint32_t c = static_cast<std::uint32_t>(rng.below(k->q()));
            REQUIRE(k->add(k->add(a, b), c) == k->add(a, k->add(b, c)));
            REQUIRE(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
            if (a) REQUIRE(k->mul(a, k->inv(a)) == 1);
        }
    }
}

TEST_CASE("generator generates the multiplicative group") {
    for (auto [p, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {7, 1}}) {
        FqPtr k = field_make(p, t);
        std::uint32_t g = k->generator();
        std::vector<bool> seen(k->q(), false);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i + 1 < k->q(); ++i) {
            REQUIRE(!seen[v]);
            seen[v] = true;
            v = k->mul(v, g);
        }
        CHECK(v == 1);
    }
}

TEST_CASE("extension construction and frobenius") {
    FqPtr f2 = field_make(2, 1);
    ExtPtr f4 = ext_make(f2, poly::from_text("1,1,1"));  // F_2[x]/(x^2+x+1)
    // frobenius(x, 1) = x^2 = x+1
    ExtElem x{0, 1};
    CHECK(f4->frobenius(x, 0) == x);
    CHECK(f4->frobenius(x, 1) == ExtElem{1, 1});
    CHECK(f4->frobenius(x, 2) == x);  // a^(q^D) = a

    // base-field image is fixed
    CHECK(f4->frobenius(f4->embed(1), 1) == f4->embed(1));
    CHECK(f4->frobenius(f4->zero(), 1) == f4->zero());

    // spec tower: F_16 over F_4 via x^2 + x + w
    FqPtr fq4 = field_make(2, 2);
    Poly q16 = poly::find_irreducible(*fq4, 2);
    CHECK(poly::to_text(q16) == "2,1,1");  // w + x + x^2, w the generator encoding
    ExtPtr f16 = ext_make(fq4, q16);
    CHECK(f16->degree() == 2);

    CHECK_THROWS_AS(ext_make(f2, poly::from_text("1,0,1")), Error);  // (x+1)^2 is reducible
}

TEST_CASE("degree-1 extensions are allowed") {
    FqPtr f3 = field_make(3, 1);
    ExtPtr e = ext_make(f3, poly::from_text("0,1"));  // F_3[x]/(x)
    CHECK(e->degree() == 1);
    CHECK(e->mul(e->embed(2), e->embed(2)) == e->embed(1));
}

TEST_CASE("frobenius is a field automorphism fixing exactly the base") {
    FqPtr f2 = field_make(2, 1);
    ExtPtr f8 = ext_make(f2, poly::find_irreducible(*f2, 3));
    Rng rng(77);
    int moved = 0;
    for (int i = 0; i < 2000; ++i) {
        ExtElem a = f8->zero(), b = f8->zero();
        for (auto& c : a) c = static_cast<std::uint32_t>(rng.below(2));
        for (auto& c : b) c = static_cast<std::uint32_t>(rng.below(2));
        REQUIRE(f8->frobenius(f8->add(a, b), 1) == f8->add(f8->frobenius(a, 1), f8->frobenius(b, 1)));
        REQUIRE(f8->frobenius(f8->mul(a, b), 1) == f8->mul(f8->frobenius(a, 1), f8->frobenius(b, 1)));
        bool in_base = true;
        for (std::size_t j = 1; j < a.size(); ++j) in_base = in_base && a[j] == 0;
        if (!in_base && f8->frobenius(a, 1) != a) ++moved;
        if (in_base) REQUIRE(f8->frobenius(a, 1) == a);
    }
    CHECK(moved > 0);
}

TEST_CASE("extension inversion") {
    FqPtr f2 = field_make(2, 1);
    ExtPtr f8 = ext_make(f2, poly::find_irreducible(*f2, 3));
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        ExtElem a = f8->zero();
        for (auto& c : a) c = static_cast<std::uint32_t>(rng.below(2));
        if (f8->is_zero(a)) continue;
        CHECK(f8->mul(a, f8->inv(a)) == f8->one());
    }
    CHECK_THROWS_AS(f8->inv(f8->zero()), Error);
}

TEST_CASE("canonical decimal encoding round-trips") {
    FqPtr f3 = field_make(3, 1);
    ExtPtr e = ext_make(f3, poly::find_irreducible(*f3, 4));
    CHECK(e->to_decimal(ExtElem{2, 1, 0, 2}) == std::to_string(2 + 1 * 3 + 2 * 27));
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        ExtElem a = e->zero();
        for (auto& c : a) c = static_cast<std::uint32_t>(rng.below(3));
        CHECK(e->from_decimal(e->to_decimal(a)) == a);
    }
    CHECK_THROWS_AS(e->from_decimal("81"), Error);  // out of range: 3^4
    CHECK(e->from_decimal("80") == ExtElem{2, 2, 2, 2});
}

TEST_CASE("context mismatch is detected") {
    FqPtr f2 = field_make(2, 1);
    ExtPtr f8 = ext_make(f2, poly::find_irreducible(*f2, 3));
    ExtPtr f16 = ext_make(f2, poly::find_irreducible(*f2, 4));
    ExtElem a16 = f16->one();
    CHECK_THROWS_AS(f8->add(a16, a16), Error);
    CHECK_THROWS_AS(f8->frobenius(a16, 1), Error);
}

TEST_CASE("big decimal helper") {
    BigDec n;
    n.mul_add(1000000007u, 5u);
    n.mul_add(1000000007u, 6u);
    CHECK(BigDec::parse(n.str()).str() == n.str());
    CHECK(BigDec::parse("0").is_zero());
    CHECK_THROWS_AS(BigDec::parse("12x"), Error);
}
