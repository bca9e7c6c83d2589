#include <doctest.h>

#include "mrlrc/poly.hpp"

using namespace mrlrc;

namespace {

// independent oracle: divisibility by every monic polynomial of degree <= d/2
bool trial_division_irreducible(const Fq& k, const Poly& f) {
    int d = f.deg();
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        std::vector<std::uint32_t> digits(e, 0);
        do {
            if (poly::mod(k, f, poly::monic_from_digits(e, digits)).is_zero()) return false;
        } while (poly::next_digits(k, digits));
    }
    return true;
}

}  // namespace

TEST_CASE("irreducibility examples") {
    FqPtr f2 = field_make(2, 1);
    CHECK(poly::is_irreducible(*f2, poly::from_text("1,1,1")));        // x^2+x+1
    CHECK_FALSE(poly::is_irreducible(*f2, poly::from_text("1,0,1")));  // (x+1)^2
    CHECK(poly::is_irreducible(*f2, poly::from_text("1,1,0,1")));      // x^3+x+1
    CHECK_THROWS_AS(poly::is_irreducible(*f2, Poly{}), Error);
}

TEST_CASE("irreducibility agrees with trial division") {
    for (auto [p, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
        FqPtr k = field_make(p, t);
        for (unsigned d = 1; d <= 4; ++d) {
            std::vector<std::uint32_t> digits(d, 0);
            do {
                Poly f = poly::monic_from_digits(d, digits);
                REQUIRE(poly::is_irreducible(*k, f) == trial_division_irreducible(*k, f));
            } while (poly::next_digits(*k, digits));
        }
    }
}

TEST_CASE("counting irreducibles") {
    FqPtr f2 = field_make(2, 1);
    FqPtr f3 = field_make(3, 1);
    FqPtr f4 = field_make(2, 2);
    CHECK(poly::count_irreducible(*f2, 3) == 2);
    CHECK(poly::count_irreducible(*f2, 4) == 3);
    CHECK(poly::count_irreducible(*f2, 1) == 2);
    CHECK(poly::count_irreducible(*f3, 1) == 3);
    CHECK(poly::count_irreducible(*f4, 1) == 4);
    // sum_{d|m} d N_q(d) = q^m
    for (FqPtr k : {f2, f3, f4})
        for (unsigned m = 1; m <= 8; ++m) {
            std::uint64_t sum = 0;
            for (unsigned d = 1; d <= m; ++d)
                if (m % d == 0) sum += d * poly::count_irreducible(*k, d);
            REQUIRE(sum == sat_pow(k->q(), m));
        }
}

TEST_CASE("find_irreducible enumerates canonically") {
    FqPtr f2 = field_make(2, 1);
    CHECK(poly::to_text(poly::find_irreducible(*f2, 3)) == "1,1,0,1");  // x^3+x+1
    CHECK(poly::to_text(poly::find_irreducible(*f2, 3, {poly::from_text("1,1,0,1")})) ==
          "1,0,1,1");  // next: x^3+x^2+1
    CHECK(poly::to_text(poly::find_irreducible(*f2, 2)) == "1,1,1");
    // both cubics excluded: nothing of degree 3 remains
    CHECK_THROWS_AS(
        poly::find_irreducible(*f2, 3, {poly::from_text("1,1,0,1"), poly::from_text("1,0,1,1")}),
        Error);
}

TEST_CASE("coprime families") {
    FqPtr f2 = field_make(2, 1);
    CoprimeFamily fam = coprime_family(f2, 3, 2);
    REQUIRE(fam.members.size() == 2);
    CHECK(poly::to_text(fam.members[0]) == "1,1,0,1");
    CHECK(poly::to_text(fam.members[1]) == "1,0,1,1");

    // N_2(2)=1, so the second member is the prime power x^2
    CoprimeFamily fam2 = coprime_family(f2, 2, 2);
    CHECK(poly::to_text(fam2.members[0]) == "1,1,1");
    CHECK(poly::to_text(fam2.members[1]) == "0,0,1");

    CHECK(coprime_family(f2, 4, 1).members.size() == 1);
    CHECK_THROWS_AS(coprime_family(f2, 1, 3), Error);  // only x and x+1 exist

    // pairwise gcd = 1, Euclid oracle
    FqPtr f3 = field_make(3, 1);
    for (auto [ctx, m, g] : std::vector<std::tuple<FqPtr, unsigned, unsigned>>{
             {f2, 4, 6}, {f3, 2, 5}, {f3, 3, 8}}) {
        CoprimeFamily f = coprime_family(ctx, m, g);
        REQUIRE(f.members.size() == g);
        for (std::size_t i = 0; i < f.members.size(); ++i) {
            CHECK(poly::is_monic(f.members[i]));
            CHECK(f.members[i].deg() == static_cast<int>(m));
            for (std::size_t j = i + 1; j < f.members.size(); ++j)
                REQUIRE(poly::gcd(*ctx, f.members[i], f.members[j]).deg() == 0);
        }
    }
}

TEST_CASE("modular inverse") {
    FqPtr f2 = field_make(2, 1);
    Poly q1 = poly::from_text("1,1,1");
    CHECK(poly::to_text(poly::mod_inverse(*f2, Poly::constant(1), q1)) == "1");
    CHECK(poly::to_text(poly::mod_inverse(*f2, Poly::x(), q1)) == "1,1");
    CHECK(poly::to_text(poly::mod_inverse(*f2, poly::from_text("1,1"), poly::from_text("1,1,0,1"))) ==
          "0,1,1");
    CHECK_THROWS_AS(poly::mod_inverse(*f2, Poly::x(), poly::from_text("0,0,1")), Error);

    FqPtr f3 = field_make(3, 1);
    Rng rng(11);
    int done = 0;
    while (done < 200) {
        std::vector<std::uint32_t> fc(3), qc(4);
        for (auto& c : fc) c = static_cast<std::uint32_t>(rng.below(3));
        for (auto& c : qc) c = static_cast<std::uint32_t>(rng.below(3));
        Poly f = Poly::from_coeffs(fc), Q = poly::monic_from_digits(4, qc);
        if (f.is_zero() || poly::gcd(*f3, f, Q).deg() != 0) continue;
        Poly h = poly::mod_inverse(*f3, f, Q);
        REQUIRE(poly::to_text(poly::mod(*f3, poly::mul(*f3, f, h), Q)) == "1");
        REQUIRE(h.deg() < Q.deg());
        ++done;
    }
}

TEST_CASE("polynomial text form round-trips") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::uint32_t> c(rng.below(6));
        for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(7));
        Poly f = Poly::from_coeffs(c);
        CHECK(poly::from_text(poly::to_text(f)) == f);
    }
}
