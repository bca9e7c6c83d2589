#include <doctest.h>

#include "mrlrc/moore.hpp"
#include "mrlrc/poly.hpp"

using namespace mrlrc;

namespace {

ExtPtr make_tower(std::uint32_t p, unsigned t, unsigned d) {
    FqPtr base = field_make(p, t);
    return ext_make(base, poly::find_irreducible(*base, d));
}

ExtElem random_elem(const ExtField& F, Rng& rng) {
    ExtElem e = F.zero();
    for (auto& c : e) c = static_cast<std::uint32_t>(rng.below(F.base().q()));
    return e;
}

}  // namespace

TEST_CASE("moore matrix layout") {
    ExtPtr f4 = make_tower(2, 1, 2);
    ExtElem one = f4->one(), w{0, 1};
    ExtMatrix m = moore_matrix(f4, {one, w}, 2);
    CHECK(m.get(0, 0) == one);
    CHECK(m.get(0, 1) == w);
    CHECK(m.get(1, 0) == one);
    CHECK(m.get(1, 1) == ExtElem{1, 1});  // w^2 = w+1

    ExtMatrix z = moore_matrix(f4, {f4->zero()}, 3);
    for (int i = 0; i < 3; ++i) CHECK(f4->is_zero(z.at(i, 0)));
}

TEST_CASE("determinant nonzero iff independent, hand cases") {
    ExtPtr f4 = make_tower(2, 1, 2);
    ExtElem one = f4->one(), w{0, 1};
    CHECK(moore_det_nonzero(f4, {one, w}));
    CHECK(moore_det(f4, {one, w}) == one);  // w^2 - w = 1
    CHECK_FALSE(moore_det_nonzero(f4, {one, one}));
    // scalar multiples from the base field are dependent
    CHECK_FALSE(moore_det_nonzero(f4, {w, w}));
    CHECK(fq_independent(f4, {one, w}));
    CHECK_FALSE(fq_independent(f4, {w, ExtElem{1, 1}, one}));  // w + (w+1) + 1 = 0
}

TEST_CASE("determinant equals the direction-vector product at tiny sizes") {
    for (auto [p, t, d] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
             {2, 1, 2}, {2, 1, 3}, {3, 1, 2}}) {
        ExtPtr F = make_tower(p, t, d);
        Rng rng(0x50 + d + p);
        for (int trial = 0; trial < 100; ++trial) {
            int w = 1 + static_cast<int>(rng.below(d));
            std::vector<ExtElem> elems;
            for (int i = 0; i < w; ++i) elems.push_back(random_elem(*F, rng));
            REQUIRE(moore_det(F, elems) == moore_det_product_formula(F, elems));
        }
    }
}

TEST_CASE("equivalence with the exhaustive combination oracle") {
    for (auto [p, t, d] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
             {2, 1, 3}, {2, 1, 4}, {2, 2, 2}}) {
        ExtPtr F = make_tower(p, t, d);
        Rng rng(0x99 + d + 8 * t);
        for (int trial = 0; trial < 200; ++trial) {
            int w = 1 + static_cast<int>(rng.below(d));
            std::vector<ExtElem> elems;
            for (int i = 0; i < w; ++i) elems.push_back(random_elem(*F, rng));
            REQUIRE(moore_det_nonzero(F, elems) == fq_independent(F, elems));
        }
    }
}

TEST_CASE("rectangular moore rank equals the base-field span rank") {
    ExtPtr F = make_tower(2, 1, 4);
    Rng rng(0x7171);
    for (int trial = 0; trial < 200; ++trial) {
        int w = 1 + static_cast<int>(rng.below(4));
        int h = w + static_cast<int>(rng.below(3));
        std::vector<ExtElem> elems;
        for (int i = 0; i < w; ++i) elems.push_back(random_elem(*F, rng));
        REQUIRE(ext_rank(moore_matrix(F, elems, h)) == fq_span_rank(F, elems));
    }
}

TEST_CASE("oracle cap") {
    ExtPtr F = make_tower(2, 1, 3);
    std::vector<ExtElem> elems(3, F->one());
    CHECK_THROWS_AS(fq_independent(F, elems, 4), CapExceeded);
}
