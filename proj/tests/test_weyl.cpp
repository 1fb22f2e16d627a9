#include "doctest.h"

#include <random>

#include "cubiclinks/weyl.hpp"

using namespace cubiclinks;

namespace {

SurfaceClass random_class(std::mt19937& rng, long long lo = -8, long long hi = 8) {
    std::uniform_int_distribution<long long> d(lo, hi);
    SurfaceClass c;
    c.k = d(rng);
    for (auto& mi : c.m) mi = d(rng);
    return c;
}

SurfaceClass random_positive_degree(std::mt19937& rng) {
    for (;;) {
        SurfaceClass c = random_class(rng, -4, 6);
        if (degree_in_p3(c) > 0) return c;
    }
}

}  // namespace

TEST_CASE("cremona formula") {
    SurfaceClass d{6, {3, 3, 3, 3, 2, 2}};
    CHECK(cremona(d, 1, 2, 3) == SurfaceClass{3, {0, 0, 0, 3, 2, 2}});
    CHECK_THROWS_AS(cremona(d, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(cremona(d, 0, 2, 3), std::invalid_argument);
}

TEST_CASE("cremona preserves the lattice invariants and is an involution") {
    std::mt19937 rng(17);
    const SurfaceClass k = canonical_class_s();
    for (int t = 0; t < 1000; ++t) {
        SurfaceClass d = random_class(rng);
        int i = 1 + static_cast<int>(rng() % 6), j, l;
        do j = 1 + static_cast<int>(rng() % 6); while (j == i);
        do l = 1 + static_cast<int>(rng() % 6); while (l == i || l == j);
        SurfaceClass e = cremona(d, i, j, l);
        CHECK(pairing(e, e) == pairing(d, d));
        CHECK(pairing(e, k) == pairing(d, k));
        CHECK(cremona(e, i, j, l) == d);
    }
}

TEST_CASE("standardize examples") {
    auto [s1, w1] = standardize({3, {0, 0, 0, 2, 1, 0}});
    CHECK(s1 == SurfaceClass{3, {2, 1, 0, 0, 0, 0}});
    CHECK(w1.size() == 1);
    CHECK(w1[0].kind == Move::Kind::Perm);

    auto [s2, w2] = standardize({3, {2, 1, 0, 0, 0, 0}});
    CHECK(s2 == SurfaceClass{3, {2, 1, 0, 0, 0, 0}});
    CHECK(w2.empty());

    // One Cremona is not enough here: (3;3,2,2,0,0,0) still has
    // k < m1+m2+m3, so the reduction keeps going to the true fixed point.
    auto [s3, w3] = standardize({6, {3, 3, 3, 3, 2, 2}});
    CHECK(is_standard_form(s3));
    CHECK(s3 == SurfaceClass{-2, {-1, -1, -1, -1, -2, -2}});
    CHECK(apply_word({6, {3, 3, 3, 3, 2, 2}}, w3) == s3);
}

TEST_CASE("standardize round-trips and validates") {
    std::mt19937 rng(23);
    const SurfaceClass k = canonical_class_s();
    for (int t = 0; t < 500; ++t) {
        SurfaceClass d = random_positive_degree(rng);
        auto [s, w] = standardize(d);
        CHECK(is_standard_form(s));
        CHECK(apply_word(d, w) == s);
        CHECK(pairing(s, s) == pairing(d, d));
        CHECK(pairing(s, k) == pairing(d, k));
    }
    CHECK_THROWS_AS(standardize({0, {1, 1, 1, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("orbit equivalence") {
    SurfaceClass d{3, {1, 1, 0, 0, 0, 0}};
    CHECK(same_orbit(d, d));
    CHECK(same_orbit({6, {3, 3, 3, 3, 2, 2}}, {3, {3, 2, 2, 0, 0, 0}}));
    // <D,D> differs (7 vs 5), an orbit invariant.
    CHECK_FALSE(same_orbit({3, {1, 1, 0, 0, 0, 0}}, {3, {2, 0, 0, 0, 0, 0}}));

    std::mt19937 rng(29);
    for (int t = 0; t < 5; ++t) {
        SurfaceClass a = random_class(rng, 0, 2);
        SurfaceClass b = random_class(rng, 0, 2);
        CHECK(same_orbit(a, a));
        CHECK(same_orbit(a, b) == same_orbit(b, a));
    }
}
