#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/linear_code.hpp"

using namespace qc;

namespace {

// [7,4,3] Hamming code
LinearCode hamming7() {
    return LinearCode(Field::get(2, 1), 7,
                      {{1, 0, 0, 0, 1, 1, 0},
                       {0, 1, 0, 0, 0, 1, 1},
                       {0, 0, 1, 0, 1, 1, 1},
                       {0, 0, 0, 1, 1, 0, 1}});
}

}  // namespace

TEST_CASE("rank, basis, membership") {
    auto f2 = Field::get(2, 1);
    LinearCode c(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}});
    CHECK(c.dim() == 2);
    CHECK(c.contains({1, 1, 1, 1}));
    CHECK(c.contains({0, 0, 0, 0}));
    CHECK_FALSE(c.contains({1, 0, 0, 0}));

    // same code from a different generating set compares equal
    LinearCode c2(f2, 4, {{1, 1, 1, 1}, {1, 1, 0, 0}});
    CHECK(c == c2);
    CHECK(c != LinearCode::full(f2, 4));

    CHECK(LinearCode::zero(f2, 4).dim() == 0);
    CHECK(LinearCode::full(f2, 4).dim() == 4);
}

TEST_CASE("Euclidean dual") {
    auto h = hamming7();
    auto d = h.dual();
    CHECK(d.dim() == 3);
    // duality pairing vanishes
    for (const auto& u : h.basis()) {
        for (const auto& v : d.basis()) {
            std::uint64_t s = 0;
            for (unsigned i = 0; i < 7; ++i) s ^= u[i] & v[i];
            CHECK(s == 0);
        }
    }
    CHECK(d.dual() == h);
    // the Hamming code contains its dual (the simplex code)
    CHECK(h.intersect(d) == d);
    CHECK(h.hull() == d);
    CHECK(h.sum(d) == h);
}

TEST_CASE("self-dual binary [4,2]") {
    auto f2 = Field::get(2, 1);
    LinearCode c(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(c.dual() == c);
    CHECK(c.hull() == c);
}

TEST_CASE("Hermitian dual over GF(4)") {
    auto f4 = Field::get(2, 2);
    std::uint64_t b = f4->gen().value();
    LinearCode c(f4, 2, {{1, b}});
    auto d = c.dual(DualMode::Hermitian);
    CHECK(d.dim() == 1);
    CHECK(d == c);  // Hermitian self-dual
    CHECK(c.hull(DualMode::Hermitian) == c);

    // Hermitian differs from Euclidean here
    CHECK(c.dual(DualMode::Euclidean) != c);

    // Hermitian dual is only defined for square-order fields
    CHECK_THROWS_AS(LinearCode::full(Field::get(2, 1), 2).dual(DualMode::Hermitian),
                    std::invalid_argument);
}

TEST_CASE("intersection and sum dimensions") {
    auto f3 = Field::get(3, 1);
    LinearCode a(f3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    LinearCode b(f3, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
    CHECK(a.intersect(b).dim() == 1);
    CHECK(a.sum(b).dim() == 3);
    CHECK(a.intersect(b).contains({0, 1, 0, 0}));
}

TEST_CASE("exact minimum distance, binary fast path") {
    CHECK(hamming7().min_distance_exact() == ExtNat::of(3));
    CHECK(hamming7().dual().min_distance_exact() == ExtNat::of(4));  // simplex [7,3,4]
    auto f2 = Field::get(2, 1);
    CHECK(LinearCode::full(f2, 5).min_distance_exact() == ExtNat::of(1));
    CHECK(LinearCode(f2, 6, {{1, 1, 1, 1, 1, 1}}).min_distance_exact() == ExtNat::of(6));
    CHECK(LinearCode::zero(f2, 5).min_distance_exact() == ExtNat::infinity());
}

TEST_CASE("exact minimum distance over larger fields") {
    auto f3 = Field::get(3, 1);
    // tetracode [4,2,3]
    LinearCode tetra(f3, 4, {{1, 1, 1, 0}, {0, 1, 2, 1}});
    CHECK(tetra.min_distance_exact() == ExtNat::of(3));

    // hexacode [6,3,4] over GF(4)
    auto f4 = Field::get(2, 2);
    std::uint64_t w = f4->gen().value();
    LinearCode hexa(f4, 6,
                    {{1, 0, 0, 1, w, w}, {0, 1, 0, w, 1, w}, {0, 0, 1, w, w, 1}});
    CHECK(hexa.min_distance_exact() == ExtNat::of(4));
}

TEST_CASE("distance enumeration respects the budget") {
    auto f2 = Field::get(2, 1);
    CHECK_THROWS_AS(LinearCode::full(f2, 40).min_distance_exact(1000), BudgetError);
    // just under the limit works
    CHECK(LinearCode::full(f2, 10).min_distance_exact(1024) == ExtNat::of(1));
}

TEST_CASE("null space") {
    auto f2 = Field::get(2, 1);
    Mat rows = {{1, 1, 0}, {0, 1, 1}};
    auto ns = null_space(f2, rows, 3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vec{1, 1, 1});
    CHECK(null_space(f2, {}, 3).size() == 3);
}
