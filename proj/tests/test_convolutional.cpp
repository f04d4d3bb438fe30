#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/convolutional.hpp"

#include <vector>

#include "qc_test_util.hpp"

using namespace qc;

namespace {

Poly parse2(const std::string& s) { return Poly::parse_coeff_list(Field::get(2, 1), s); }

/// Random full-rank k x ell encoder with entry degrees below deg_bound whose
/// minor gcd is coprime to x^m - 1 for every m in `moduli` (the hypothesis of
/// the projection bound).
ConvolutionalCode random_encoder(Rng& rng, const FieldPtr& f, unsigned k, unsigned ell,
                                 unsigned deg_bound,
                                 const std::vector<unsigned>& moduli = {}) {
    for (;;) {
        std::vector<std::vector<Poly>> g;
        for (unsigned i = 0; i < k; ++i) {
            std::vector<Poly> row;
            for (unsigned j = 0; j < ell; ++j) {
                std::vector<std::uint64_t> coeffs(deg_bound);
                for (auto& c : coeffs) c = rng.below(f->order());
                row.emplace_back(f, std::move(coeffs));
            }
            g.push_back(std::move(row));
        }
        if (poly_matrix_rank(g) != k) continue;
        ConvolutionalCode c(f, std::move(g));
        Poly h = encoder_minor_gcd(c);
        bool ok = true;
        for (unsigned m : moduli)
            if (gcd(h, Poly::xm_minus_1(f, m)).degree() > 0) ok = false;
        if (ok) return c;
    }
}

}  // namespace

TEST_CASE("polynomial matrix rank over the function field") {
    auto f2 = Field::get(2, 1);
    Poly one = Poly::one(f2), x = Poly::x(f2), zero = Poly::zero(f2);
    CHECK(poly_matrix_rank({{one, x}}) == 1);
    CHECK(poly_matrix_rank({{zero, zero}}) == 0);
    // second row is x times the first: rank 1 despite no zero entries
    CHECK(poly_matrix_rank({{parse2("1,1"), one}, {parse2("0,1,1"), x}}) == 1);
    CHECK(poly_matrix_rank({{one, zero}, {zero, one}}) == 2);
    // swap needed: leading zero in the pivot position
    CHECK(poly_matrix_rank({{zero, one}, {one, zero}}) == 2);
}

TEST_CASE("encoder validation") {
    auto f2 = Field::get(2, 1);
    Poly one = Poly::one(f2), x = Poly::x(f2);
    CHECK_NOTHROW(ConvolutionalCode(f2, {{parse2("1,0,1"), parse2("1,1,1")}}));
    CHECK_THROWS_AS(ConvolutionalCode(f2, {}), std::invalid_argument);
    // rank-deficient: row 2 = x * row 1
    CHECK_THROWS_AS(ConvolutionalCode(f2, {{parse2("1,1"), one}, {parse2("0,1,1"), x}}),
                    std::invalid_argument);
    // ragged matrix
    CHECK_THROWS_AS(ConvolutionalCode(f2, {{one, x}, {one}}), std::invalid_argument);
    auto f3 = Field::get(3, 1);
    CHECK_THROWS_AS(ConvolutionalCode(f2, {{Poly::one(f3), Poly::x(f3)}}),
                    std::invalid_argument);
}

TEST_CASE("minor gcd of encoders") {
    auto f2 = Field::get(2, 1);
    // coprime entries: gcd 1
    ConvolutionalCode c1(f2, {{parse2("1,0,1"), parse2("1,1,1")}});
    CHECK(encoder_minor_gcd(c1) == Poly::one(f2));
    // common factor 1+x+x^2 across the single row
    ConvolutionalCode c2(f2, {{parse2("1,1,1"), Poly::zero(f2)}});
    CHECK(encoder_minor_gcd(c2) == parse2("1,1,1"));
    // 2x2 minors of the identity
    ConvolutionalCode c3(f2, {{Poly::one(f2), Poly::zero(f2), parse2("0,1")},
                              {Poly::zero(f2), Poly::one(f2), parse2("1,1")}});
    CHECK(encoder_minor_gcd(c3) == Poly::one(f2));
    // both rows share the factor x: minor gcd x^2
    ConvolutionalCode c4(f2, {{parse2("0,1"), Poly::zero(f2)},
                              {Poly::zero(f2), parse2("0,1")}});
    CHECK(encoder_minor_gcd(c4) == parse2("0,0,1"));
}

TEST_CASE("projection bound needs the minor-gcd hypothesis") {
    // G = (1+x+x^2, 0): the 1x1 minor gcd divides x^3-1, and indeed the m=3
    // projection distance 3 exceeds d_free = 2 (codeword (1+x)G = (1+x^3, 0)).
    // The bound is only certified when the gcds are coprime.
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{parse2("1,1,1"), Poly::zero(f2)}});
    CHECK(gcd(encoder_minor_gcd(c), Poly::xm_minus_1(f2, 3)).degree() > 0);
    CHECK(dfree_search(c, 4) == 2);
    CHECK(dfree_lower_bound(c, 3).value == ExtNat::of(3));  // invalid as a d_free bound
    // m = 5 keeps the gcds coprime and the certified bound holds
    CHECK(gcd(encoder_minor_gcd(c), Poly::xm_minus_1(f2, 5)).degree() == 0);
    CHECK(dfree_lower_bound(c, 5).value <= ExtNat::of(2));
}

TEST_CASE("projection of the memory-2 rate-1/2 encoder") {
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{parse2("1,0,1"), parse2("1,1,1")}});
    QCCode p = project(c, 3);
    CHECK(p.m() == 3);
    CHECK(p.ell() == 2);
    // (1+x) * (1+x^2, 1+x+x^2) reduced mod x^3-1 equals (x+x^2, 0)
    CHECK(p.expand().contains(Vec{0, 0, 1, 0, 1, 0}));
    CHECK_THROWS_AS(project(c, 1), std::invalid_argument);
}

TEST_CASE("projection leaves low-degree encoders unchanged") {
    auto f3 = Field::get(3, 1);
    Rng rng(0x5eedull);
    for (int t = 0; t < 10; ++t) {
        ConvolutionalCode c = random_encoder(rng, f3, 2, 3, 3);
        QCCode p = project(c, 5);
        REQUIRE(p.generators().size() == 2);
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 3; ++j) CHECK(p.generators()[i][j] == c.encoder()[i][j]);
    }
}

TEST_CASE("projection is a module homomorphism") {
    auto f2 = Field::get(2, 1);
    Rng rng(0xabcdull);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::uint64_t> gc(6), ac(4);
        for (auto& v : gc) v = rng.below(2);
        for (auto& v : ac) v = rng.below(2);
        Poly g(f2, gc), a(f2, ac);
        for (unsigned m : {3, 5, 7}) {
            Poly xm1 = Poly::xm_minus_1(f2, m);
            CHECK((a * g) % xm1 == ((a % xm1) * (g % xm1)) % xm1);
        }
    }
}

TEST_CASE("free distance bound and search on the classic rate-1/2 code") {
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{parse2("1,0,1"), parse2("1,1,1")}});
    DfreeBound b = dfree_lower_bound(c, 3);
    CHECK(b.exact);
    CHECK(b.value == ExtNat::of(2));
    CHECK(dfree_search(c, 4) == 5);
}

TEST_CASE("repetition encoder (1,1)") {
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{Poly::one(f2), Poly::one(f2)}});
    for (unsigned m : {3, 5, 7}) {
        DfreeBound b = dfree_lower_bound(c, m);
        CHECK(b.exact);
        CHECK(b.value == ExtNat::of(2));
    }
    CHECK(dfree_search(c, 0) == 2);
}

TEST_CASE("unit row gives the trivial bound") {
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{Poly::one(f2), Poly::zero(f2)}});
    DfreeBound b = dfree_lower_bound(c, 3);
    CHECK(b.exact);
    CHECK(b.value == ExtNat::of(1));
    CHECK(dfree_search(c, 2) == 1);
}

TEST_CASE("search budget is enforced") {
    auto f2 = Field::get(2, 1);
    ConvolutionalCode c(f2, {{parse2("1,0,1"), parse2("1,1,1")}});
    CHECK_THROWS_AS(dfree_search(c, 4, /*budget=*/16), BudgetError);
}

TEST_CASE("lower bound never exceeds the capped search") {
    Rng rng(0xc0ffeeull);
    auto f2 = Field::get(2, 1);
    int tested = 0;
    while (tested < 20) {
        unsigned k = 1 + rng.below(2);  // (2,1) and (3,1)-style shapes
        unsigned ell = k + 1 + rng.below(2);
        ConvolutionalCode c = random_encoder(rng, f2, k, ell, 3, {3, 5, 7});
        std::uint64_t upper = dfree_search(c, 6);
        for (unsigned m : {3, 5, 7}) {
            DfreeBound b = dfree_lower_bound(c, m);
            CHECK(b.value <= ExtNat::of(upper));
        }
        ++tested;
    }
}
