#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/duality.hpp"

#include "qc_test_util.hpp"

using namespace qc;
using testutil::qc_from_rows;
using testutil::random_qc;

namespace {

Poly parse2(const std::string& s) { return Poly::parse_coeff_list(Field::get(2, 1), s); }

QCCode expanded_dual(const QCCode& c) {
    return qc_from_rows(c.field(), c.m(), c.ell(), c.expand().dual().basis());
}

QCCode cubic_example() {
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    return cubic_construction(LinearCode(f2, 2, {{1, 1}}),
                              LinearCode(f4, 2, {{1, f4->gen().value()}}));
}

}  // namespace

TEST_CASE("inner product assignment") {
    auto p2 = DualityProfile::of(Field::get(2, 1), 15);
    // factors: x-1 (Euclidean), deg-4 self-reciprocal at u=3 (Hermitian),
    // deg-2 self-reciprocal at u=5 (Hermitian), one reciprocal pair
    CHECK(p2.mode[0] == DualMode::Euclidean);
    CHECK(p2.mode[2] == DualMode::Hermitian);
    CHECK(p2.mode[3] == DualMode::Hermitian);

    // q odd, m even: x+1 is the second Euclidean exception
    auto p3 = DualityProfile::of(Field::get(3, 1), 4);
    size_t xplus1 = p3.fac.factor_of_exponent(2);
    CHECK(p3.fac.factors[xplus1].poly == Poly(Field::get(3, 1), {1, 1}));
    CHECK(p3.mode[xplus1] == DualMode::Euclidean);
    CHECK(p3.mode[0] == DualMode::Euclidean);
}

TEST_CASE("dual constituents match the expanded dual") {
    Rng rng(0xdead);
    for (unsigned m : {3u, 5u, 7u}) {
        for (unsigned ell : {2u, 3u}) {
            for (unsigned q : {2u, 3u}) {
                if (m % q == 0) continue;
                auto f = Field::get(q, 1);
                for (int rep = 0; rep < 4; ++rep) {
                    auto c = random_qc(rng, f, m, ell, 1 + rng.below(2));
                    auto viaConstituents = dual_constituents(c);
                    auto direct = decompose(expanded_dual(c));
                    for (size_t i = 0; i < viaConstituents.parts.size(); ++i) {
                        CHECK(viaConstituents.parts[i].code == direct.parts[i].code);
                    }
                }
            }
        }
    }
}

TEST_CASE("dual_constituents is an involution") {
    Rng rng(44);
    auto c = random_qc(rng, Field::get(2, 1), 7, 2, 2);
    auto once = dual_constituents(c);
    auto back = dual_constituents(jensen_concatenate(once.fac, once.ell, once.parts));
    auto orig = decompose(c);
    for (size_t i = 0; i < orig.parts.size(); ++i) {
        CHECK(back.parts[i].code == orig.parts[i].code);
    }
}

TEST_CASE("self-dual detection") {
    auto c = cubic_example();
    auto v = is_self_dual(c);
    CHECK(v.holds);
    // direct confirmation on the expansion
    CHECK(c.expand().dual() == c.expand());
    CHECK(c.dimension() * 2 == c.length());

    auto full = QCCode::full(Field::get(2, 1), 3, 2);
    auto vf = is_self_dual(full);
    CHECK_FALSE(vf.holds);
    CHECK(vf.failing_index.has_value());
    CHECK(vf.witness.has_value());
}

TEST_CASE("self-dual via zero/full pair constituents") {
    // C'_t = 0 and C''_t full, with a self-dual part at x-1
    auto f2 = Field::get(2, 1);
    auto fac = factor_xm1(f2, 7);
    auto e = fac.constituent_field(1);
    std::vector<Constituent> parts{
        {0, 0, f2, LinearCode(f2, 2, {{1, 1}})},
        {1, fac.factors[1].leader, e, LinearCode::zero(e, 2)},
        {2, fac.factors[2].leader, e, LinearCode::full(e, 2)},
    };
    auto c = jensen_concatenate(fac, 2, parts);
    CHECK(is_self_dual(c).holds);
    CHECK(c.expand().dual() == c.expand());

    // swapping which side is full also works
    std::swap(parts[1].code, parts[2].code);
    auto c2 = jensen_concatenate(fac, 2, parts);
    CHECK(is_self_dual(c2).holds);
}

TEST_CASE("LCD detection") {
    auto f2 = Field::get(2, 1);
    CHECK(is_lcd(QCCode::full(f2, 3, 2)).holds);
    // binary self-dual codes are never LCD
    auto v = is_lcd(cubic_example());
    CHECK_FALSE(v.holds);
    CHECK(v.witness.has_value());
}

TEST_CASE("constituent checks agree with expanded checks, exhaustively") {
    auto f2 = Field::get(2, 1);
    // all 1-generator binary QC codes with m = 3, ell = 2
    for (unsigned a = 0; a < 8; ++a) {
        for (unsigned b = 0; b < 8; ++b) {
            std::vector<std::uint64_t> ca{a & 1u, (a >> 1) & 1u, (a >> 2) & 1u};
            std::vector<std::uint64_t> cb{b & 1u, (b >> 1) & 1u, (b >> 2) & 1u};
            QCCode c(f2, 3, 2, {{Poly(f2, ca), Poly(f2, cb)}});
            const auto& e = c.expand();
            bool sd_direct = e.dual() == e;
            bool lcd_direct = e.hull().is_zero();
            CHECK(is_self_dual(c).holds == sd_direct);
            CHECK(is_lcd(c).holds == lcd_direct);
        }
    }
}

TEST_CASE("cubic construction self-duality criterion, exhaustively") {
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    // every C1 in F_2^2 (as spans of up to two vectors), every C2 in F_4^2
    std::vector<LinearCode> c1s, c2s;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            c1s.push_back(LinearCode(f2, 2, {{a & 1u, (a >> 1) & 1u}, {b & 1u, (b >> 1) & 1u}}));
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b)
            c2s.push_back(LinearCode(f4, 2, {{a & 3u, (a >> 2) & 3u}, {b & 3u, (b >> 2) & 3u}}));
    for (const auto& c1 : c1s) {
        bool c1sd = c1.dual() == c1;
        for (const auto& c2 : c2s) {
            bool c2sd = c2.dual(DualMode::Hermitian) == c2;
            auto c = cubic_construction(c1, c2);
            CHECK(is_self_dual(c).holds == (c1sd && c2sd));
        }
    }
}

TEST_CASE("build_qccd over m = 7") {
    auto f2 = Field::get(2, 1);
    auto fac = factor_xm1(f2, 7);
    auto e = fac.constituent_field(1);  // GF(8)
    LinearCode part(e, 2, {{1, 0}});
    auto c = build_qccd(f2, 7, 2, {{1, part}});
    CHECK(c.length() == 14);
    CHECK(c.dimension() == 6);  // 2 * 3 * 1
    CHECK(is_lcd(c).holds);
    CHECK(c.expand().hull().is_zero());
}

TEST_CASE("build_qccd rejects non-LCD parts") {
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    // (1, beta) is Hermitian self-orthogonal, so it cannot sit at the
    // self-reciprocal factor x^2+x+1
    LinearCode bad(f4, 2, {{1, f4->gen().value()}});
    CHECK_THROWS_AS(build_qccd(f2, 3, 2, {{1, bad}}), std::invalid_argument);

    // empty parts give the zero code, trivially LCD
    auto z = build_qccd(f2, 3, 2, {});
    CHECK(z.dimension() == 0);
    CHECK(is_lcd(z).holds);
}
