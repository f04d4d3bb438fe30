#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qc/bounds.hpp"
#include "qc/crt.hpp"
#include "qc_test_util.hpp"

using namespace qc;
using testutil::random_qc;

namespace {

/// Cyclic code over base of length m whose zero set is exactly the union of
/// the cyclotomic cosets selected by factor_indices.
QCCode cyclic_with_zeros(const Xm1Factorization& fac, const std::vector<size_t>& factor_indices) {
    Poly g = Poly::one(fac.base);
    for (size_t i : factor_indices) g = g * fac.factors[i].poly;
    return QCCode(fac.base, fac.m, 1, {{g}});
}

ZeroSet coset_union(const Xm1Factorization& fac, const std::vector<size_t>& factor_indices) {
    std::vector<unsigned> exps;
    for (size_t i : factor_indices)
        for (unsigned u : fac.factors[i].coset) exps.push_back(u);
    return {fac.m, exps};
}

}  // namespace

TEST_CASE("zero set basics") {
    ZeroSet p(7, std::vector<unsigned>{1, 2, 4, 8});  // 8 wraps to 1
    CHECK(p.size() == 3);
    CHECK(p.contains(1));
    CHECK(p.contains(4));
    CHECK(!p.contains(0));
    CHECK(p.exponents() == std::vector<unsigned>{1, 2, 4});
    CHECK(p.str() == "{1,2,4}");
    CHECK(!p.empty());
    CHECK(!p.full());
    CHECK(ZeroSet(3, std::vector<unsigned>{0, 1, 2}).full());
}

TEST_CASE("cyclic d_P rejects empty and full sets") {
    CHECK_THROWS_AS(cyclic_dP(ZeroSet(7, std::uint64_t{0}), CyclicMethod::Bch),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyclic_dP(ZeroSet(7, std::vector<unsigned>{0, 1, 2, 3, 4, 5, 6}),
                              CyclicMethod::Bch),
                    std::invalid_argument);
}

TEST_CASE("BCH bound on classic zero sets") {
    // Hamming [7,4]: zeros {1,2,4}; the longest run is {1,2}.
    CHECK(cyclic_dP(ZeroSet(7, std::vector<unsigned>{1, 2, 4}), CyclicMethod::Bch).value ==
          ExtNat::of(3));
    // single zero
    CHECK(cyclic_dP(ZeroSet(7, std::vector<unsigned>{0}), CyclicMethod::Bch).value ==
          ExtNat::of(2));
    // BCH [15,7,5]: cosets of 1 and 3
    CHECK(cyclic_dP(ZeroSet(15, std::vector<unsigned>{1, 2, 4, 8, 3, 6, 12, 9}),
                    CyclicMethod::Bch)
              .value == ExtNat::of(5));
    // a run hidden behind a non-unit stride: {0,2,4} with step 2 mod 7
    CHECK(cyclic_dP(ZeroSet(7, std::vector<unsigned>{0, 2, 4}), CyclicMethod::Bch).value ==
          ExtNat::of(4));
}

TEST_CASE("repetition code zero set") {
    // zeros = all nonzero exponents: m-1 consecutive, distance m
    for (unsigned m : {3u, 5u, 7u}) {
        std::vector<unsigned> exps;
        for (unsigned k = 1; k < m; ++k) exps.push_back(k);
        CHECK(cyclic_dP(ZeroSet(m, exps), CyclicMethod::Bch).value == ExtNat::of(m));
        CHECK(cyclic_dP(ZeroSet(m, exps), CyclicMethod::Shift).value == ExtNat::of(m));
    }
}

TEST_CASE("Roos with M restricted to the unit reproduces BCH") {
    Rng rng(0x5eed);
    CyclicOpts unit;
    unit.roos_unit_m_only = true;
    for (unsigned m : {7u, 9u, 15u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uint64_t mask = rng.next() & ((1ull << m) - 1);
            if (mask == 0 || mask == (1ull << m) - 1) continue;
            ZeroSet p(m, mask);
            CHECK(cyclic_dP(p, CyclicMethod::Roos, unit).value ==
                  cyclic_dP(p, CyclicMethod::Bch).value);
        }
    }
}

TEST_CASE("bound hierarchy and soundness on coset-closed zero sets") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 7}, {2, 15}, {3, 8}, {4, 5}}) {
        auto fac = factor_xm1(Field::of_order(q), m);
        size_t s = fac.size();
        for (std::uint64_t sel = 1; sel + 1 < (1ull << s); ++sel) {
            std::vector<size_t> idx;
            for (size_t i = 0; i < s; ++i)
                if ((sel >> i) & 1) idx.push_back(i);
            ZeroSet p = coset_union(fac, idx);
            ExtNat exact = cyclic_with_zeros(fac, idx).expand().min_distance_exact();
            ExtNat bch = cyclic_dP(p, CyclicMethod::Bch).value;
            ExtNat ht = cyclic_dP(p, CyclicMethod::Ht).value;
            ExtNat roos = cyclic_dP(p, CyclicMethod::Roos).value;
            ExtNat shift = cyclic_dP(p, CyclicMethod::Shift).value;
            CHECK(bch <= ht);
            CHECK(ht <= shift);
            CHECK(bch <= roos);
            CHECK(shift <= exact);
            CHECK(roos <= exact);
        }
    }
}

TEST_CASE("eigenstructure of a small two-column code") {
    auto f2 = Field::get(2, 1);
    Poly one = Poly::one(f2), x = Poly::x(f2), zero = Poly::zero(f2);
    QCCode c(f2, 3, 2, {{x + one, zero}, {zero, one}});
    auto es = eigenstructure(c);
    CHECK(es.m == 3);
    CHECK(es.ell == 2);
    CHECK(es.exponents == std::vector<unsigned>{0});
    CHECK(es.multiplicity == std::vector<unsigned>{1});
    REQUIRE(es.eigenspaces.size() == 1);
    LinearCode v(es.splitting, 2, es.eigenspaces[0]);
    CHECK(v.dim() == 1);
    CHECK(v.contains({es.splitting->one().value(), 0}));
    // H = (1,1,1) (x) (1,0)
    REQUIRE(es.parity_check.size() == 1);
    std::uint64_t o = es.splitting->one().value();
    CHECK(es.parity_check[0] == Vec{o, 0, o, 0, o, 0});
}

TEST_CASE("eigenstructure invariants on random codes") {
    Rng rng(0xe16e);
    for (std::uint64_t q : {2u, 3u}) {
        for (unsigned m : {3u, 5u, 7u}) {
            if (m % q == 0) continue;
            for (unsigned ell : {1u, 2u, 3u}) {
                auto base = Field::of_order(q);
                auto c = random_qc(rng, base, m, ell, 2);
                auto es = eigenstructure(c);
                unsigned total = std::accumulate(es.multiplicity.begin(), es.multiplicity.end(), 0u);
                CHECK(total == m * ell - c.dimension());
                const auto& f = es.splitting;
                for (const auto& w : c.expand().basis()) {
                    for (const auto& h : es.parity_check) {
                        std::uint64_t acc = 0;
                        for (size_t t = 0; t < w.size(); ++t)
                            acc = f->add(acc, f->mul(h[t], base->embed_to(w[t], *f)));
                        CHECK(acc == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("eigencode expansion") {
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    std::uint64_t o = f4->one().value(), b = f4->gen().value();

    // empty eigenspace -> full code; full eigenspace -> zero code
    CHECK(eigencode(f4, {}, 3, f2) == LinearCode::full(f2, 3));
    CHECK(eigencode(f4, {{o, 0}, {0, o}}, 2, f2).is_zero());

    // v = (1, beta): u0 + beta*u1 = 0 has no nonzero GF(2) solution
    CHECK(eigencode(f4, {{o, b}}, 2, f2).is_zero());
    // v = (1, 1): solutions {00, 11}
    LinearCode ec = eigencode(f4, {{o, o}}, 2, f2);
    CHECK(ec.dim() == 1);
    CHECK(ec.contains({1, 1}));

    CHECK_THROWS_AS(eigencode(Field::get(3, 2), {}, 2, f2), std::invalid_argument);
}

TEST_CASE("spectral bound on the Hamming code") {
    auto f2 = Field::get(2, 1);
    auto fac = factor_xm1(f2, 7);
    // degree-3 factor with zeros {xi, xi^2, xi^4}
    Poly g = fac.factors[fac.factor_of_exponent(1)].poly;
    QCCode ham(f2, 7, 1, {{g}});
    CHECK(ham.expand().min_distance_exact() == ExtNat::of(3));

    auto es = eigenstructure(ham);
    CHECK(es.eigenvalue_set().exponents() == std::vector<unsigned>{1, 2, 4});

    auto direct = spectral_bound(ham, ZeroSet(7, std::vector<unsigned>{1, 2}), CyclicMethod::Bch);
    CHECK(direct.value == ExtNat::of(3));
    CHECK(spectral_search(ham, CyclicMethod::Bch).value == ExtNat::of(3));
    CHECK(spectral_search(ham, CyclicMethod::Shift).value == ExtNat::of(3));

    CHECK_THROWS_AS(
        spectral_bound(ham, ZeroSet(7, std::vector<unsigned>{0, 1}), CyclicMethod::Bch),
        std::invalid_argument);
}

TEST_CASE("spectral bound reduces to the cyclic bound at index 1") {
    Rng rng(0xc1c1);
    for (std::uint64_t q : {2u, 3u}) {
        for (unsigned m : {7u, 9u}) {
            if (m % q == 0) continue;
            auto fac = factor_xm1(Field::of_order(q), m);
            for (int trial = 0; trial < 6; ++trial) {
                std::uint64_t sel = 1 + rng.below((1ull << fac.size()) - 2);
                std::vector<size_t> idx;
                for (size_t i = 0; i < fac.size(); ++i)
                    if ((sel >> i) & 1) idx.push_back(i);
                auto c = cyclic_with_zeros(fac, idx);
                ZeroSet omega = coset_union(fac, idx);
                CHECK(spectral_search(c, CyclicMethod::Bch).value ==
                      cyclic_dP(omega, CyclicMethod::Bch).value);
            }
        }
    }
}

TEST_CASE("spectral bound on degenerate codes") {
    auto f2 = Field::get(2, 1);
    CHECK(spectral_search(QCCode::full(f2, 5, 2), CyclicMethod::Bch).value == ExtNat::of(1));
    CHECK(spectral_search(QCCode::zero(f2, 5, 2), CyclicMethod::Bch).value.is_infinite());
}

TEST_CASE("spectral value can be limited by the eigencode") {
    auto f2 = Field::get(2, 1);
    Poly one = Poly::one(f2), x = Poly::x(f2), zero = Poly::zero(f2);
    // the second column is free, so weight-1 words exist; the eigencode term
    // must pull the bound down to 1
    QCCode c(f2, 3, 2, {{x + one, zero}, {zero, one}});
    CHECK(c.expand().min_distance_exact() == ExtNat::of(1));
    CHECK(spectral_search(c, CyclicMethod::Bch).value == ExtNat::of(1));
    CHECK(spectral_search(c, CyclicMethod::Shift).value == ExtNat::of(1));
}

TEST_CASE("Jensen bound on the cubic construction example") {
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    LinearCode c1(f2, 2, {{1, 1}});
    LinearCode c2(f4, 2, {{1, f4->gen().value()}});
    auto c = cubic_construction(c1, c2);
    auto jb = jensen_bound(c);
    CHECK(jb.value == ExtNat::of(2));
    CHECK(c.expand().min_distance_exact() == ExtNat::of(2));
}

TEST_CASE("Jensen bound on zero and repetition codes") {
    auto f2 = Field::get(2, 1);
    CHECK(jensen_bound(QCCode::zero(f2, 7, 2)).value.is_infinite());
    // full repetition module <(1,1)>: constituents all nonzero
    Poly one = Poly::one(f2);
    QCCode rep(f2, 7, 2, {{one, one}});
    ExtNat d = rep.expand().min_distance_exact();
    CHECK(jensen_bound(rep).value <= d);
}

TEST_CASE("Lally bound on the two-column desk example") {
    auto f2 = Field::get(2, 1);
    Poly e(f2, {1, 1});  // 1 + x
    QCCode c(f2, 3, 2, {{e, e}});
    auto lb = lally_bound(c);
    CHECK(lb.value == ExtNat::of(4));
    CHECK(c.expand().min_distance_exact() == ExtNat::of(4));
}

TEST_CASE("Lally bound degenerate cases") {
    auto f2 = Field::get(2, 1);
    CHECK(lally_bound(QCCode::zero(f2, 3, 2)).value.is_infinite());
    CHECK(lally_bound(QCCode::full(f2, 3, 2)).value == ExtNat::of(1));
}

TEST_CASE("bound report is sound on random codes") {
    Rng rng(0xb0b0);
    for (std::uint64_t q : {2u, 3u}) {
        for (unsigned m : {3u, 5u, 7u}) {
            if (m % q == 0) continue;
            for (unsigned ell : {2u, 3u}) {
                auto c = random_qc(rng, Field::of_order(q), m, ell, 2);
                // throws std::logic_error internally if any bound exceeds exact
                auto rep = best_bounds(c, true);
                REQUIRE(rep.exact.has_value());
                CHECK(rep.length == m * ell);
                CHECK(rep.bounds.size() == 6);
                CHECK(rep.bounds[0].first == "jensen");
                CHECK(rep.bounds[1].first == "lally");
                CHECK(rep.bounds[2].first == "spectral_bch");
                CHECK(rep.bounds[5].first == "spectral_shift");
                for (const auto& [name, entry] : rep.bounds) CHECK(entry.value <= *rep.exact);
            }
        }
    }
}
