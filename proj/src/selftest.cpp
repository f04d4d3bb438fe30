#include "qc/selftest.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "qc/bounds.hpp"
#include "qc/convolutional.hpp"
#include "qc/counting.hpp"
#include "qc/crt.hpp"
#include "qc/duality.hpp"

namespace qc {

namespace {

/// Accumulates check failures; keeps only the first for the report.
struct Tally {
    unsigned checked = 0;
    unsigned failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }
};

CriterionResult finish(int id, const std::string& name, const Tally& t,
                       const std::string& extra = "") {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = t.failed == 0;
    std::ostringstream os;
    if (r.passed) {
        os << t.checked << " checks";
        if (!extra.empty()) os << "; " << extra;
    } else {
        os << t.failed << " of " << t.checked << " checks failed; first: " << t.first_failure;
    }
    r.detail = os.str();
    return r;
}

QCCode random_code(Rng& rng, const FieldPtr& base, unsigned m, unsigned ell, unsigned n_gens) {
    std::vector<std::vector<Poly>> gens;
    for (unsigned g = 0; g < n_gens; ++g) {
        std::vector<Poly> row;
        for (unsigned j = 0; j < ell; ++j) {
            std::vector<std::uint64_t> coeffs(m);
            for (auto& c : coeffs) c = rng.below(base->order());
            row.emplace_back(base, std::move(coeffs));
        }
        gens.push_back(std::move(row));
    }
    return QCCode(base, m, ell, std::move(gens));
}

bool same_code(const QCCode& a, const QCCode& b) {
    return a.expand().basis() == b.expand().basis();
}

/// All codewords of a small linear code over its own field.
Mat enumerate_codewords(const LinearCode& c) {
    const auto& f = c.field();
    Mat words{Vec(c.length(), 0)};
    for (const auto& b : c.basis()) {
        Mat next;
        for (const auto& w : words)
            for (std::uint64_t s = 0; s < f->order(); ++s) {
                Vec v = w;
                for (unsigned i = 0; i < c.length(); ++i) v[i] = f->add(v[i], f->mul(s, b[i]));
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    return words;
}

/// Visit the reduced-row-echelon generator matrix of every k-dimensional
/// subspace of GF(q)^n.
template <typename Visit>
void for_each_subspace(const FieldPtr& f, unsigned n, unsigned k, Visit visit) {
    if (k == 0) {
        visit(Mat{});
        return;
    }
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
        std::vector<std::pair<unsigned, unsigned>> cells;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = piv[i] + 1; j < n; ++j) {
                bool is_pivot = false;
                for (unsigned t = 0; t < k; ++t)
                    if (piv[t] == j) is_pivot = true;
                if (!is_pivot) cells.emplace_back(i, j);
            }
        std::vector<std::uint64_t> fill(cells.size(), 0);
        for (;;) {
            Mat g(k, Vec(n, 0));
            for (unsigned i = 0; i < k; ++i) g[i][piv[i]] = 1;
            for (size_t t = 0; t < cells.size(); ++t) g[cells[t].first][cells[t].second] = fill[t];
            visit(g);
            size_t t = 0;
            while (t < fill.size() && fill[t] == f->order() - 1) fill[t++] = 0;
            if (t == fill.size()) break;
            ++fill[t];
        }
        unsigned i = k;
        while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (unsigned j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

// ---------------------------------------------------------------------------

/// Splitting-field order q^{ord_m(q)}, or 0 when it overflows the field
/// budget of 2^20.
std::uint64_t splitting_order(std::uint64_t q, unsigned m) {
    std::uint64_t acc = 1, pw = 1;
    for (unsigned e = 1;; ++e) {
        acc = acc * q % m;
        if (pw > (1ull << 20) / q) return 0;
        pw *= q;
        if (acc == 1) return pw;
    }
}

CriterionResult factorization_suite() {
    Tally t;
    unsigned instances = 0, skipped = 0;
    for (std::uint64_t q : {2, 3, 4, 5}) {
        auto f = Field::of_order(q);
        for (unsigned m = 2; m <= 30; ++m) {
            if (std::gcd<std::uint64_t>(m, f->p()) != 1) continue;
            if (splitting_order(q, m) == 0) {
                ++skipped;  // splitting field above the 2^20 field budget
                continue;
            }
            ++instances;
            auto tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
            auto fac = factor_xm1(f, m);
            Poly prod = Poly::one(f);
            for (const auto& fa : fac.factors) prod = prod * fa.poly;
            t.expect(prod == Poly::xm_minus_1(f, m), tag + ": product of factors");
            for (size_t i = 0; i < fac.size(); ++i)
                for (size_t j = i + 1; j < fac.size(); ++j)
                    t.expect(gcd(fac.factors[i].poly, fac.factors[j].poly).degree() == 0,
                             tag + ": coprimality");
            t.expect(fac.self_reciprocal_indices.size() + 2 * fac.pair_indices.size() ==
                         fac.size(),
                     tag + ": s = n + 2p");
        }
    }
    return finish(1, "factorization", t,
                  std::to_string(instances) + " (q,m) pairs; " + std::to_string(skipped) +
                      " above the field budget skipped");
}

CriterionResult structure_suite() {
    Tally t;
    Rng rng(101);
    for (int inst = 0; inst < 200; ++inst) {
        auto base = Field::get(inst % 2 == 0 ? 2 : 3, 1);
        unsigned m = std::vector<unsigned>{3, 5, 7}[rng.below(3)];
        if (base->p() == 3 && m == 3) m = 5;
        unsigned ell = 2 + static_cast<unsigned>(rng.below(2));
        QCCode c = random_code(rng, base, m, ell, 1 + static_cast<unsigned>(rng.below(2)));
        const auto& g = c.groebner();
        Poly xm1 = Poly::xm_minus_1(base, m);
        unsigned degsum = 0;
        for (unsigned i = 0; i < ell; ++i) {
            for (unsigned j = 0; j < i; ++j) t.expect(g.at(i, j).is_zero(), "lower triangle");
            const Poly& d = g.at(i, i);
            t.expect(d.is_monic() && (xm1 % d).is_zero(), "diagonal divides x^m-1");
            degsum += static_cast<unsigned>(d.degree());
            for (unsigned j = i + 1; j < ell; ++j)
                t.expect(g.at(i, j).degree() < g.at(j, j).degree(), "reduced above diagonal");
            if (d == xm1)
                for (unsigned j = 0; j < ell; ++j)
                    t.expect(j == i || g.at(i, j).is_zero(), "x^m-1 row form");
        }
        t.expect(c.dimension() == m * ell - degsum, "dimension formula");
        t.expect(c.dimension() == c.expand().dim(), "dimension equals expanded rank");
        auto dec = decompose(c);
        t.expect(same_code(jensen_concatenate(dec.fac, ell, dec.parts), c), "CRT round trip");
    }
    return finish(2, "module structure", t, "200 random codes");
}

CriterionResult trace_suite() {
    Tally t;
    Rng rng(202);
    unsigned instances = 0;
    while (instances < 15) {
        auto base = Field::get(2, 1);
        unsigned m = std::vector<unsigned>{3, 5, 7}[rng.below(3)];
        QCCode c = random_code(rng, base, m, 2, 1);
        if (c.dimension() > 10) continue;
        ++instances;
        auto dec = decompose(c);
        std::vector<Mat> words;
        for (const auto& part : dec.parts) words.push_back(enumerate_codewords(part.code));
        std::set<Vec> trace_set;
        std::vector<size_t> pick(words.size(), 0);
        for (;;) {
            std::vector<Vec> lambda;
            for (size_t i = 0; i < words.size(); ++i) lambda.push_back(words[i][pick[i]]);
            Mat arr = trace_codeword(dec, lambda);
            Vec flat;
            for (const auto& row : arr) flat.insert(flat.end(), row.begin(), row.end());
            trace_set.insert(flat);
            size_t i = 0;
            while (i < pick.size() && pick[i] + 1 == words[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            ++pick[i];
        }
        Mat expanded = enumerate_codewords(c.expand());
        std::set<Vec> code_set(expanded.begin(), expanded.end());
        t.expect(trace_set == code_set, "trace codeword set equals the expanded code");
    }
    return finish(3, "trace representation", t, "15 instances of dimension <= 10");
}

CriterionResult duality_suite() {
    Tally t;
    // dual constituents match the decomposition of the expanded dual
    Rng rng(303);
    for (int inst = 0; inst < 60; ++inst) {
        auto base = Field::get(inst % 2 == 0 ? 2 : 3, 1);
        unsigned m = std::vector<unsigned>{3, 5, 7}[rng.below(3)];
        if (base->p() == 3 && m == 3) m = 5;
        unsigned ell = 2 + static_cast<unsigned>(rng.below(2));
        QCCode c = random_code(rng, base, m, ell, 1 + static_cast<unsigned>(rng.below(2)));
        LinearCode dual = c.expand().dual();
        std::vector<std::vector<Poly>> gens;
        for (const auto& row : dual.basis()) {
            Mat arr(m, Vec(ell));
            for (unsigned i = 0; i < m * ell; ++i) arr[i / ell][i % ell] = row[i];
            gens.push_back(QCCode::from_array(base, arr));
        }
        QCCode dual_qc = gens.empty() ? QCCode::zero(base, m, ell)
                                      : QCCode(base, m, ell, std::move(gens));
        auto want = decompose(dual_qc);
        auto got = dual_constituents(c);
        for (size_t i = 0; i < want.parts.size(); ++i)
            t.expect(got.parts[i].code.basis() == want.parts[i].code.basis(),
                     "dual constituent mismatch at slot " + std::to_string(i));
    }
    // exhaustive 1-generator binary family, m=3, ell=2
    auto f2 = Field::get(2, 1);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            Poly g0(f2, {a & 1, (a >> 1) & 1, (a >> 2) & 1});
            Poly g1(f2, {b & 1, (b >> 1) & 1, (b >> 2) & 1});
            QCCode c(f2, 3, 2, {{g0, g1}});
            LinearCode e = c.expand();
            bool sd = e.dim() * 2 == e.length() && e.dual().basis() == e.basis();
            bool lcd = e.hull().dim() == 0;
            t.expect(is_self_dual(c).holds == sd, "self-dual flag on exhaustive family");
            t.expect(is_lcd(c).holds == lcd, "LCD flag on exhaustive family");
        }
    // cubic construction: C self-dual iff C1 Euclidean and C2 Hermitian self-dual
    auto f4 = Field::get(2, 2);
    std::vector<LinearCode> c1s, c2s;
    for (unsigned k = 0; k <= 2; ++k) {
        for_each_subspace(f2, 2, k, [&](const Mat& g) { c1s.emplace_back(f2, 2, g); });
        for_each_subspace(f4, 2, k, [&](const Mat& g) { c2s.emplace_back(f4, 2, g); });
    }
    for (const auto& c1 : c1s)
        for (const auto& c2 : c2s) {
            QCCode c = cubic_construction(c1, c2);
            bool sd1 = c1.dim() * 2 == c1.length() && c1.dual().basis() == c1.basis();
            bool sd2 = c2.dim() * 2 == c2.length() &&
                       c2.dual(DualMode::Hermitian).basis() == c2.basis();
            t.expect(is_self_dual(c).holds == (sd1 && sd2), "cubic self-duality criterion");
        }
    return finish(4, "duality", t);
}

CriterionResult bounds_suite() {
    Tally t;
    Rng rng(505);
    struct Shape {
        std::uint64_t q;
        unsigned m, ell;
    };
    std::vector<Shape> shapes{{2, 3, 2}, {2, 3, 3}, {2, 5, 2}, {2, 5, 3}, {2, 7, 2},
                              {2, 7, 3}, {2, 9, 2}, {2, 9, 3}, {2, 15, 2}, {2, 7, 5},
                              {3, 4, 2}, {3, 4, 3}, {3, 5, 3}, {3, 7, 2}, {3, 8, 2},
                              {3, 10, 2}, {3, 13, 2}};
    int done = 0;
    while (done < 300) {
        const Shape& s = shapes[rng.below(shapes.size())];
        auto base = Field::of_order(s.q);
        QCCode c = random_code(rng, base, s.m, s.ell, 1 + static_cast<unsigned>(rng.below(2)));
        if (c.dimension() > (s.q == 2 ? 16u : 13u)) continue;
        ++done;
        BoundReport rep = best_bounds(c, true);  // throws if any bound exceeds exact
        t.expect(rep.exact.has_value(), "exact oracle available");
        if (rep.exact)
            for (const auto& [name, entry] : rep.bounds)
                t.expect(entry.value <= *rep.exact, name + " above exact distance");
    }
    // cyclic Hamming [7,4]: the spectral BCH bound is exactly 3
    auto f2 = Field::get(2, 1);
    auto fac = factor_xm1(f2, 7);
    QCCode ham(f2, 7, 1, {{fac.factors[fac.factor_of_exponent(1)].poly}});
    auto sp = spectral_bound(ham, ZeroSet(7, std::vector<unsigned>{1, 2}), CyclicMethod::Bch);
    t.expect(sp.value == ExtNat::of(3), "spectral BCH on the [7,4] Hamming code");
    t.expect(ham.expand().min_distance_exact() == ExtNat::of(3), "Hamming exact distance");
    return finish(5, "bound soundness", t, "300 random codes and the Hamming anchor");
}

CriterionResult hierarchy_suite() {
    Tally t;
    CyclicOpts unit_m;
    unit_m.roos_unit_m_only = true;
    auto check_cheap = [&](unsigned m, std::uint64_t mask) {
        ZeroSet p(m, mask);
        auto b = cyclic_dP(p, CyclicMethod::Bch).value;
        auto h = cyclic_dP(p, CyclicMethod::Ht).value;
        t.expect(b <= h, "bch <= ht at m=" + std::to_string(m));
        t.expect(cyclic_dP(p, CyclicMethod::Roos, unit_m).value == b,
                 "Roos with unit M reproduces BCH at m=" + std::to_string(m));
        return h;
    };
    auto check_shift = [&](unsigned m, std::uint64_t mask, ExtNat h) {
        t.expect(h <= cyclic_dP(ZeroSet(m, mask), CyclicMethod::Shift).value,
                 "ht <= shift at m=" + std::to_string(m));
    };
    for (unsigned m : {7u, 9u}) {
        std::uint64_t full = (1ull << m) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask)
            check_shift(m, mask, check_cheap(m, mask));
    }
    // m = 15: bch/ht/roos on every zero set; the shift comparison on all
    // coset-closed unions plus a seeded sample (its extension scan over all
    // 32766 sets is the one piece beyond the time budget)
    unsigned m = 15;
    std::uint64_t full = (1ull << m) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) check_cheap(m, mask);
    auto fac = factor_xm1(Field::get(2, 1), m);
    std::vector<std::uint64_t> cosets;
    for (const auto& f : fac.factors) {
        std::uint64_t cm = 0;
        for (unsigned u : f.coset) cm |= 1ull << u;
        cosets.push_back(cm);
    }
    for (std::uint64_t sel = 1; sel + 1 < (1ull << cosets.size()); ++sel) {
        std::uint64_t mask = 0;
        for (size_t i = 0; i < cosets.size(); ++i)
            if (sel & (1ull << i)) mask |= cosets[i];
        check_shift(m, mask, cyclic_dP(ZeroSet(m, mask), CyclicMethod::Ht).value);
    }
    Rng rng(606);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t mask = 1 + rng.below(full - 1);
        check_shift(m, mask, cyclic_dP(ZeroSet(m, mask), CyclicMethod::Ht).value);
    }
    return finish(6, "cyclic-bound hierarchy", t,
                  "m=7,9 exhaustive; m=15 exhaustive for bch/ht/roos, shift on "
                  "coset-closed unions and 500 sampled sets");
}

CriterionResult counting_suite() {
    Tally t;
    auto f2 = Field::get(2, 1);
    auto f4 = Field::get(2, 2);
    auto is_self_dual_code = [](const LinearCode& c, DualMode mode) {
        return c.dim() * 2 == c.length() && c.dual(mode).basis() == c.basis();
    };
    unsigned n22 = 0, n24 = 0, m24 = 0, n42 = 0, t28 = 0;
    for_each_subspace(f2, 2, 1, [&](const Mat& g) {
        if (is_self_dual_code(LinearCode(f2, 2, g), DualMode::Euclidean)) ++n22;
    });
    for_each_subspace(f2, 4, 2, [&](const Mat& g) {
        LinearCode c(f2, 4, g);
        if (!is_self_dual_code(c, DualMode::Euclidean)) return;
        ++n24;
        if (c.contains(Vec{1, 1, 0, 0})) ++m24;
    });
    for_each_subspace(f4, 2, 1, [&](const Mat& g) {
        if (is_self_dual_code(LinearCode(f4, 2, g), DualMode::Hermitian)) ++n42;
    });
    for_each_subspace(f2, 8, 4, [&](const Mat& g) {
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = i; j < 4; ++j) {
                unsigned dot = 0;
                for (unsigned e = 0; e < 8; ++e) dot ^= g[i][e] & g[j][e];
                if (dot) return;
            }
        LinearCode c(f2, 8, g);
        if (!is_self_dual_code(c, DualMode::Euclidean)) return;
        for (const auto& w : enumerate_codewords(c))
            if (hamming_weight(w) % 4 != 0) return;
        ++t28;
    });
    t.expect(selfdual_count_f2(2) == 1 && n22 == 1, "N(2,2)");
    t.expect(selfdual_count_f2(4) == 3 && n24 == 3, "N(2,4)");
    t.expect(selfdual_count_f2_through(4) == 1 && m24 == 1, "M(2,4) through 1100");
    t.expect(selfdual_count_f4(2) == 3 && n42 == 3, "N(4,2)");
    t.expect(type2_count(8) == 30 && t28 == 30, "T(2,8)");
    t.expect(std::abs(entropy(0.5, 2) - 1.0) < 1e-12, "H_2(1/2) = 1");
    t.expect(std::abs(entropy_inverse(0.5, 2) - 0.110) < 1e-3, "H_2^{-1}(1/2) = 0.110");
    t.expect(std::abs(crossing_delta() - 0.1762) < 1e-3, "crossing constant 0.1762");
    return finish(7, "counting formulas", t);
}

CriterionResult convolutional_suite() {
    Tally t;
    auto f2 = Field::get(2, 1);
    auto parse = [&](const std::string& s) { return Poly::parse_coeff_list(f2, s); };
    ConvolutionalCode classic(f2, {{parse("1,0,1"), parse("1,1,1")}});
    t.expect(dfree_search(classic, 4) == 5, "classic encoder search value");
    t.expect(dfree_lower_bound(classic, 3).value == ExtNat::of(2), "classic encoder m=3 bound");
    Rng rng(808);
    int done = 0;
    while (done < 20) {
        unsigned ell = 2 + static_cast<unsigned>(done % 2);  // (2,1) and (3,1) shapes
        std::vector<Poly> row;
        for (unsigned j = 0; j < ell; ++j) {
            std::vector<std::uint64_t> coeffs(3);
            for (auto& c : coeffs) c = rng.below(2);
            row.emplace_back(f2, std::move(coeffs));
        }
        std::vector<std::vector<Poly>> g{row};
        if (poly_matrix_rank(g) != 1) continue;
        ConvolutionalCode c(f2, std::move(g));
        // keep to encoders satisfying the projection-bound hypothesis
        Poly h = encoder_minor_gcd(c);
        bool ok = true;
        for (unsigned m : {3, 5, 7})
            if (gcd(h, Poly::xm_minus_1(f2, m)).degree() > 0) ok = false;
        if (!ok) continue;
        ++done;
        std::uint64_t upper = dfree_search(c, 6);
        for (unsigned m : {3, 5, 7})
            t.expect(dfree_lower_bound(c, m).value <= ExtNat::of(upper),
                     "sandwich violated at m=" + std::to_string(m));
    }
    return finish(8, "convolutional sandwich", t, "20 random single-row encoders");
}

}  // namespace

bool SelftestReport::ok() const {
    for (const auto& c : criteria)
        if (!c.passed) return false;
    return true;
}

std::string SelftestReport::json() const {
    std::ostringstream os;
    os << "{\n  \"report\": \"qc selftest\",\n  \"criteria\": [\n";
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        os << "    {\"id\": " << c.id << ", \"name\": \"" << c.name << "\", \"passed\": "
           << (c.passed ? "true" : "false") << ", \"detail\": \"" << c.detail << "\"}"
           << (i + 1 < criteria.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"ok\": " << (ok() ? "true" : "false") << "\n}\n";
    return os.str();
}

SelftestReport run_selftest() {
    SelftestReport r;
    r.criteria.push_back(factorization_suite());
    r.criteria.push_back(structure_suite());
    r.criteria.push_back(trace_suite());
    r.criteria.push_back(duality_suite());
    r.criteria.push_back(bounds_suite());
    r.criteria.push_back(hierarchy_suite());
    r.criteria.push_back(counting_suite());
    r.criteria.push_back(convolutional_suite());
    return r;
}

}  // namespace qc
