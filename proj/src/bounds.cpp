#include "qc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qc/crt.hpp"

namespace qc {

namespace {

unsigned popcount(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

std::uint64_t full_mask(unsigned m) { return (m == 64) ? ~0ull : ((1ull << m) - 1); }

/// Scale the root subset by xi^k: exponent a -> a + k (mod m).
std::uint64_t rotate_mask(std::uint64_t mask, unsigned k, unsigned m) {
    k %= m;
    if (k == 0) return mask;
    return ((mask << k) | (mask >> (m - k))) & full_mask(m);
}

std::string mask_str(std::uint64_t mask, unsigned m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (unsigned k = 0; k < m; ++k)
        if ((mask >> k) & 1) {
            if (!first) os << ',';
            os << k;
            first = false;
        }
    os << '}';
    return os.str();
}

void check_proper(const ZeroSet& p) {
    if (p.m == 0 || p.m > 63) throw std::invalid_argument("zero set length out of range");
    if (p.empty()) throw std::invalid_argument("zero set must be nonempty");
    if (p.full()) throw std::invalid_argument("zero set must be a proper subset");
}

// ---- BCH ----------------------------------------------------------------

BoundEntry bch_bound(const ZeroSet& p) {
    unsigned m = p.m;
    unsigned best = 0, best_n = 1, best_e = 0;
    for (unsigned n = 1; n < m; ++n) {
        if (std::gcd(n, m) != 1u) continue;
        for (unsigned e = 0; e < m; ++e) {
            if (!p.contains(e) || p.contains((e + m - n % m) % m)) continue;  // run start only
            unsigned len = 0;
            while (p.contains((e + len * n) % m)) ++len;
            if (len > best) {
                best = len;
                best_n = n;
                best_e = e;
            }
        }
    }
    std::ostringstream os;
    os << "consecutive run start=" << best_e << " step=" << best_n << " length=" << best;
    return {ExtNat::of(best + 1), os.str()};
}

// ---- Hartmann-Tzeng -----------------------------------------------------

/// Calls visit(delta, s, pattern_mask) for every HT pattern
/// {e + z*n1 + y*n2} inside the member set; delta >= 2, s >= 0,
/// gcd(n1, m) = 1, gcd(n2, m) < delta.
template <typename Visit>
void ht_patterns(unsigned m, std::uint64_t members, Visit visit) {
    auto in = [&](unsigned k) { return (members >> (k % m)) & 1; };
    for (unsigned n1 = 1; n1 < m; ++n1) {
        if (std::gcd(n1, m) != 1u) continue;
        for (unsigned e = 0; e < m; ++e) {
            unsigned run = 0;
            while (run < m && in(e + run * n1)) ++run;
            for (unsigned delta = 2; delta <= run + 1; ++delta) {
                std::uint64_t base_mask = 0;
                for (unsigned z = 0; z + 2 <= delta; ++z) base_mask |= 1ull << ((e + z * n1) % m);
                for (unsigned n2 = 1; n2 < m; ++n2) {
                    if (std::gcd(n2, m) >= delta) continue;
                    std::uint64_t pat = base_mask;
                    unsigned s = 0;
                    visit(delta, 0u, pat);
                    while (s + 1 < m) {
                        bool ok = true;
                        std::uint64_t add = 0;
                        for (unsigned z = 0; z + 2 <= delta && ok; ++z) {
                            unsigned k = (e + z * n1 + (s + 1) * n2) % m;
                            if (!in(k)) ok = false;
                            add |= 1ull << k;
                        }
                        if (!ok) break;
                        pat |= add;
                        ++s;
                        visit(delta, s, pat);
                    }
                }
            }
        }
    }
}

BoundEntry ht_bound(const ZeroSet& p) {
    unsigned best = 1;
    std::string wit = "no pattern";
    ht_patterns(p.m, p.mask, [&](unsigned delta, unsigned s, std::uint64_t pat) {
        if (delta + s > best) {
            best = delta + s;
            std::ostringstream os;
            os << "delta=" << delta << " s=" << s << " D=" << mask_str(pat, p.m);
            wit = os.str();
        }
    });
    return {ExtNat::of(best), wit};
}

// ---- Roos ---------------------------------------------------------------

/// All distinct consecutive exponent sets (any start, any step coprime to m),
/// as masks, lengths 1..m-1.
std::vector<std::uint64_t> consecutive_sets(unsigned m) {
    std::set<std::uint64_t> out;
    for (unsigned n = 1; n < m; ++n) {
        if (std::gcd(n, m) != 1u) continue;
        for (unsigned e = 0; e < m; ++e) {
            std::uint64_t mask = 0;
            for (unsigned len = 1; len < m; ++len) {
                mask |= 1ull << ((e + (len - 1) * n) % m);
                out.insert(mask);
            }
        }
    }
    return {out.begin(), out.end()};
}

/// Calls visit(M_mask, N_mask, Mprime_str) for every Roos candidate:
/// N consecutive, M = W cap T with W a consecutive window, |W| <= |M|+|N|-1,
/// M + N inside the member set.
template <typename Visit>
void roos_patterns(unsigned m, std::uint64_t members, const CyclicOpts& opts, Visit visit) {
    auto consec = consecutive_sets(m);
    for (std::uint64_t nmask : consec) {
        unsigned nsize = popcount(nmask);
        // T = {e : e + N subset of members}
        std::uint64_t t = full_mask(m);
        for (unsigned nu = 0; nu < m && t; ++nu)
            if ((nmask >> nu) & 1) t &= rotate_mask(members, m - nu, m);
        if (!t) continue;
        if (opts.roos_unit_m_only) {
            if (t & 1) visit(std::uint64_t{1}, nmask, std::string("{0}"));
            continue;
        }
        for (unsigned n = 1; n < m; ++n) {
            if (std::gcd(n, m) != 1u) continue;
            for (unsigned e = 0; e < m; ++e) {
                std::uint64_t w = 0;
                unsigned cap = std::min(opts.roos_window_cap, m - 1);
                for (unsigned len = 1; len <= cap; ++len) {
                    w |= 1ull << ((e + (len - 1) * n) % m);
                    std::uint64_t mm = w & t;
                    unsigned k = popcount(mm);
                    if (k == 0 || len > k + nsize - 1) continue;
                    std::ostringstream os;
                    os << "window start=" << e << " step=" << n << " len=" << len;
                    visit(mm, nmask, os.str());
                }
            }
        }
    }
}

BoundEntry roos_bound(const ZeroSet& p, const CyclicOpts& opts) {
    unsigned best = 1;
    std::string wit = "no pattern";
    roos_patterns(p.m, p.mask, opts, [&](std::uint64_t mm, std::uint64_t nm, const std::string& w) {
        unsigned v = popcount(mm) + popcount(nm);
        if (v > best) {
            best = v;
            std::ostringstream os;
            os << "M=" << mask_str(mm, p.m) << " N=" << mask_str(nm, p.m) << " M'=" << w;
            wit = os.str();
        }
    });
    return {ExtNat::of(best), wit};
}

// ---- Shift --------------------------------------------------------------

/// Breadth-first enumeration of the independent sets (w.r.t. the member set
/// S) that are subsets of S; each can be extended by one outside element.
/// Calls visit(mask) for every reachable subset mask (including the empty
/// one). Capped at m <= 20.
template <typename Visit>
void independent_subsets(unsigned m, std::uint64_t members, Visit visit) {
    if (m > 20) throw BudgetError("shift bound is capped at m <= 20");
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> queue;
    seen.insert(0);
    queue.push_back(0);
    while (!queue.empty()) {
        std::uint64_t a = queue.front();
        queue.pop_front();
        visit(a);
        for (unsigned b = 0; b < m; ++b) {
            if ((members >> b) & 1) continue;
            std::uint64_t grown = a | (1ull << b);
            for (unsigned k = 0; k < m; ++k) {
                std::uint64_t r = rotate_mask(grown, k, m);
                if ((r & ~members) == 0 && seen.insert(r).second) queue.push_back(r);
            }
        }
    }
}

/// Largest independent set w.r.t. the exact root set S (as |A|, i.e. the best
/// reachable subset of S plus one outside element). Stops at cap: a return
/// value >= cap only means "at least cap".
unsigned max_independent(unsigned m, std::uint64_t s, unsigned cap) {
    if (m > 20) throw BudgetError("shift bound is capped at m <= 20");
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> queue;
    seen.insert(0);
    queue.push_back(0);
    unsigned best = 1;
    while (!queue.empty()) {
        std::uint64_t a = queue.front();
        queue.pop_front();
        best = std::max(best, popcount(a) + 1);
        if (best >= cap) return best;
        for (unsigned b = 0; b < m; ++b) {
            if ((s >> b) & 1) continue;
            std::uint64_t grown = a | (1ull << b);
            for (unsigned k = 0; k < m; ++k) {
                std::uint64_t r = rotate_mask(grown, k, m);
                if ((r & ~s) == 0 && seen.insert(r).second) queue.push_back(r);
            }
        }
    }
    return best;
}

/// Shift bound on d_P: a codeword of any code with zeros containing P may
/// vanish on a larger root set S, and the independence recursion is only
/// valid against the exact S. Hence the minimum over all proper extensions
/// P <= S < Omega of the per-S maximum. The BCH value of P is a floor (every
/// extension keeps the run), so the scan stops once it is reached.
unsigned shift_value(unsigned m, std::uint64_t pmask) {
    static std::map<std::pair<unsigned, std::uint64_t>, unsigned> memo;
    auto key = std::make_pair(m, pmask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<unsigned> comp;
    for (unsigned k = 0; k < m; ++k)
        if (!((pmask >> k) & 1)) comp.push_back(k);
    if (comp.size() > 16) throw BudgetError("shift bound extension scan is capped at 2^16 sets");

    unsigned floor_val =
        static_cast<unsigned>(bch_bound(ZeroSet(m, pmask)).value.value());
    std::vector<std::uint64_t> exts;  // S = pmask | ext, ext over proper subsets of comp
    for (std::uint64_t t = 0; t + 1 < (1ull << comp.size()); ++t) {
        std::uint64_t ext = 0;
        for (size_t i = 0; i < comp.size(); ++i)
            if ((t >> i) & 1) ext |= 1ull << comp[i];
        exts.push_back(ext);
    }
    std::sort(exts.begin(), exts.end(), [](std::uint64_t a, std::uint64_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });

    unsigned best = m;  // any proper root set forces weight <= its complement run anyway
    for (std::uint64_t ext : exts) {
        best = std::min(best, max_independent(m, pmask | ext, best));
        if (best <= floor_val) break;
    }
    memo.emplace(key, best);
    return best;
}

BoundEntry shift_bound(const ZeroSet& p) {
    unsigned best = shift_value(p.m, p.mask);
    std::ostringstream os;
    os << "min over root-set extensions of P=" << p.str() << " of the largest independent set";
    return {ExtNat::of(best), os.str()};
}

}  // namespace

// ---- ZeroSet ------------------------------------------------------------

ZeroSet::ZeroSet(unsigned m_, const std::vector<unsigned>& exponents) : m(m_) {
    for (unsigned e : exponents) mask |= 1ull << (e % m);
}

unsigned ZeroSet::size() const { return popcount(mask); }

bool ZeroSet::full() const { return mask == full_mask(m); }

std::vector<unsigned> ZeroSet::exponents() const {
    std::vector<unsigned> out;
    for (unsigned k = 0; k < m; ++k)
        if ((mask >> k) & 1) out.push_back(k);
    return out;
}

std::string ZeroSet::str() const { return mask_str(mask, m); }

BoundEntry cyclic_dP(const ZeroSet& p, CyclicMethod method, const CyclicOpts& opts) {
    check_proper(p);
    switch (method) {
        case CyclicMethod::Bch:
            return bch_bound(p);
        case CyclicMethod::Ht:
            return ht_bound(p);
        case CyclicMethod::Roos:
            return roos_bound(p, opts);
        case CyclicMethod::Shift:
            return shift_bound(p);
    }
    throw std::invalid_argument("unknown cyclic bound method");
}

// ---- Eigenstructure -----------------------------------------------------

ZeroSet EigenStructure::eigenvalue_set() const {
    ZeroSet z(m, std::uint64_t{0});
    for (unsigned k : exponents) z.mask |= 1ull << k;
    return z;
}

EigenStructure eigenstructure(const QCCode& c) {
    auto fac = factor_xm1(c.field(), c.m());
    const auto& g = c.groebner();
    unsigned m = c.m(), ell = c.ell();
    const FieldPtr& f = fac.splitting;

    EigenStructure es;
    es.splitting = f;
    es.xi = fac.xi;
    es.m = m;
    es.ell = ell;

    for (unsigned k = 0; k < m; ++k) {
        FieldElem beta = fac.xi.pow(k);
        unsigned alg = 0;
        for (unsigned j = 0; j < ell; ++j)
            if (g.at(j, j).eval(beta).is_zero()) ++alg;
        if (alg == 0) continue;
        Mat rows(ell, Vec(ell));
        for (unsigned i = 0; i < ell; ++i)
            for (unsigned j = 0; j < ell; ++j) rows[i][j] = g.at(i, j).eval(beta).value();
        Mat v = null_space(f, rows, ell);
        if (v.size() != alg)
            throw std::logic_error("geometric multiplicity differs from algebraic");
        es.exponents.push_back(k);
        es.multiplicity.push_back(alg);
        es.eigenspaces.push_back(v);
        for (const Vec& row : v) {
            Vec h(static_cast<size_t>(m) * ell);
            FieldElem bp = f->one();
            for (unsigned r = 0; r < m; ++r) {
                for (unsigned j = 0; j < ell; ++j)
                    h[static_cast<size_t>(r) * ell + j] = f->mul(bp.value(), row[j]);
                bp = bp * beta;
            }
            es.parity_check.push_back(std::move(h));
        }
    }

    Mat copy = es.parity_check;
    unsigned rank = rref_in_place(f, copy);
    if (rank != m * ell - c.dimension())
        throw std::logic_error("parity-check rank does not match the codimension");
    return es;
}

LinearCode eigencode(const FieldPtr& splitting, const Mat& v_basis, unsigned ell,
                     const FieldPtr& base) {
    if (!base->is_subfield_of(*splitting))
        throw std::invalid_argument("eigencode: base is not a subfield of the splitting field");
    unsigned t = splitting->degree() / base->degree();
    Mat rows;
    FieldElem w = splitting->one();
    std::vector<FieldElem> basis_pow;
    for (unsigned i = 0; i < t; ++i) {
        basis_pow.push_back(w);
        w = w * splitting->gen();
    }
    for (const Vec& v : v_basis)
        for (unsigned i = 0; i < t; ++i) {
            Vec row(ell);
            for (unsigned j = 0; j < ell; ++j)
                row[j] = splitting->trace_to(*base, splitting->mul(basis_pow[i].value(), v[j]));
            rows.push_back(std::move(row));
        }
    return LinearCode(base, ell, null_space(base, rows, ell));
}

// ---- Spectral bounds ----------------------------------------------------

namespace {

/// Shared state for one spectral-bound evaluation: eigenstructure plus a memo
/// of eigencode distances per eigenvalue subset.
struct SpectralCtx {
    const QCCode& c;
    EigenStructure es;
    std::uint64_t omega = 0;  // eigenvalue exponents as a mask
    std::map<unsigned, size_t> slot;  // exponent -> index in es arrays
    std::map<std::uint64_t, ExtNat> memo;
    std::uint64_t budget;

    SpectralCtx(const QCCode& code, std::uint64_t b) : c(code), es(eigenstructure(code)), budget(b) {
        for (size_t i = 0; i < es.exponents.size(); ++i) {
            omega |= 1ull << es.exponents[i];
            slot[es.exponents[i]] = i;
        }
    }

    /// d of the eigencode of V_P, P given as an eigenvalue-exponent mask.
    ExtNat eigdist(std::uint64_t pmask) {
        auto it = memo.find(pmask);
        if (it != memo.end()) return it->second;
        LinearCode v = LinearCode::full(es.splitting, es.ell);
        for (unsigned k = 0; k < es.m; ++k)
            if ((pmask >> k) & 1)
                v = v.intersect(LinearCode(es.splitting, es.ell, es.eigenspaces[slot.at(k)]));
        ExtNat d = eigencode(es.splitting, v.basis(), es.ell, c.field()).min_distance_exact(budget);
        memo.emplace(pmask, d);
        return d;
    }
};

BoundEntry spectral_with(SpectralCtx& ctx, const ZeroSet& p, CyclicMethod method) {
    BoundEntry dp = cyclic_dP(p, method);
    ExtNat ed = ctx.eigdist(p.mask);
    std::ostringstream os;
    os << "P=" << p.str() << " d_P>=" << dp.value.str() << " (" << dp.witness << ") d(eigencode)="
       << ed.str();
    return {min(dp.value, ed), os.str()};
}

BoundEntry spectral_degenerate(const QCCode& c, const SpectralCtx& ctx, std::uint64_t budget) {
    if (ctx.omega == 0) return {ExtNat::of(1), "no eigenvalues (full ambient code)"};
    // eigenvalue set is all of Omega: no proper pattern exists
    if (c.dimension() == 0) return {ExtNat::infinity(), "zero code"};
    try {
        ExtNat d = c.expand().min_distance_exact(budget);
        return {d, "eigenvalue set is all of Omega; exact enumeration fallback"};
    } catch (const BudgetError&) {
        return {ExtNat::of(1), "eigenvalue set is all of Omega; enumeration budget exceeded"};
    }
}

BoundEntry spectral_search_impl(SpectralCtx& ctx, CyclicMethod method) {
    unsigned m = ctx.es.m;
    ExtNat best = ExtNat::of(1);
    std::string wit = "no pattern";
    auto offer = [&](unsigned pattern_value, std::uint64_t pmask, const std::string& detail) {
        ExtNat ed = ctx.eigdist(pmask);
        ExtNat v = min(ExtNat::of(pattern_value), ed);
        if (v > best) {
            best = v;
            std::ostringstream os;
            os << detail << " pattern>=" << pattern_value << " d(eigencode)=" << ed.str();
            wit = os.str();
        }
    };

    switch (method) {
        case CyclicMethod::Bch: {
            auto in = [&](unsigned k) { return (ctx.omega >> (k % m)) & 1; };
            for (unsigned n = 1; n < m; ++n) {
                if (std::gcd(n, m) != 1u) continue;
                for (unsigned e = 0; e < m; ++e) {
                    std::uint64_t pm = 0;
                    for (unsigned len = 1; len < m && in(e + (len - 1) * n); ++len) {
                        pm |= 1ull << ((e + (len - 1) * n) % m);
                        offer(len + 1, pm, "P=" + mask_str(pm, m));
                    }
                }
            }
            break;
        }
        case CyclicMethod::Ht:
            ht_patterns(m, ctx.omega, [&](unsigned delta, unsigned s, std::uint64_t pat) {
                offer(delta + s, pat, "D=" + mask_str(pat, m));
            });
            break;
        case CyclicMethod::Roos:
            roos_patterns(m, ctx.omega, CyclicOpts{},
                          [&](std::uint64_t mm, std::uint64_t nm, const std::string&) {
                              std::uint64_t mn = 0;
                              for (unsigned mu = 0; mu < m; ++mu)
                                  if ((mm >> mu) & 1) mn |= rotate_mask(nm, mu, m);
                              offer(popcount(mm) + popcount(nm), mn,
                                    "M=" + mask_str(mm, m) + " N=" + mask_str(nm, m));
                          });
            break;
        case CyclicMethod::Shift: {
            // Candidate sets P = T_A from independent sets A w.r.t. Omega-bar;
            // the empty T_A (from extending the empty set) is discarded. Each
            // candidate is scored via the general spectral bound with the
            // shift-method d_P.
            std::vector<std::uint64_t> masks;
            independent_subsets(m, ctx.omega, [&](std::uint64_t a) {
                if (a != 0) masks.push_back(a);
            });
            std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
                return ctx.eigdist(b) < ctx.eigdist(a);
            });
            for (std::uint64_t a : masks) {
                if (ctx.eigdist(a) <= best) continue;  // cannot improve
                try {
                    offer(shift_value(m, a), a, "P=T_A=" + mask_str(a, m));
                } catch (const BudgetError&) {
                    // extension scan too large for this candidate; skip it
                }
            }
            break;
        }
    }
    return {best, wit};
}

}  // namespace

BoundEntry spectral_bound(const QCCode& c, const ZeroSet& p, CyclicMethod method,
                          std::uint64_t budget) {
    if (p.m != c.m()) throw std::invalid_argument("zero set length does not match the code");
    check_proper(p);
    SpectralCtx ctx(c, budget);
    if (p.mask & ~ctx.omega)
        throw std::invalid_argument("zero set is not contained in the eigenvalue set");
    return spectral_with(ctx, p, method);
}

BoundEntry spectral_search(const QCCode& c, CyclicMethod method, std::uint64_t budget) {
    SpectralCtx ctx(c, budget);
    if (ctx.omega == 0 || ctx.omega == full_mask(c.m()))
        return spectral_degenerate(c, ctx, budget);
    return spectral_search_impl(ctx, method);
}

// ---- Jensen -------------------------------------------------------------

BoundEntry jensen_bound(const QCCode& c, std::uint64_t budget) {
    CrtDecomposition dec = decompose(c);
    struct Item {
        ExtNat d;
        size_t index;
        bool capped;
    };
    std::vector<Item> items;
    bool any_capped = false;
    for (const Constituent& part : dec.parts) {
        if (part.code.is_zero()) continue;
        ExtNat d;
        bool capped = false;
        try {
            d = part.code.min_distance_exact(budget);
        } catch (const BudgetError&) {
            d = ExtNat::of(1);
            capped = true;
            any_capped = true;
        }
        items.push_back({d, part.index, capped});
    }
    if (items.empty()) return {ExtNat::infinity(), "zero code"};
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.d != b.d ? a.d < b.d : a.index < b.index;
    });

    const FieldPtr& base = c.field();
    Poly xm1 = Poly::xm_minus_1(base, c.m());
    Poly check = Poly::one(base);
    ExtNat best = ExtNat::infinity();
    std::string wit;
    for (size_t e = 0; e < items.size(); ++e) {
        check = check * dec.fac.factors[items[e].index].poly;
        Poly gen = xm1 / check;
        ExtNat inner;
        try {
            inner = QCCode(base, c.m(), 1, {{gen}}).expand().min_distance_exact(budget);
        } catch (const BudgetError&) {
            inner = ExtNat::of(1);
            any_capped = true;
        }
        ExtNat v = items[e].d * inner;
        if (v < best) {
            best = v;
            std::ostringstream os;
            os << "e=" << e + 1 << " d(C_e)=" << items[e].d.str() << " d(inner)=" << inner.str();
            wit = os.str();
        }
    }
    if (any_capped) wit += " [budget cap: some distances replaced by 1]";
    return {best, wit};
}

// ---- Lally --------------------------------------------------------------

BoundEntry lally_bound(const QCCode& c, std::uint64_t budget) {
    const FieldPtr& base = c.field();
    unsigned m = c.m(), ell = c.ell();
    FieldPtr big = Field::get(base->p(), base->degree() * ell);  // GF(q^ell)
    FieldElem alpha = big->gen();

    Poly xm1_small = Poly::xm_minus_1(base, m);
    Poly ghat = Poly::xm_minus_1(big, m);
    Mat rows;
    for (const auto& gen : c.generators()) {
        std::vector<std::uint64_t> coeffs(m, 0);
        std::vector<Poly> reduced;
        for (const Poly& gj : gen) reduced.push_back(gj % xm1_small);
        for (unsigned i = 0; i < m; ++i) {
            FieldElem acc = big->zero();
            FieldElem ap = big->one();
            Vec row(ell);
            for (unsigned j = 0; j < ell; ++j) {
                row[j] = reduced[j].coeff(i);
                FieldElem cij(big, base->embed_to(reduced[j].coeff(i), *big));
                acc = acc + cij * ap;
                ap = ap * alpha;
            }
            coeffs[i] = acc.value();
            rows.push_back(std::move(row));
        }
        ghat = gcd(ghat, Poly(big, coeffs));
    }

    ExtNat dhat;
    std::string note;
    if (ghat == Poly::xm_minus_1(big, m)) {
        dhat = ExtNat::infinity();
    } else {
        try {
            dhat = QCCode(big, m, 1, {{ghat}}).expand().min_distance_exact(budget);
        } catch (const BudgetError&) {
            dhat = ExtNat::of(1);
            note = " [budget cap on d(C-hat)]";
        }
    }
    ExtNat db = LinearCode(base, ell, rows).min_distance_exact(budget);

    std::ostringstream os;
    os << "ghat=" << ghat.coeff_list() << " d(C-hat)=" << dhat.str() << " d(B)=" << db.str()
       << note;
    return {dhat * db, os.str()};
}

// ---- Report -------------------------------------------------------------

BoundReport best_bounds(const QCCode& c, bool with_exact, std::uint64_t budget) {
    BoundReport rep;
    rep.length = c.length();
    rep.dim = c.dimension();
    rep.bounds.emplace_back("jensen", jensen_bound(c, budget));
    try {
        rep.bounds.emplace_back("lally", lally_bound(c, budget));
    } catch (const BudgetError& e) {
        rep.bounds.emplace_back("lally",
                                BoundEntry{ExtNat::of(1), std::string("skipped: ") + e.what()});
    }
    auto spectral = [&](const char* name, CyclicMethod method) {
        try {
            rep.bounds.emplace_back(name, spectral_search(c, method, budget));
        } catch (const BudgetError& e) {
            rep.bounds.emplace_back(name,
                                    BoundEntry{ExtNat::of(1), std::string("skipped: ") + e.what()});
        }
    };
    spectral("spectral_bch", CyclicMethod::Bch);
    spectral("spectral_ht", CyclicMethod::Ht);
    spectral("spectral_roos", CyclicMethod::Roos);
    spectral("spectral_shift", CyclicMethod::Shift);
    if (with_exact) {
        try {
            rep.exact = c.expand().min_distance_exact(budget);
        } catch (const BudgetError&) {
            rep.exact = std::nullopt;
        }
    }
    if (rep.exact)
        for (const auto& [name, entry] : rep.bounds)
            if (entry.value > *rep.exact)
                throw std::logic_error("bound " + name + " exceeds the exact distance");
    return rep;
}

}  // namespace qc
