#include "qc/crt.hpp"

#include <set>
#include <stdexcept>

namespace qc {

unsigned CrtDecomposition::total_dimension() const {
    unsigned d = 0;
    for (const auto& p : parts) {
        d += fac.factors[p.index].ext_degree * p.code.dim();
    }
    return d;
}

CrtDecomposition decompose(const QCCode& c) {
    CrtDecomposition dec;
    dec.fac = factor_xm1(c.field(), c.m());
    dec.ell = c.ell();
    for (size_t i = 0; i < dec.fac.size(); ++i) {
        auto ei = dec.fac.constituent_field(i);
        auto root = dec.fac.constituent_root(i);
        Mat rows;
        for (const auto& gen : c.generators()) {
            Vec row(c.ell());
            for (unsigned j = 0; j < c.ell(); ++j) row[j] = gen[j].eval(root).value();
            rows.push_back(std::move(row));
        }
        dec.parts.push_back({i, dec.fac.factors[i].leader, ei,
                             LinearCode(ei, c.ell(), std::move(rows))});
    }
    return dec;
}

FieldElem crt_phi(const Xm1Factorization& fac, size_t i, const Poly& a) {
    return a.eval(fac.constituent_root(i));
}

Poly crt_psi(const Xm1Factorization& fac, size_t i, const FieldElem& delta) {
    const auto& base = fac.base;
    auto ei = fac.constituent_field(i);
    if (delta.field().get() != ei.get()) throw std::invalid_argument("psi: wrong constituent field");
    auto eta = fac.constituent_root(i);  // xi^{u_i} inside E_i
    std::uint64_t inv_m = base->inv(base->from_int(fac.m).value());
    std::vector<std::uint64_t> coeffs(fac.m);
    for (unsigned k = 0; k < fac.m; ++k) {
        auto t = ei->trace_to(*base, (delta * eta.pow(-static_cast<std::int64_t>(k))).value());
        coeffs[k] = base->mul(inv_m, t);
    }
    return Poly(base, std::move(coeffs));
}

Poly primitive_idempotent(const Xm1Factorization& fac, size_t i) {
    return crt_psi(fac, i, fac.constituent_field(i)->one());
}

QCCode jensen_concatenate(const Xm1Factorization& fac, unsigned ell,
                          const std::vector<Constituent>& parts) {
    std::vector<std::vector<Poly>> gens;
    for (const auto& part : parts) {
        if (part.code.length() != ell) throw std::invalid_argument("jensen_concatenate: length mismatch");
        auto ei = fac.constituent_field(part.index);
        if (part.field.get() != ei.get())
            throw std::invalid_argument("jensen_concatenate: field mismatch at slot " +
                                        std::to_string(part.index));
        for (const auto& row : part.code.basis()) {
            std::vector<Poly> gen;
            gen.reserve(ell);
            for (unsigned j = 0; j < ell; ++j) {
                gen.push_back(crt_psi(fac, part.index, FieldElem(ei, row[j])));
            }
            gens.push_back(std::move(gen));
        }
    }
    return QCCode(fac.base, fac.m, ell, std::move(gens));
}

Mat trace_codeword(const CrtDecomposition& dec, const std::vector<Vec>& lambda) {
    const auto& fac = dec.fac;
    const auto& base = fac.base;
    unsigned m = fac.m, ell = dec.ell;
    if (lambda.size() != fac.size()) throw std::invalid_argument("trace_codeword: need one word per constituent");
    for (size_t i = 0; i < fac.size(); ++i) {
        if (!dec.parts[i].code.contains(lambda[i]))
            throw std::invalid_argument("trace_codeword: lambda_" + std::to_string(i) +
                                        " is not in its constituent");
    }

    Mat out(m, Vec(ell, 0));
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned t = 0; t < ell; ++t) {
            std::uint64_t acc = 0;
            for (size_t i = 0; i < fac.size(); ++i) {
                auto ei = dec.parts[i].field;
                auto eta = fac.constituent_root(i);
                auto term = FieldElem(ei, lambda[i][t]) * eta.pow(-static_cast<std::int64_t>(j));
                acc = base->add(acc, ei->trace_to(*base, term.value()));
            }
            out[j][t] = acc;
        }
    }

    // unified form: one big trace from the splitting field, with k_i the first
    // element (by index) whose relative trace onto E_i is 1
    const auto& F = fac.splitting;
    std::vector<std::uint64_t> k(fac.size());
    for (size_t i = 0; i < fac.size(); ++i) {
        auto ei = dec.parts[i].field;
        bool found = false;
        for (std::uint64_t v = 0; v < F->order() && !found; ++v) {
            if (F->trace_to(*ei, v) == ei->one().value()) {
                k[i] = v;
                found = true;
            }
        }
        if (!found) throw std::logic_error("trace_codeword: no unit-trace element");
    }
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned t = 0; t < ell; ++t) {
            std::uint64_t inner = 0;  // in F
            for (size_t i = 0; i < fac.size(); ++i) {
                auto ei = dec.parts[i].field;
                std::uint64_t lam = ei->embed_to(lambda[i][t], *F);
                std::uint64_t xiu = fac.xi.pow(-static_cast<std::int64_t>(j) *
                                               static_cast<std::int64_t>(fac.factors[i].leader))
                                        .value();
                inner = F->add(inner, F->mul(k[i], F->mul(lam, xiu)));
            }
            if (F->trace_to(*base, inner) != out[j][t])
                throw std::logic_error("trace_codeword: unified form disagrees");
        }
    }
    return out;
}

QCCode column_cyclic_code(const QCCode& c) {
    auto dec = decompose(c);
    unsigned m = c.m();
    // generator of D's dual: product of the minimal polynomials of xi^{-u_i}
    // over the nonzero constituents
    std::set<size_t> factor_idx;
    for (const auto& p : dec.parts) {
        if (!p.code.is_zero()) {
            factor_idx.insert(dec.fac.factor_of_exponent((m - p.leader) % m));
        }
    }
    Poly gdual = Poly::one(c.field());
    for (size_t i : factor_idx) gdual = gdual * dec.fac.factors[i].poly;
    // D = (D^perp)^perp = < h* > with h = (x^m - 1) / gdual
    Poly h = Poly::xm_minus_1(c.field(), m) / gdual;
    return QCCode(c.field(), m, 1, {{h.reciprocal()}});
}

QCCode cubic_construction(const LinearCode& c1, const LinearCode& c2) {
    const auto& base = c1.field();
    std::uint64_t q = base->order();
    if (q % 3 != 2) throw std::invalid_argument("cubic_construction: need q = 2 mod 3");
    if (base->p() != 2) throw std::invalid_argument("cubic_construction: need characteristic 2");
    if (c1.length() != c2.length()) throw std::invalid_argument("cubic_construction: length mismatch");
    unsigned ell = c1.length();

    auto fac = factor_xm1(base, 3);
    auto e2 = fac.constituent_field(1);  // GF(q^2), the x^2+x+1 slot
    if (c2.field().get() != e2.get())
        throw std::invalid_argument("cubic_construction: C2 must live over GF(q^2) = " + e2->name());
    auto beta = fac.constituent_root(1);  // beta^2 + beta + 1 = 0

    std::vector<std::vector<Poly>> gens;
    auto push_rows = [&](const Vec& r0, const Vec& r1, const Vec& r2) {
        gens.push_back(QCCode::from_array(base, {r0, r1, r2}));
    };
    for (const auto& z : c1.basis()) push_rows(z, z, z);
    for (const auto& w : c2.basis()) {
        // w = a + beta*b with a, b over GF(q): b = w + w^q, a = w + beta*b
        Vec a(ell), b(ell), ab(ell);
        for (unsigned j = 0; j < ell; ++j) {
            auto wj = FieldElem(e2, w[j]);
            auto bj = wj + wj.pow(static_cast<std::int64_t>(q));
            auto aj = wj + beta * bj;
            b[j] = base->project_from(bj.value(), *e2);
            a[j] = base->project_from(aj.value(), *e2);
            ab[j] = base->add(a[j], b[j]);
        }
        push_rows(b, a, ab);
    }
    return QCCode(base, 3, ell, std::move(gens));
}

}  // namespace qc
