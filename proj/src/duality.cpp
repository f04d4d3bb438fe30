#include "qc/duality.hpp"

#include <stdexcept>

namespace qc {

DualityProfile DualityProfile::of(const FieldPtr& base, unsigned m) {
    DualityProfile p;
    p.fac = factor_xm1(base, m);
    p.mode.assign(p.fac.size(), DualMode::Euclidean);
    for (size_t i : p.fac.self_reciprocal_indices) {
        // a self-reciprocal irreducible factor of degree > 1 has even degree,
        // so G_i is an even-power extension and carries the Hermitian product;
        // the degree-1 self-reciprocal factors are exactly x - 1 and
        // (q odd, m even) x + 1, which stay Euclidean
        p.mode[i] = p.fac.factors[i].ext_degree == 1 ? DualMode::Euclidean : DualMode::Hermitian;
    }
    return p;
}

namespace {

/// Constituent of C at the inverse root xi^{-u_i}, expressed over E_i. The
/// coset leader of the reciprocal factor is generally only Galois-conjugate
/// to -u_i, so the partner constituent from decompose() differs from this by
/// a Frobenius twist; the duality relations need this exact evaluation point.
LinearCode constituent_at_inverse_root(const QCCode& c, const Xm1Factorization& fac, size_t i) {
    auto ei = fac.constituent_field(i);
    auto root = fac.constituent_root(i).inv();
    Mat rows;
    for (const auto& gen : c.generators()) {
        Vec row(c.ell());
        for (unsigned j = 0; j < c.ell(); ++j) row[j] = gen[j].eval(root).value();
        rows.push_back(std::move(row));
    }
    return LinearCode(ei, c.ell(), std::move(rows));
}

}  // namespace

CrtDecomposition dual_constituents(const QCCode& c) {
    auto profile = DualityProfile::of(c.field(), c.m());
    auto dec = decompose(c);
    CrtDecomposition out = dec;
    for (size_t i : profile.fac.self_reciprocal_indices) {
        out.parts[i].code = dec.parts[i].code.dual(profile.mode[i]);
    }
    for (auto [i, j] : profile.fac.pair_indices) {
        out.parts[i].code = constituent_at_inverse_root(c, profile.fac, i).dual(DualMode::Euclidean);
        out.parts[j].code = constituent_at_inverse_root(c, profile.fac, j).dual(DualMode::Euclidean);
    }
    return out;
}

namespace {

/// First basis vector of a witnessing the difference from b (or vice versa).
std::optional<Vec> difference_witness(const LinearCode& a, const LinearCode& b) {
    for (const auto& r : a.basis()) {
        if (!b.contains(r)) return r;
    }
    for (const auto& r : b.basis()) {
        if (!a.contains(r)) return r;
    }
    return std::nullopt;
}

}  // namespace

DualityVerdict is_self_dual(const QCCode& c) {
    auto profile = DualityProfile::of(c.field(), c.m());
    auto dec = decompose(c);
    DualityVerdict v;
    for (size_t i : profile.fac.self_reciprocal_indices) {
        auto dual = dec.parts[i].code.dual(profile.mode[i]);
        if (dec.parts[i].code != dual) {
            v.failing_index = i;
            v.witness = difference_witness(dec.parts[i].code, dual);
            v.detail = "constituent " + std::to_string(i) + " is not self-dual under its " +
                       (profile.mode[i] == DualMode::Hermitian ? "Hermitian" : "Euclidean") +
                       " product";
            return v;
        }
    }
    for (auto [i, j] : profile.fac.pair_indices) {
        // C = C^perp at slot i reads C_i = (C at xi^{-u_i})^{perp_e}
        auto dual = constituent_at_inverse_root(c, profile.fac, i).dual(DualMode::Euclidean);
        if (dec.parts[i].code != dual) {
            v.failing_index = i;
            v.witness = difference_witness(dec.parts[i].code, dual);
            v.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                       "): constituent is not the Euclidean dual of its partner";
            return v;
        }
    }
    v.holds = true;
    v.detail = "all constituent conditions hold";
    return v;
}

DualityVerdict is_lcd(const QCCode& c) {
    auto profile = DualityProfile::of(c.field(), c.m());
    auto dec = decompose(c);
    DualityVerdict v;
    auto fail = [&](size_t slot, const LinearCode& meet, const std::string& what) {
        v.failing_index = slot;
        v.witness = meet.basis().front();
        v.detail = what;
    };
    for (size_t i : profile.fac.self_reciprocal_indices) {
        auto meet = dec.parts[i].code.hull(profile.mode[i]);
        if (!meet.is_zero()) {
            fail(i, meet, "constituent " + std::to_string(i) + " has a nonzero hull");
            return v;
        }
    }
    for (auto [i, j] : profile.fac.pair_indices) {
        for (size_t slot : {i, j}) {
            auto dualSlot =
                constituent_at_inverse_root(c, profile.fac, slot).dual(DualMode::Euclidean);
            auto meet = dec.parts[slot].code.intersect(dualSlot);
            if (!meet.is_zero()) {
                fail(slot, meet, "pair constituent " + std::to_string(slot) +
                                     " meets the dual of its partner nontrivially");
                return v;
            }
        }
    }
    v.holds = true;
    v.detail = "all constituent hulls are trivial";
    return v;
}

QCCode build_qccd(const FieldPtr& base, unsigned m, unsigned ell,
                  const std::vector<QccdPart>& parts) {
    auto profile = DualityProfile::of(base, m);
    const auto& fac = profile.fac;

    std::vector<Constituent> slots;
    for (size_t i = 0; i < fac.size(); ++i) {
        auto ei = fac.constituent_field(i);
        slots.push_back({i, fac.factors[i].leader, ei, LinearCode::zero(ei, ell)});
    }
    for (const auto& part : parts) {
        size_t i = part.index;
        if (i >= fac.size()) throw std::invalid_argument("build_qccd: no such factor index");
        if (part.code.field().get() != fac.constituent_field(i).get())
            throw std::invalid_argument("build_qccd: slot " + std::to_string(i) +
                                        ": wrong constituent field");
        if (fac.factors[i].self_reciprocal) {
            if (!part.code.hull(profile.mode[i]).is_zero())
                throw std::invalid_argument(
                    "build_qccd: slot " + std::to_string(i) + ": code is not " +
                    (profile.mode[i] == DualMode::Hermitian ? "Hermitian" : "Euclidean") +
                    " LCD");
            slots[i].code = part.code;
        } else {
            if (!part.code.hull(DualMode::Euclidean).is_zero())
                throw std::invalid_argument("build_qccd: slot " + std::to_string(i) +
                                            ": code is not Euclidean LCD");
            size_t j = static_cast<size_t>(fac.factors[i].partner);
            slots[i].code = part.code;
            // place the same code at the partner's inverse root: the leader
            // u_j is only conjugate to -u_i, so the slot-j constituent is the
            // q-Frobenius twist undoing u_j * q^a = -u_i (mod m)
            unsigned m = fac.m, e = fac.factors[i].ext_degree;
            std::uint64_t q = base->order();
            unsigned a = 0;
            std::uint64_t pw = fac.factors[j].leader % m;
            while (pw != (m - fac.factors[i].leader % m) % m) {
                pw = (pw * (q % m)) % m;
                if (++a > e) throw std::logic_error("build_qccd: conjugacy exponent not found");
            }
            auto ei = fac.constituent_field(i);
            std::int64_t qa = 1;
            for (unsigned t = 0; t < (e - a) % e; ++t) qa *= static_cast<std::int64_t>(q);
            Mat rows = part.code.basis();
            for (auto& row : rows)
                for (auto& v : row) v = ei->pow(v, qa);
            slots[j].code = LinearCode(ei, ell, std::move(rows));
        }
    }
    return jensen_concatenate(fac, ell, slots);
}

}  // namespace qc
