#ifndef QC_TEST_UTIL_HPP
#define QC_TEST_UTIL_HPP

#include <vector>

#include "qc/common.hpp"
#include "qc/qc_code.hpp"

namespace qc::testutil {

/// Random QC code with the given shape and 1 or 2 generators.
inline QCCode random_qc(Rng& rng, const FieldPtr& base, unsigned m, unsigned ell,
                        unsigned n_gens) {
    std::vector<std::vector<Poly>> gens;
    for (unsigned g = 0; g < n_gens; ++g) {
        std::vector<Poly> row;
        for (unsigned j = 0; j < ell; ++j) {
            std::vector<std::uint64_t> coeffs(m);
            for (unsigned k = 0; k < m; ++k) coeffs[k] = rng.below(base->order());
            row.emplace_back(base, std::move(coeffs));
        }
        gens.push_back(std::move(row));
    }
    return QCCode(base, m, ell, std::move(gens));
}

/// Rebuild a QC code from a plain generator matrix of flattened length-m*ell rows.
inline QCCode qc_from_rows(const FieldPtr& base, unsigned m, unsigned ell, const Mat& rows) {
    std::vector<std::vector<Poly>> gens;
    for (const auto& row : rows) {
        Mat arr(m, Vec(ell));
        for (unsigned i = 0; i < m * ell; ++i) arr[i / ell][i % ell] = row[i];
        gens.push_back(QCCode::from_array(base, arr));
    }
    if (gens.empty()) return QCCode::zero(base, m, ell);
    return QCCode(base, m, ell, std::move(gens));
}

/// All codewords of a linear code (use only for small dimensions).
inline Mat all_codewords(const LinearCode& c) {
    const auto& f = c.field();
    Mat words{Vec(c.length(), 0)};
    for (const auto& b : c.basis()) {
        Mat next;
        for (const auto& w : words) {
            for (std::uint64_t s = 0; s < f->order(); ++s) {
                Vec v = w;
                for (unsigned i = 0; i < c.length(); ++i) v[i] = f->add(v[i], f->mul(s, b[i]));
                next.push_back(std::move(v));
            }
        }
        words = std::move(next);
    }
    return words;
}

}  // namespace qc::testutil

#endif
