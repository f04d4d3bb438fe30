#ifndef QC_BOUNDS_HPP
#define QC_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qc/qc_code.hpp"

namespace qc {

/// A subset of the m-th roots of unity, stored as a bitmask of exponents
/// {k : xi^k in the set} over Z_m.
struct ZeroSet {
    unsigned m = 0;
    std::uint64_t mask = 0;

    ZeroSet() = default;
    ZeroSet(unsigned m_, std::uint64_t mask_) : m(m_), mask(mask_) {}
    ZeroSet(unsigned m_, const std::vector<unsigned>& exponents);

    bool contains(unsigned k) const { return (mask >> (k % m)) & 1u; }
    unsigned size() const;
    bool empty() const { return mask == 0; }
    bool full() const;
    std::vector<unsigned> exponents() const;
    std::string str() const;  // "{0,1,4}"
};

enum class CyclicMethod { Bch, Ht, Roos, Shift };

/// A bound value together with the certificate pattern that produced it.
struct BoundEntry {
    ExtNat value;
    std::string witness;
};

/// Search limits for the cyclic-bound pattern searches.
struct CyclicOpts {
    unsigned roos_window_cap = 6;  ///< max length of the consecutive M'
    bool roos_unit_m_only = false;  ///< restrict M = {1} (BCH reduction check)
};

/// Lower bound on the minimum distance of every cyclic code of length m
/// whose zero set contains P. Requires {} != P != Omega.
BoundEntry cyclic_dP(const ZeroSet& P, CyclicMethod method, const CyclicOpts& opts = {});

/// Eigenvalues (roots of det G~(x), as exponents of xi), their eigenspaces
/// over the splitting field, and the assembled parity-check matrix.
struct EigenStructure {
    FieldPtr splitting;
    FieldElem xi;
    unsigned m = 0, ell = 0;
    std::vector<unsigned> exponents;     ///< ascending; Omega-bar
    std::vector<unsigned> multiplicity;  ///< algebraic = geometric, per exponent
    std::vector<Mat> eigenspaces;        ///< basis rows over the splitting field
    Mat parity_check;                    ///< n x m*ell over the splitting field

    ZeroSet eigenvalue_set() const;
};

EigenStructure eigenstructure(const QCCode& c);

/// Eigencode of an eigenspace basis V over the splitting field F:
/// {u in GF(q)^ell : sum_j v_j u_j = 0 for all v in V}. Each F-constraint is
/// expanded into [F : GF(q)] base-field constraints via trace pairing.
LinearCode eigencode(const FieldPtr& splitting, const Mat& v_basis, unsigned ell,
                     const FieldPtr& base);

/// The spectral bound min{d_P, d(C_P-eigencode)} for one explicit eigenvalue
/// subset P (exponent set, nonempty, inside the eigenvalue set, != Omega).
BoundEntry spectral_bound(const QCCode& c, const ZeroSet& P, CyclicMethod method,
                          std::uint64_t budget = LinearCode::kDefaultBudget);

/// Best spectral bound over searched patterns P for the given method.
/// Degenerate eigenvalue sets are handled: empty (full code) reports 1;
/// Omega-bar = Omega falls back to the exact oracle when the budget allows.
BoundEntry spectral_search(const QCCode& c, CyclicMethod method,
                           std::uint64_t budget = LinearCode::kDefaultBudget);

/// Jensen's concatenated bound: min over e of d(C_e) * d(<theta_1> + ... +
/// <theta_e>) with constituents sorted by ascending exact distance.
BoundEntry jensen_bound(const QCCode& c, std::uint64_t budget = LinearCode::kDefaultBudget);

/// Lally's bound d(C-hat) * d(B): C-hat the cyclic code over GF(q^ell)
/// generated by gcd of the generator images (basis 1, alpha, ..., alpha^{l-1},
/// powers of the canonical generator), B the row-space code over GF(q).
BoundEntry lally_bound(const QCCode& c, std::uint64_t budget = LinearCode::kDefaultBudget);

/// All bounds (and optionally the exact distance) for one code.
struct BoundReport {
    unsigned length = 0;
    unsigned dim = 0;
    /// stable order: jensen, lally, spectral_bch, spectral_ht, spectral_roos,
    /// spectral_shift
    std::vector<std::pair<std::string, BoundEntry>> bounds;
    std::optional<ExtNat> exact;
};

/// Runs every bound within the budget; when with_exact, also the enumeration
/// oracle, asserting each bound <= exact.
BoundReport best_bounds(const QCCode& c, bool with_exact,
                        std::uint64_t budget = LinearCode::kDefaultBudget);

}  // namespace qc

#endif
