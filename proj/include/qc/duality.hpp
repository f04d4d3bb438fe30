#ifndef QC_DUALITY_HPP
#define QC_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qc/crt.hpp"

namespace qc {

/// Per-factor inner-product assignment for the constituent-level duality
/// theory: self-reciprocal factors get the Hermitian product on G_i^ell,
/// except x - 1 (always) and x + 1 (q odd, m even), which stay Euclidean;
/// reciprocal pairs are handled with the Euclidean product on the shared
/// field H_t' = H_t''.
struct DualityProfile {
    Xm1Factorization fac;
    /// mode[i] is meaningful for self-reciprocal indices only.
    std::vector<DualMode> mode;

    static DualityProfile of(const FieldPtr& base, unsigned m);
};

/// Outcome of a constituent-level duality check, with a counterexample when
/// the property fails.
struct DualityVerdict {
    bool holds = false;
    /// factor index of the first failing constituent, when !holds
    std::optional<size_t> failing_index;
    /// an offending vector (over the constituent field), when one exists
    std::optional<Vec> witness;
    std::string detail;
};

/// Constituents of the Euclidean dual of C: G-duals at self-reciprocal slots,
/// swapped Euclidean duals at reciprocal pairs.
CrtDecomposition dual_constituents(const QCCode& c);

/// C self-dual iff every self-reciprocal constituent is self-dual under its
/// assigned product and C_t'' = C_t'^{perp_e} at every pair.
DualityVerdict is_self_dual(const QCCode& c);

/// C LCD iff every self-reciprocal constituent meets its assigned dual
/// trivially and C_t' meets C_t''^{perp_e} (and vice versa) trivially.
DualityVerdict is_lcd(const QCCode& c);

/// One slot of input to build_qccd: either a self-reciprocal index with a
/// code that must be LCD under the assigned product, or a pair index with a
/// single Euclidean LCD code placed on both sides (C_t' = C_t'').
struct QccdPart {
    size_t index;  ///< factor index; for a pair, the index with smaller leader
    LinearCode code;
};

/// Builds an LCD QC code from parts that satisfy the sufficient criterion
/// (self-reciprocal slots: zero assigned hull; pairs: Euclidean LCD, used on
/// both sides). Validates the hypotheses and reports the failing slot.
QCCode build_qccd(const FieldPtr& base, unsigned m, unsigned ell,
                  const std::vector<QccdPart>& parts);

}  // namespace qc

#endif
