#ifndef QC_SELFTEST_HPP
#define QC_SELFTEST_HPP

#include <string>
#include <vector>

namespace qc {

/// One verification suite of the library's release gate.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  ///< counts and anchors checked, or the first failure
};

/// Outcome of the full deterministic self-verification run. All randomness
/// is seeded, and the JSON rendering contains no timing or environment data,
/// so two runs must produce byte-identical reports.
struct SelftestReport {
    std::vector<CriterionResult> criteria;

    bool ok() const;
    std::string json() const;
};

/// Runs every verification suite (factorization, module structure, trace
/// representation, duality, bound soundness, cyclic-bound hierarchy,
/// counting formulas, convolutional sandwich) at full scale.
SelftestReport run_selftest();

}  // namespace qc

#endif
