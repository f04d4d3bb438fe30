#ifndef QC_LINEAR_CODE_HPP
#define QC_LINEAR_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qc/common.hpp"
#include "qc/galois.hpp"

namespace qc {

using Vec = std::vector<std::uint64_t>;     // row of element indices
using Mat = std::vector<Vec>;

enum class DualMode { Euclidean, Hermitian };

/// A linear code over a Field given by a (possibly redundant) generator
/// matrix. The reduced row echelon form and rank are computed eagerly;
/// instances are immutable afterwards.
class LinearCode {
  public:
    LinearCode(FieldPtr field, unsigned n, Mat generators);
    static LinearCode zero(FieldPtr field, unsigned n);
    static LinearCode full(FieldPtr field, unsigned n);

    const FieldPtr& field() const { return field_; }
    unsigned length() const { return n_; }
    unsigned dim() const { return static_cast<unsigned>(rref_.size()); }
    const Mat& generators() const { return gens_; }
    const Mat& basis() const { return rref_; }  ///< reduced row echelon basis

    bool is_zero() const { return rref_.empty(); }
    bool contains(const Vec& v) const;
    bool operator==(const LinearCode& o) const;
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    /// Euclidean or Hermitian dual. Hermitian requires |field| a perfect
    /// square (conjugation by x -> x^sqrt(q)).
    LinearCode dual(DualMode mode = DualMode::Euclidean) const;
    LinearCode intersect(const LinearCode& o) const;  // via dual-sum duality
    LinearCode sum(const LinearCode& o) const;
    LinearCode hull(DualMode mode = DualMode::Euclidean) const;

    /// Exact minimum distance by information-symbol enumeration; zero code
    /// gives +infinity. Throws BudgetError when q^k > budget.
    ExtNat min_distance_exact(std::uint64_t budget = kDefaultBudget) const;

    static constexpr std::uint64_t kDefaultBudget = 1ull << 24;

  private:
    FieldPtr field_;
    unsigned n_;
    Mat gens_;
    Mat rref_;
};

/// In-place reduced row echelon form over the field; returns rank.
unsigned rref_in_place(const FieldPtr& field, Mat& rows);
/// Basis of the right null space of the given rows (length n each).
Mat null_space(const FieldPtr& field, const Mat& rows, unsigned n);

unsigned hamming_weight(const Vec& v);

}  // namespace qc

#endif
