#ifndef QC_CONVOLUTIONAL_HPP
#define QC_CONVOLUTIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qc/common.hpp"
#include "qc/poly.hpp"
#include "qc/qc_code.hpp"

namespace qc {

/// Rank of a polynomial matrix over the rational function field GF(q)(x),
/// computed by fraction-free Gaussian elimination (cross-multiplication keeps
/// everything inside GF(q)[x]).
unsigned poly_matrix_rank(std::vector<std::vector<Poly>> a);

/// An (ell, k) convolutional code over GF(q): a rank-k F_q[x]-submodule of
/// F_q[x]^ell presented by a k x ell polynomial encoder G of full row rank
/// over the rational function field.
///
/// Only polynomial encoders are supported, and no attempt is made to detect
/// catastrophic encoders or to reduce G to a minimal/basic form; d_free and
/// its bounds are properties of the row module and do not depend on the
/// encoder choice.
class ConvolutionalCode {
  public:
    /// encoder must be a nonempty rectangular k x ell matrix of polynomials
    /// over `field` with rank k; otherwise invalid_argument.
    ConvolutionalCode(FieldPtr field, std::vector<std::vector<Poly>> encoder);

    const FieldPtr& field() const { return field_; }
    unsigned k() const { return static_cast<unsigned>(encoder_.size()); }
    unsigned ell() const { return static_cast<unsigned>(encoder_[0].size()); }
    const std::vector<std::vector<Poly>>& encoder() const { return encoder_; }

  private:
    FieldPtr field_;
    std::vector<std::vector<Poly>> encoder_;
};

/// The QC code of length m*ell generated by the encoder rows reduced
/// coordinatewise mod x^m - 1. Requires m > 1 and gcd(m, q) = 1.
QCCode project(const ConvolutionalCode& c, unsigned m);

/// Monic gcd of all k x k minors of the encoder (the product of its
/// invariant factors). Nonzero because the encoder has rank k.
///
/// A noncatastrophic encoder has minor gcd x^delta; since x^m - 1 has a
/// nonzero constant term, such a gcd is always coprime to x^m - 1, which is
/// the hypothesis dfree_lower_bound needs.
Poly encoder_minor_gcd(const ConvolutionalCode& c);

/// Certified lower bound on the free distance obtained from one projection.
struct DfreeBound {
    ExtNat value;
    bool exact;  ///< true when value is the exact minimum distance of the projection
    std::string witness;
};

/// d_free(C) >= d(project(C, m)). The projection distance is computed
/// exactly when the enumeration fits the budget; otherwise the best
/// structural lower bound is used and the result is flagged exact = false.
///
/// The inequality is a theorem about the row module only when
/// gcd(encoder_minor_gcd(c), x^m - 1) = 1 (satisfied by every
/// noncatastrophic encoder). When the gcds share a factor, a minimum-weight
/// codeword can reduce to zero mod x^m - 1 without its quotient by
/// x^m - 1 staying in the module, and the returned value bounds the free
/// distance of the saturated module instead. No check is performed here;
/// callers wanting the certificate should test the gcd condition.
DfreeBound dfree_lower_bound(const ConvolutionalCode& c, unsigned m,
                             std::uint64_t budget = LinearCode::kDefaultBudget);

/// Minimum weight of u(x) G over all nonzero messages u with
/// deg u_i <= degree_cap: an upper bound on d_free that must dominate every
/// dfree_lower_bound. Throws BudgetError when q^{k (degree_cap+1)} exceeds
/// the budget.
std::uint64_t dfree_search(const ConvolutionalCode& c, unsigned degree_cap,
                           std::uint64_t budget = LinearCode::kDefaultBudget);

}  // namespace qc

#endif
