#ifndef QC_QC_CODE_HPP
#define QC_QC_CODE_HPP

#include <cstdint>
#include <vector>

#include "qc/linear_code.hpp"
#include "qc/poly.hpp"

namespace qc {

/// Upper-triangular ell x ell polynomial matrix forming the reduced Groebner
/// basis (POT order) of the preimage module of a QC code: monic diagonals
/// dividing x^m - 1, above-diagonal entries reduced mod the diagonal of their
/// column, rows with diagonal x^m - 1 equal to (x^m - 1) e_j.
struct GroebnerMatrix {
    std::vector<std::vector<Poly>> rows;  // rows[i][j] = g_{i,j}

    const Poly& at(size_t i, size_t j) const { return rows[i][j]; }
    size_t ell() const { return rows.size(); }
};

/// A quasi-cyclic code of length m*ell and index ell over GF(q), given as an
/// R-submodule of R^ell, R = F_q[x]/(x^m - 1). gcd(m, q) = 1 is enforced at
/// construction.
class QCCode {
  public:
    QCCode(FieldPtr base, unsigned m, unsigned ell, std::vector<std::vector<Poly>> generators);

    static QCCode zero(FieldPtr base, unsigned m, unsigned ell);
    static QCCode full(FieldPtr base, unsigned m, unsigned ell);

    const FieldPtr& field() const { return base_; }
    unsigned m() const { return m_; }
    unsigned ell() const { return ell_; }
    unsigned length() const { return m_ * ell_; }
    const std::vector<std::vector<Poly>>& generators() const { return gens_; }

    /// m x ell array -> polynomial vector (column j becomes c_j(x)).
    static std::vector<Poly> from_array(const FieldPtr& base, const Mat& array);
    /// polynomial vector -> m x ell array; inverse of from_array.
    static Mat to_array(const std::vector<Poly>& c, unsigned m);

    const GroebnerMatrix& groebner() const;
    unsigned dimension() const;
    /// Expansion to an F_q linear code of length m*ell: rows x^i * generator,
    /// arrays flattened row-major.
    const LinearCode& expand() const;
    /// Smallest divisor ell' of ell with the expanded code shift-by-ell'
    /// invariant.
    unsigned true_index() const;

    /// Multiply a polynomial vector by a(x) in R^ell.
    std::vector<Poly> mul_codeword(const std::vector<Poly>& c, const Poly& a) const;

  private:
    FieldPtr base_;
    unsigned m_, ell_;
    std::vector<std::vector<Poly>> gens_;
    mutable std::optional<GroebnerMatrix> groebner_;
    mutable std::optional<LinearCode> expanded_;
};

/// Cyclic shift by s positions (towards higher index, wrap-around).
Vec shifted(const Vec& v, unsigned s);

}  // namespace qc

#endif
