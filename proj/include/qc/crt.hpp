#ifndef QC_CRT_HPP
#define QC_CRT_HPP

#include <vector>

#include "qc/qc_code.hpp"

namespace qc {

/// Constituent i of a QC code: a length-ell linear code over E_i = GF(q^{e_i}),
/// obtained by evaluating the generators at xi^{u_i}.
struct Constituent {
    size_t index;      ///< factor index in the x^m - 1 factorization
    unsigned leader;   ///< coset leader u_i
    FieldPtr field;    ///< E_i
    LinearCode code;   ///< length-ell code over E_i
};

/// A QC code decomposed along the factorization of x^m - 1. All s slots are
/// always present; unused constituents are zero codes.
struct CrtDecomposition {
    Xm1Factorization fac;
    unsigned ell = 0;
    std::vector<Constituent> parts;

    const Constituent& at(size_t i) const { return parts.at(i); }
    /// dim_{F_q} of the code this tuple came from: sum e_i * dim C_i.
    unsigned total_dimension() const;
};

CrtDecomposition decompose(const QCCode& c);

/// Evaluation map phi_i: <theta_i> -> E_i, a(x) |-> a(xi^{u_i}).
FieldElem crt_phi(const Xm1Factorization& fac, size_t i, const Poly& a);
/// Inverse map psi_i: E_i -> <theta_i>, delta |-> sum a_k x^k with
/// a_k = (1/m) Tr_{E_i/F_q}(delta * xi^{-k u_i}).
Poly crt_psi(const Xm1Factorization& fac, size_t i, const FieldElem& delta);
/// Generating primitive idempotent theta_i = psi_i(1) of the minimal cyclic
/// code with check polynomial f_i.
Poly primitive_idempotent(const Xm1Factorization& fac, size_t i);

/// Concatenated (inverse CRT) construction: the QC code
/// \oplus_i <theta_i> box C_i, psi_i applied symbol-wise to each basis
/// codeword. Slots may be any subset; decompose() of the result reproduces
/// the inputs.
QCCode jensen_concatenate(const Xm1Factorization& fac, unsigned ell,
                          const std::vector<Constituent>& parts);

/// Trace representation: given one codeword lambda_i in C_i per constituent,
/// returns the m x ell array with entry (j,t) =
/// sum_i Tr_{E_i/F_q}(lambda_{i,t} xi^{-j u_i})  (the 1/m-free form).
/// Also evaluates the unified single-trace form with coefficients k_i
/// satisfying Tr_{F/E_i}(k_i) = 1 and checks both agree entrywise.
/// Throws std::invalid_argument when some lambda_i is not in C_i.
Mat trace_codeword(const CrtDecomposition& dec, const std::vector<Vec>& lambda);

/// The length-m cyclic code D such that every column of every codeword of C
/// lies in D: the basic zero set of D's dual is {xi^{-u_i} : C_i != 0}.
/// Returned as a QC code of index 1.
QCCode column_cyclic_code(const QCCode& c);

/// Cubic construction (m = 3, characteristic 2, q = 2 mod 3): the QC code of
/// length 3*ell with codeword rows (z+b, z+a, z+a+b) for z in C1 and
/// a + beta*b in C2, where beta^2 + beta + 1 = 0. Its constituents are
/// exactly (C1, C2).
QCCode cubic_construction(const LinearCode& c1, const LinearCode& c2);

}  // namespace qc

#endif
