#ifndef QC_COUNTING_HPP
#define QC_COUNTING_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qc {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(unsigned n, unsigned k);

/// Mass-formula counts for self-dual codes, used to bound from below the
/// minimum distance achievable by some self-dual binary QC code of length
/// 3*ell and index ell built from a binary code C1 and a Hermitian self-dual
/// quaternary code C2 on the cyclic decomposition of x^3 - 1.
///
/// n2/m2: number of self-dual binary codes of length ell / of those through a
/// fixed admissible nonzero word. n4/m4: the Hermitian quaternary analogues.
/// t2/s2: Type II (doubly-even) versions, defined only when 8 | ell.
struct CountReport {
    unsigned ell = 0;
    BigInt n2, m2, n4, m4;
    std::optional<BigInt> t2, s2;
    unsigned d_selfdual = 0;           ///< selfdual_existence_distance(ell)
    std::optional<unsigned> d_type2;   ///< type2_existence_distance(ell), 8 | ell

    std::string json() const;
};

/// N(2,ell) = prod_{i=1}^{ell/2-1} (2^i + 1); empty product = 1. ell even.
BigInt selfdual_count_f2(unsigned ell);
/// M(2,ell) = prod_{i=1}^{ell/2-2} (2^i + 1). ell even.
BigInt selfdual_count_f2_through(unsigned ell);
/// N(4,ell) = prod_{i=0}^{ell/2-1} (2^{2i+1} + 1). ell even.
BigInt selfdual_count_f4(unsigned ell);
/// M(4,ell) = prod_{i=0}^{ell/2-2} (2^{2i+1} + 1). ell even.
BigInt selfdual_count_f4_through(unsigned ell);
/// T(2,ell) = 2 prod_{i=1}^{ell/2-2} (2^i + 1). 8 | ell.
BigInt type2_count(unsigned ell);
/// S(2,ell) = 2 prod_{i=1}^{ell/2-3} (2^i + 1). 8 | ell.
BigInt type2_count_through(unsigned ell);

/// All counts plus both existence distances. ell even; the Type II fields
/// are filled only when 8 | ell.
CountReport mass_formulas(unsigned ell);

/// q-ary entropy H_q(y) = y log_q(q-1) - y log_q y - (1-y) log_q(1-y),
/// 0 < y < (q-1)/q; extended by continuity with H_q(0) = 0.
double entropy(double y, unsigned q);
/// Inverse on the increasing branch [0, (q-1)/q], bisection to 1e-12.
/// Requires 0 <= r <= 1.
double entropy_inverse(double r, unsigned q);

/// The relative-distance threshold at which the counting argument's middle
/// term (mixed binary/quaternary words) stops being dominated: the delta
/// with 0.5 + t log_3 2 + H_2(t) = 1.5 at t = 3 delta / 2, about 0.1762.
/// (With the 4-ary entropy normalization the linear term would read
/// log_2 3 and the crossing would move to about 0.1258; the published
/// constant corresponds to log_3 2, and that is what is solved here.)
double crossing_delta();

/// Largest even d satisfying the counting inequality
///   sum_{e<d, 2|e} C(3 ell, e) + (2^{ell/2-1}+1) sum_{e<d, 4|e} C(ell, e/2) 3^{e/2}
///     + (2^{ell-1}+1) sum_{e<d, 6|e} C(ell, e/3)  <  (2^{ell/2-1}+1)(2^{ell-1}+1);
/// guarantees a self-dual binary QC code of length 3 ell with distance >= d.
/// Sums run over nonzero weights e >= 2; pass include_zero_weight = true to
/// also charge e = 0 for comparison. ell even.
unsigned selfdual_existence_distance(unsigned ell, bool include_zero_weight = false);

/// Type II variant: largest multiple of 4, sums over 4 | e (and 12 | e for
/// the third term), threshold (2^{ell/2-2}+1)(2^{ell-1}+1). 8 | ell.
unsigned type2_existence_distance(unsigned ell, bool include_zero_weight = false);

}  // namespace qc

#endif
