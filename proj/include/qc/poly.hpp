#ifndef QC_POLY_HPP
#define QC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qc/galois.hpp"

namespace qc {

/// Dense univariate polynomial over a Field. Coefficients ascending, no
/// trailing zeros; the zero polynomial has an empty coefficient vector and
/// degree -1 (standing in for the "-infinity" marker).
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<std::uint64_t> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
    static Poly one(const FieldPtr& field);
    static Poly x(const FieldPtr& field);
    /// x^m - 1
    static Poly xm_minus_1(const FieldPtr& field, unsigned m);
    /// monomial c * x^k
    static Poly monomial(const FieldPtr& field, std::uint64_t c, unsigned k);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t lead() const;
    bool is_monic() const;
    /// Number of nonzero coefficients.
    unsigned weight() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(std::uint64_t c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// (quotient, remainder); divisor nonzero, deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly monic() const;

    /// Evaluation at a point; the point may live in an extension of the
    /// coefficient field, in which case coefficients are embedded first.
    FieldElem eval(const FieldElem& x) const;

    /// Coefficient-reversed polynomial x^deg * p(1/x), normalized monic.
    /// Requires p(0) != 0.
    Poly reciprocal() const;

    std::string str() const;  // human form, e.g. "1 + x + x^3"
    std::string coeff_list() const;  // CLI form "1,1,0,1"
    static Poly parse_coeff_list(const FieldPtr& field, const std::string& s);

  private:
    void trim();

    FieldPtr field_;
    std::vector<std::uint64_t> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic

/// One irreducible factor of x^m - 1 with its cyclotomic data.
struct Xm1Factor {
    Poly poly;           ///< irreducible over GF(q)
    unsigned leader;     ///< smallest u with f(xi^u) = 0
    std::vector<unsigned> coset;  ///< the q-cyclotomic coset of leader mod m
    unsigned ext_degree;          ///< deg f = |coset|
    bool self_reciprocal;
    int partner;  ///< index of the reciprocal factor (self index when self-reciprocal)
};

/// x^m - 1 = f_1 ... f_s over GF(q), factors ordered by ascending coset
/// leader (so f_1 = x - 1), classified into self-reciprocal factors and
/// reciprocal pairs (h, h*) with s = n + 2p.
struct Xm1Factorization {
    FieldPtr base;     ///< GF(q)
    unsigned m;
    FieldPtr splitting;  ///< GF(q^t), t = ord_m(q)
    FieldElem xi;        ///< fixed primitive m-th root of unity
    std::vector<Xm1Factor> factors;
    std::vector<size_t> self_reciprocal_indices;       ///< ascending
    std::vector<std::pair<size_t, size_t>> pair_indices;  ///< (h_t, h_t*), first has smaller leader

    size_t size() const { return factors.size(); }
    /// Index of the factor whose coset contains exponent u.
    size_t factor_of_exponent(unsigned u) const;
    /// The field E_i = GF(q^{e_i}) of constituent i.
    FieldPtr constituent_field(size_t i) const;
    /// xi^{u_i} pulled back from the splitting field into E_i.
    FieldElem constituent_root(size_t i) const;
};

/// Factors x^m - 1 over GF(q) via cyclotomic cosets. Requires gcd(m, q) = 1.
Xm1Factorization factor_xm1(const FieldPtr& base, unsigned m);

}  // namespace qc

#endif
