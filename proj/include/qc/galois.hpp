#ifndef QC_GALOIS_HPP
#define QC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qc/common.hpp"

namespace qc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a finite field. Value semantics; the owning field is shared.
/// Internally an index in [0, q): the mixed-radix encoding c0 + c1*p + ... of
/// the coordinate vector over GF(p).
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr field, std::uint64_t value) : field_(std::move(field)), value_(value) {}

    const FieldPtr& field() const { return field_; }
    std::uint64_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    std::vector<std::uint64_t> coords() const;
    std::string str() const;  // "(c0,c1,...)"

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(std::int64_t k) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

  private:
    FieldPtr field_;
    std::uint64_t value_ = 0;
};

/// GF(p^e), p prime, with a deterministically chosen modulus (the
/// lexicographically smallest monic irreducible of degree e over GF(p),
/// coefficients ordered constant term first) and canonical generator (the
/// coordinate-lexicographically smallest primitive element). Immutable;
/// instances are memoized per (p, e).
class Field : public std::enable_shared_from_this<Field> {
  public:
    /// Memoized factory. Throws std::invalid_argument if p is not prime,
    /// BudgetError if p^e exceeds the budget (2^20).
    static FieldPtr get(std::uint64_t p, unsigned e);
    /// q = p^e given as a prime power; factors q.
    static FieldPtr of_order(std::uint64_t q);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint64_t order() const { return q_; }
    /// Modulus coefficients over GF(p), ascending, size e+1. Empty when e == 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {shared_from_this(), 0}; }
    FieldElem one() const { return {shared_from_this(), one_value()}; }
    FieldElem gen() const { return {shared_from_this(), gen_}; }
    FieldElem elem(std::uint64_t index) const;
    FieldElem from_coords(const std::vector<std::uint64_t>& c) const;
    /// Image of k in the prime subfield, k reduced mod p.
    FieldElem from_int(std::uint64_t k) const;

    // Raw arithmetic on element indices.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::int64_t k) const;
    std::uint64_t frobenius(std::uint64_t a) const { return pow(a, static_cast<std::int64_t>(p_)); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t elem_order(std::uint64_t a) const;
    /// Discrete log base the canonical generator; a != 0.
    std::uint64_t dlog(std::uint64_t a) const;

    bool same(const Field& o) const { return this == &o; }
    /// True if this field embeds canonically into target (same p, degree divides).
    bool is_subfield_of(const Field& target) const;
    /// Canonical embedding, fixed by g_sub -> g_target^((q_t-1)/(q_s-1)).
    std::uint64_t embed_to(std::uint64_t a, const Field& target) const;
    /// Inverse of embed_to; throws std::domain_error if a is not in the image.
    std::uint64_t project_from(std::uint64_t a, const Field& target) const;
    /// Trace onto the subfield: a + a^qs + ... ; result as an element of sub.
    std::uint64_t trace_to(const Field& sub, std::uint64_t a) const;

    std::string name() const;  // "GF(p^e)" or "GF(p)"

  private:
    Field() = default;

    std::uint64_t one_value() const { return 1 % p_ == 0 ? 0 : 1; }

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t gen_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[x], x != 0
};

/// Splitting field of x^m - 1 over GF(q) together with a fixed primitive m-th
/// root of unity xi = g^((q^t - 1)/m). Requires gcd(m, q) = 1.
std::pair<FieldPtr, FieldElem> root_of_unity(std::uint64_t q, unsigned m);

bool is_prime(std::uint64_t n);
/// Factors a prime power q = p^e; throws std::invalid_argument otherwise.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace qc

#endif
