#include "qc/counting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qc {

namespace {

void require_even(unsigned ell) {
    if (ell == 0 || ell % 2 != 0)
        throw std::invalid_argument("length must be a positive even integer");
}

void require_oct(unsigned ell) {
    if (ell == 0 || ell % 8 != 0)
        throw std::invalid_argument("length must be a positive multiple of 8");
}

/// prod_{i=lo}^{hi} (2^{a i + b} + 1), empty when hi < lo.
BigInt product_pow2_plus1(int lo, int hi, int a, int b) {
    BigInt p = 1;
    for (int i = lo; i <= hi; ++i) p *= (BigInt(1) << (a * i + b)) + 1;
    return p;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

BigInt selfdual_count_f2(unsigned ell) {
    require_even(ell);
    return product_pow2_plus1(1, static_cast<int>(ell) / 2 - 1, 1, 0);
}

BigInt selfdual_count_f2_through(unsigned ell) {
    require_even(ell);
    return product_pow2_plus1(1, static_cast<int>(ell) / 2 - 2, 1, 0);
}

BigInt selfdual_count_f4(unsigned ell) {
    require_even(ell);
    return product_pow2_plus1(0, static_cast<int>(ell) / 2 - 1, 2, 1);
}

BigInt selfdual_count_f4_through(unsigned ell) {
    require_even(ell);
    return product_pow2_plus1(0, static_cast<int>(ell) / 2 - 2, 2, 1);
}

BigInt type2_count(unsigned ell) {
    require_oct(ell);
    return 2 * product_pow2_plus1(1, static_cast<int>(ell) / 2 - 2, 1, 0);
}

BigInt type2_count_through(unsigned ell) {
    require_oct(ell);
    return 2 * product_pow2_plus1(1, static_cast<int>(ell) / 2 - 3, 1, 0);
}

namespace {

/// Shared search for the largest admissible d. step: admissible d values are
/// the positive multiples of `step`. mods: congruence condition on e for each
/// of the three summands.
unsigned existence_distance(unsigned ell, unsigned step, unsigned mod3, const BigInt& coef2,
                            const BigInt& coef3, bool include_zero_weight) {
    BigInt rhs = coef2 * coef3;
    BigInt lhs = 0;
    if (include_zero_weight) lhs = 1 + coef2 + coef3;  // the e = 0 contributions
    unsigned best = 0;
    // lhs at value d accumulates the weights e with prev_d <= e < d.
    for (unsigned d = step; d <= 3 * ell + step; d += step) {
        if (lhs < rhs) best = d;
        else break;
        for (unsigned e = d; e < d + step; ++e) {
            if (e % step == 0) lhs += binomial(3 * ell, e);
            if (e % 4 == 0) lhs += coef2 * binomial(ell, e / 2) * pow(BigInt(3), e / 2);
            if (e % mod3 == 0) lhs += coef3 * binomial(ell, e / 3);
        }
    }
    return best;
}

}  // namespace

unsigned selfdual_existence_distance(unsigned ell, bool include_zero_weight) {
    require_even(ell);
    BigInt coef2 = (BigInt(1) << (ell / 2 - 1)) + 1;
    BigInt coef3 = (BigInt(1) << (ell - 1)) + 1;
    return existence_distance(ell, 2, 6, coef2, coef3, include_zero_weight);
}

unsigned type2_existence_distance(unsigned ell, bool include_zero_weight) {
    require_oct(ell);
    BigInt coef2 = (BigInt(1) << (ell / 2 - 2)) + 1;
    BigInt coef3 = (BigInt(1) << (ell - 1)) + 1;
    return existence_distance(ell, 4, 12, coef2, coef3, include_zero_weight);
}

CountReport mass_formulas(unsigned ell) {
    require_even(ell);
    CountReport r;
    r.ell = ell;
    r.n2 = selfdual_count_f2(ell);
    r.m2 = selfdual_count_f2_through(ell);
    r.n4 = selfdual_count_f4(ell);
    r.m4 = selfdual_count_f4_through(ell);
    r.d_selfdual = selfdual_existence_distance(ell);
    if (ell % 8 == 0) {
        r.t2 = type2_count(ell);
        r.s2 = type2_count_through(ell);
        r.d_type2 = type2_existence_distance(ell);
    }
    return r;
}

std::string CountReport::json() const {
    std::ostringstream os;
    os << "{\"ell\": " << ell << ", \"selfdual_f2\": " << n2 << ", \"selfdual_f2_through\": "
       << m2 << ", \"selfdual_f4\": " << n4 << ", \"selfdual_f4_through\": " << m4;
    if (t2) os << ", \"type2\": " << *t2 << ", \"type2_through\": " << *s2;
    os << ", \"d_selfdual\": " << d_selfdual;
    if (d_type2) os << ", \"d_type2\": " << *d_type2;
    os << "}";
    return os.str();
}

double entropy(double y, unsigned q) {
    if (q < 2) throw std::invalid_argument("entropy needs an alphabet of size at least 2");
    double top = (q - 1.0) / q;
    if (y < 0 || y > top) throw std::invalid_argument("entropy argument outside [0, (q-1)/q]");
    if (y == 0) return 0;
    double lq = std::log(static_cast<double>(q));
    return (y * std::log(q - 1.0) - y * std::log(y) - (1 - y) * std::log1p(-y)) / lq;
}

double entropy_inverse(double r, unsigned q) {
    if (r < 0 || r > 1) throw std::invalid_argument("entropy value outside [0, 1]");
    double lo = 0, hi = (q - 1.0) / q;
    while (hi - lo > 1e-12) {
        double mid = (lo + hi) / 2;
        (entropy(mid, q) < r ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

double crossing_delta() {
    // Solve 0.5 + t log_3 2 + H_2(t) = 1.5 on the increasing branch.
    double lo = 0, hi = 0.5;
    double c = std::log(2.0) / std::log(3.0);
    while (hi - lo > 1e-12) {
        double t = (lo + hi) / 2;
        (0.5 + t * c + entropy(t, 2) < 1.5 ? lo : hi) = t;
    }
    return (lo + hi) / 3;  // delta = 2t/3
}

}  // namespace qc
