#include "qc/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qc {

namespace {

constexpr std::uint64_t kOrderBudget = 1u << 20;

// --- GF(p) polynomial helpers for field bootstrap (coeff vectors, ascending) ---

using PPoly = std::vector<std::uint64_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // mod is monic of degree d
    const size_t d = mod.size() - 1;
    for (size_t k = r.size(); k-- > d;) {
        std::uint64_t lead = r[k];
        if (lead == 0) continue;
        size_t shift = k - d;
        for (size_t j = 0; j <= d; ++j)
            r[shift + j] = (r[shift + j] + p - (lead * mod[j]) % p) % p;
    }
    if (r.size() > d) r.resize(d);
    ptrim(r);
    return r;
}

PPoly ppowmod(PPoly base, std::uint64_t k, const PPoly& mod, std::uint64_t p) {
    PPoly r{1};
    while (k > 0) {
        if (k & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        k >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    auto modinv = [p](std::uint64_t x) {
        // Fermat
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        std::uint64_t binv = modinv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = a.back() * binv % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PPoly& f, std::uint64_t p) {
    const unsigned e = static_cast<unsigned>(f.size() - 1);
    // x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for prime r | e.
    PPoly x{0, 1};
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    PPoly xpe = ppowmod(x, pe, f, p);
    PPoly diff = xpe;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_divisors(e)) {
        std::uint64_t pd = 1;
        for (unsigned i = 0; i < e / r; ++i) pd *= p;
        PPoly xpd = ppowmod(x, pd, f, p);
        PPoly d2 = xpd;
        if (d2.size() < 2) d2.resize(2, 0);
        d2[1] = (d2[1] + p - 1) % p;
        ptrim(d2);
        PPoly g = pgcd(d2, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Coordinate-lexicographically smallest monic irreducible of degree e over GF(p).
PPoly find_modulus(std::uint64_t p, unsigned e) {
    std::vector<std::uint64_t> c(e, 0);  // c[0..e-1], lex order with c[0] most significant
    while (true) {
        PPoly f(c.begin(), c.end());
        f.push_back(1);
        if (f[0] != 0 && is_irreducible(f, p)) return f;
        // next tuple in lex order: increment from the last coordinate
        int i = static_cast<int>(e) - 1;
        for (;;) {
            if (i < 0) throw std::logic_error("no irreducible polynomial found");
            if (++c[i] < p) break;
            c[i--] = 0;
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    auto ps = prime_divisors(q);
    if (ps.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = ps[0];
    unsigned e = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("not a prime power: " + std::to_string(q));
        t /= p;
        ++e;
    }
    return {p, e};
}

FieldPtr Field::get(std::uint64_t p, unsigned e) {
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (!is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kOrderBudget) throw BudgetError("field order exceeds budget 2^20");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;
    PPoly mod;
    if (e > 1) {
        mod = find_modulus(p, e);
        f->modulus_ = mod;
    } else {
        mod = {0, 1};  // unused
    }

    // Raw mul on indices via coordinate polynomials, table-free (bootstrap only).
    auto to_poly = [&](std::uint64_t v) {
        PPoly c;
        while (v) {
            c.push_back(v % p);
            v /= p;
        }
        return c;
    };
    auto to_idx = [&](const PPoly& c) {
        std::uint64_t v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    };
    auto raw_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (e == 1) return a * b % p;
        return to_idx(pmulmod(to_poly(a), to_poly(b), mod, p));
    };
    auto raw_pow = [&](std::uint64_t a, std::uint64_t k) -> std::uint64_t {
        std::uint64_t r = 1, base = a;
        while (k) {
            if (k & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            k >>= 1;
        }
        return r;
    };

    // Canonical generator: coordinate-lex smallest primitive element.
    auto rs = prime_divisors(q - 1);
    std::uint64_t gen = 0;
    bool found = false;
    std::vector<std::uint64_t> digits(e, 0);
    for (std::uint64_t step = 0; step < q && !found; ++step) {
        // digits with digits[0] most significant in lex order -> index
        std::uint64_t v = 0;
        for (size_t i = e; i-- > 0;) v = v * p + digits[i];
        std::uint64_t idx = v;
        if (idx != 0) {
            bool prim = true;
            for (std::uint64_t r : rs)
                if (raw_pow(idx, (q - 1) / r) == 1) {
                    prim = false;
                    break;
                }
            if (prim) {
                gen = idx;
                found = true;
                break;
            }
        }
        int i = static_cast<int>(e) - 1;
        while (i >= 0) {
            if (++digits[i] < p) break;
            digits[i--] = 0;
        }
        if (i < 0) break;
    }
    if (!found) throw std::logic_error("no primitive element found");
    f->gen_ = gen;

    f->exp_.resize(q - 1);
    f->log_.assign(q, 0);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        f->exp_[i] = static_cast<std::uint32_t>(acc);
        f->log_[acc] = static_cast<std::uint32_t>(i);
        acc = raw_mul(acc, gen);
    }
    if (acc != 1) throw std::logic_error("generator order check failed");

    cache[key] = f;
    return f;
}

FieldPtr Field::of_order(std::uint64_t q) {
    auto [p, e] = factor_prime_power(q);
    return get(p, e);
}

FieldElem Field::elem(std::uint64_t index) const {
    if (index >= q_) throw std::invalid_argument("element index out of range");
    return {shared_from_this(), index};
}

FieldElem Field::from_coords(const std::vector<std::uint64_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("coordinate vector has wrong length");
    std::uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coordinate not reduced mod p");
        v = v * p_ + c[i];
    }
    return {shared_from_this(), v};
}

FieldElem Field::from_int(std::uint64_t k) const { return {shared_from_this(), k % p_}; }

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a + b) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

std::uint64_t Field::pow(std::uint64_t a, std::int64_t k) const {
    if (a == 0) {
        if (k == 0) return one_value();
        if (k < 0) throw std::domain_error("inverse of zero");
        return 0;
    }
    std::int64_t mod = static_cast<std::int64_t>(q_ - 1);
    std::int64_t ex = ((k % mod) + mod) % mod;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * ex) % (q_ - 1)];
}

std::uint64_t Field::elem_order(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t n = q_ - 1;
    std::uint64_t d = dlog(a);  // ord(g^d) = n / gcd(n, d)
    if (d == 0) return 1;
    return n / std::gcd(n, d);
}

std::uint64_t Field::dlog(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

bool Field::is_subfield_of(const Field& target) const {
    return p_ == target.p_ && target.e_ % e_ == 0;
}

std::uint64_t Field::embed_to(std::uint64_t a, const Field& target) const {
    if (this == &target) return a;
    if (!is_subfield_of(target)) throw std::domain_error(name() + " is not a subfield of " + target.name());
    if (a == 0) return 0;
    std::uint64_t ratio = (target.q_ - 1) / (q_ - 1);
    return target.exp_[(static_cast<std::uint64_t>(log_[a]) * ratio) % (target.q_ - 1)];
}

std::uint64_t Field::project_from(std::uint64_t a, const Field& target) const {
    if (this == &target) return a;
    if (!is_subfield_of(target)) throw std::domain_error(name() + " is not a subfield of " + target.name());
    if (a == 0) return 0;
    std::uint64_t ratio = (target.q_ - 1) / (q_ - 1);
    std::uint64_t d = target.log_[a];
    if (d % ratio != 0) throw std::domain_error("element not in subfield " + name());
    return exp_[(d / ratio) % (q_ - 1)];
}

std::uint64_t Field::trace_to(const Field& sub, std::uint64_t a) const {
    if (!sub.is_subfield_of(*this)) throw std::domain_error(sub.name() + " is not a subfield of " + name());
    unsigned rel = e_ / sub.e_;
    std::uint64_t qs = sub.q_;
    std::uint64_t acc = 0, t = a;
    for (unsigned i = 0; i < rel; ++i) {
        acc = add(acc, t);
        t = pow(t, static_cast<std::int64_t>(qs));
    }
    return sub.project_from(acc, *this);
}

std::string Field::name() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (e_ > 1) os << "^" << e_;
    os << ")";
    return os.str();
}

// --- FieldElem ---

std::vector<std::uint64_t> FieldElem::coords() const {
    std::vector<std::uint64_t> c(field_->degree());
    std::uint64_t v = value_;
    for (auto& x : c) {
        x = v % field_->p();
        v /= field_->p();
    }
    return c;
}

std::string FieldElem::str() const {
    auto c = coords();
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(*this, o);
    return {field_, field_->add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(*this, o);
    return {field_, field_->sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(*this, o);
    return {field_, field_->mul(value_, o.value_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same(*this, o);
    return {field_, field_->div(value_, o.value_)};
}
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::int64_t k) const { return {field_, field_->pow(value_, k)}; }
bool FieldElem::operator==(const FieldElem& o) const {
    check_same(*this, o);
    return value_ == o.value_;
}

std::pair<FieldPtr, FieldElem> root_of_unity(std::uint64_t q, unsigned m) {
    auto [p, j] = factor_prime_power(q);
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (std::gcd(static_cast<std::uint64_t>(m), q) != 1)
        throw std::invalid_argument("gcd(m, q) must be 1");
    // t = multiplicative order of q mod m
    unsigned t = 1;
    std::uint64_t r = q % m;
    while (r != 1 % m) {
        r = r * (q % m) % m;
        ++t;
    }
    if (m == 1) t = 1;
    FieldPtr F = Field::get(p, j * t);
    std::uint64_t xi = F->pow(F->gen().value(), static_cast<std::int64_t>((F->order() - 1) / m));
    return {F, FieldElem(F, xi)};
}

}  // namespace qc
