#include "qc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qc {

Poly::Poly(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= field_->order()) throw std::invalid_argument("coefficient out of field range");
    trim();
}

Poly Poly::one(const FieldPtr& field) { return Poly(field, {field->one().value()}); }
Poly Poly::x(const FieldPtr& field) { return Poly(field, {0, field->one().value()}); }

Poly Poly::xm_minus_1(const FieldPtr& field, unsigned m) {
    std::vector<std::uint64_t> c(m + 1, 0);
    c[0] = field->neg(field->one().value());
    c[m] = field->one().value();
    return Poly(field, std::move(c));
}

Poly Poly::monomial(const FieldPtr& field, std::uint64_t c, unsigned k) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return Poly(field, std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Poly::lead() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && lead() == field_->one().value(); }

unsigned Poly::weight() const {
    unsigned w = 0;
    for (auto c : coeffs_) w += (c != 0);
    return w;
}

namespace {
void check_same_field(const Poly& a, const Poly& b) {
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw std::invalid_argument("polynomials over different fields");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_->sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& x : c) x = field_->neg(x);
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<std::uint64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(field_, std::move(c));
}

Poly Poly::scaled(std::uint64_t c) const {
    std::vector<std::uint64_t> v(coeffs_);
    for (auto& x : v) x = field_->mul(x, c);
    return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    check_same_field(*this, o);
    return coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(*this, d);
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {Poly(field_), rem};
    std::vector<std::uint64_t> quot(static_cast<size_t>(rem.degree() - d.degree()) + 1, 0);
    std::uint64_t dinv = field_->inv(d.lead());
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        size_t shift = static_cast<size_t>(rem.degree() - d.degree());
        std::uint64_t c = field_->mul(rem.lead(), dinv);
        quot[shift] = c;
        auto rc = rem.coeffs_;
        for (size_t j = 0; j < d.coeffs_.size(); ++j)
            rc[shift + j] = field_->sub(rc[shift + j], field_->mul(c, d.coeffs_[j]));
        rem = Poly(field_, std::move(rc));
    }
    return {Poly(field_, std::move(quot)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

FieldElem Poly::eval(const FieldElem& x) const {
    const FieldPtr& E = x.field();
    if (!field_->is_subfield_of(*E))
        throw std::domain_error("no embedding path from coefficient field to evaluation field");
    std::uint64_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = E->add(E->mul(acc, x.value()), field_->embed_to(coeffs_[i], *E));
    return {E, acc};
}

Poly Poly::reciprocal() const {
    if (is_zero() || coeffs_[0] == 0)
        throw std::domain_error("reciprocal requires a nonzero constant term");
    std::vector<std::uint64_t> c(coeffs_.rbegin(), coeffs_.rend());
    return Poly(field_, std::move(c)).monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool prime_field = field_->degree() == 1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = prime_field ? std::to_string(coeffs_[i]) : "[" + std::to_string(coeffs_[i]) + "]";
        if (i == 0)
            os << c;
        else {
            if (coeffs_[i] != field_->one().value()) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Poly::coeff_list() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    return os.str();
}

Poly Poly::parse_coeff_list(const FieldPtr& field, const std::string& s) {
    std::vector<std::uint64_t> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        unsigned long long v = std::stoull(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("bad coefficient token: " + tok);
        if (v >= field->order()) throw std::invalid_argument("coefficient out of range: " + tok);
        c.push_back(v);
    }
    return Poly(field, std::move(c));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

// --- factorization of x^m - 1 ---

size_t Xm1Factorization::factor_of_exponent(unsigned u) const {
    u %= m;
    for (size_t i = 0; i < factors.size(); ++i)
        for (unsigned c : factors[i].coset)
            if (c == u) return i;
    throw std::logic_error("exponent not covered by any coset");
}

FieldPtr Xm1Factorization::constituent_field(size_t i) const {
    return Field::get(base->p(), base->degree() * factors[i].ext_degree);
}

FieldElem Xm1Factorization::constituent_root(size_t i) const {
    FieldPtr E = constituent_field(i);
    std::uint64_t v = xi.field()->pow(xi.value(), factors[i].leader);
    return {E, E->project_from(v, *xi.field())};
}

Xm1Factorization factor_xm1(const FieldPtr& base, unsigned m) {
    const std::uint64_t q = base->order();
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (std::gcd(static_cast<std::uint64_t>(m), q) != 1)
        throw std::invalid_argument("gcd(m, q) must be 1");

    Xm1Factorization out;
    out.base = base;
    out.m = m;
    auto [F, xi] = root_of_unity(q, m);
    out.splitting = F;
    out.xi = xi;

    // q-cyclotomic cosets mod m, leaders ascending.
    std::vector<bool> seen(m, false);
    for (unsigned u = 0; u < m; ++u) {
        if (seen[u]) continue;
        Xm1Factor fac;
        fac.leader = u;
        unsigned v = u;
        do {
            fac.coset.push_back(v);
            seen[v] = true;
            v = static_cast<unsigned>((static_cast<std::uint64_t>(v) * q) % m);
        } while (v != u);
        fac.ext_degree = static_cast<unsigned>(fac.coset.size());

        // minimal polynomial prod_j (x - xi^{u q^j}) computed in the splitting field
        Poly f = Poly::one(F);
        for (unsigned c : fac.coset) {
            std::uint64_t root = F->pow(xi.value(), c);
            f = f * Poly(F, {F->neg(root), F->one().value()});
        }
        // coefficients must lie in GF(q)
        std::vector<std::uint64_t> coeffs;
        coeffs.reserve(f.coeffs().size());
        for (auto c : f.coeffs()) coeffs.push_back(base->project_from(c, *F));
        fac.poly = Poly(base, std::move(coeffs));
        fac.self_reciprocal = false;
        fac.partner = -1;
        out.factors.push_back(std::move(fac));
    }

    // sanity: product of factors equals x^m - 1
    Poly prod = Poly::one(base);
    for (const auto& f : out.factors) prod = prod * f.poly;
    if (prod != Poly::xm_minus_1(base, m))
        throw std::logic_error("internal error: factor product mismatch");

    // classification into self-reciprocal factors and reciprocal pairs
    for (size_t i = 0; i < out.factors.size(); ++i) {
        unsigned u = out.factors[i].leader;
        size_t j = out.factor_of_exponent((m - u % m) % m);
        out.factors[i].partner = static_cast<int>(j);
        out.factors[i].self_reciprocal = (j == i);
    }
    for (size_t i = 0; i < out.factors.size(); ++i) {
        if (out.factors[i].self_reciprocal)
            out.self_reciprocal_indices.push_back(i);
        else if (static_cast<size_t>(out.factors[i].partner) > i)
            out.pair_indices.emplace_back(i, static_cast<size_t>(out.factors[i].partner));
    }
    return out;
}

}  // namespace qc
