#include "qc/qc_code.hpp"

#include <algorithm>
#include <numeric>

namespace qc {

Vec shifted(const Vec& v, unsigned s) {
    const size_t n = v.size();
    Vec out(n);
    for (size_t i = 0; i < n; ++i) out[(i + s) % n] = v[i];
    return out;
}

QCCode::QCCode(FieldPtr base, unsigned m, unsigned ell, std::vector<std::vector<Poly>> generators)
    : base_(std::move(base)), m_(m), ell_(ell), gens_(std::move(generators)) {
    if (m_ == 0 || ell_ == 0) throw std::invalid_argument("m and ell must be positive");
    if (std::gcd(static_cast<std::uint64_t>(m_), base_->order()) != 1)
        throw std::invalid_argument("gcd(m, q) must be 1");
    Poly mod = Poly::xm_minus_1(base_, m_);
    for (auto& g : gens_) {
        if (g.size() != ell_) throw std::invalid_argument("generator has wrong index");
        for (auto& gj : g) {
            if (!gj.field()->same(*base_)) throw std::invalid_argument("generator field mismatch");
            if (gj.degree() >= static_cast<int>(m_)) gj = gj % mod;
        }
    }
}

QCCode QCCode::zero(FieldPtr base, unsigned m, unsigned ell) {
    return QCCode(std::move(base), m, ell, {});
}

QCCode QCCode::full(FieldPtr base, unsigned m, unsigned ell) {
    std::vector<std::vector<Poly>> gens;
    for (unsigned j = 0; j < ell; ++j) {
        std::vector<Poly> g(ell, Poly::zero(base));
        g[j] = Poly::one(base);
        gens.push_back(std::move(g));
    }
    return QCCode(std::move(base), m, ell, std::move(gens));
}

std::vector<Poly> QCCode::from_array(const FieldPtr& base, const Mat& array) {
    if (array.empty()) throw std::invalid_argument("empty array");
    const size_t m = array.size(), ell = array[0].size();
    for (const auto& row : array)
        if (row.size() != ell) throw std::invalid_argument("ragged array");
    std::vector<Poly> c;
    c.reserve(ell);
    for (size_t j = 0; j < ell; ++j) {
        std::vector<std::uint64_t> coeffs(m);
        for (size_t r = 0; r < m; ++r) coeffs[r] = array[r][j];
        c.emplace_back(base, std::move(coeffs));
    }
    return c;
}

Mat QCCode::to_array(const std::vector<Poly>& c, unsigned m) {
    if (c.empty()) throw std::invalid_argument("empty polynomial vector");
    Mat array(m, Vec(c.size(), 0));
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j].degree() >= static_cast<int>(m)) throw std::invalid_argument("degree >= m");
        for (size_t r = 0; r < m; ++r) array[r][j] = c[j].coeff(r);
    }
    return array;
}

std::vector<Poly> QCCode::mul_codeword(const std::vector<Poly>& c, const Poly& a) const {
    Poly mod = Poly::xm_minus_1(base_, m_);
    std::vector<Poly> out;
    out.reserve(c.size());
    for (const auto& cj : c) out.push_back((cj * a) % mod);
    return out;
}

const GroebnerMatrix& QCCode::groebner() const {
    if (groebner_) return *groebner_;

    const Poly mod = Poly::xm_minus_1(base_, m_);
    using Row = std::vector<Poly>;
    std::vector<Row> work = gens_;

    auto row_is_zero = [](const Row& r) {
        return std::all_of(r.begin(), r.end(), [](const Poly& p) { return p.is_zero(); });
    };
    auto sub_scaled = [&](Row& a, const Row& b, const Poly& q) {
        for (size_t j = 0; j < a.size(); ++j) a[j] = a[j] - q * b[j];
    };

    std::vector<Row> pivots;
    pivots.reserve(ell_);
    for (unsigned col = 0; col < ell_; ++col) {
        // Re-adding (x^m - 1) e_col keeps the span (it is in the module) and
        // guarantees a pivot whose diagonal divides x^m - 1.
        Row unit(ell_, Poly::zero(base_));
        unit[col] = mod;
        work.push_back(std::move(unit));

        // Euclidean elimination on column col among rows with zeros before col.
        for (;;) {
            std::vector<size_t> cand;
            for (size_t i = 0; i < work.size(); ++i) {
                if (row_is_zero(work[i])) continue;
                bool zeros_before = true;
                for (unsigned j = 0; j < col; ++j)
                    if (!work[i][j].is_zero()) {
                        zeros_before = false;
                        break;
                    }
                if (zeros_before && !work[i][col].is_zero()) cand.push_back(i);
            }
            if (cand.empty()) throw std::logic_error("triangularization lost the unit row");
            // min-degree row at this column
            size_t best = cand[0];
            for (size_t i : cand)
                if (work[i][col].degree() < work[best][col].degree()) best = i;
            bool reduced_any = false;
            for (size_t i : cand) {
                if (i == best) continue;
                Poly q = work[i][col] / work[best][col];
                sub_scaled(work[i], work[best], q);
                reduced_any = true;
            }
            if (!reduced_any) {
                pivots.push_back(work[best]);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
        }
    }

    // Full reduction above the diagonal, then monic normalization.
    for (unsigned i = 0; i < ell_; ++i) {
        for (unsigned j = i + 1; j < ell_; ++j) {
            Poly q = pivots[i][j] / pivots[j][j];
            if (!q.is_zero()) sub_scaled(pivots[i], pivots[j], q);
        }
    }
    for (unsigned i = 0; i < ell_; ++i) {
        std::uint64_t lead = pivots[i][i].lead();
        if (lead != base_->one().value()) {
            std::uint64_t inv = base_->inv(lead);
            for (auto& p : pivots[i]) p = p.scaled(inv);
        }
    }

    // invariant checks
    for (unsigned i = 0; i < ell_; ++i) {
        for (unsigned j = 0; j < i; ++j)
            if (!pivots[i][j].is_zero()) throw std::logic_error("groebner: not upper triangular");
        if (!(mod % pivots[i][i]).is_zero())
            throw std::logic_error("groebner: diagonal does not divide x^m - 1");
        for (unsigned j = i + 1; j < ell_; ++j)
            if (pivots[i][j].degree() >= pivots[j][j].degree())
                throw std::logic_error("groebner: entry not reduced");
    }

    groebner_ = GroebnerMatrix{std::move(pivots)};
    return *groebner_;
}

unsigned QCCode::dimension() const {
    const auto& G = groebner();
    unsigned total = m_ * ell_;
    for (unsigned j = 0; j < ell_; ++j) total -= static_cast<unsigned>(G.at(j, j).degree());
    return total;
}

const LinearCode& QCCode::expand() const {
    if (expanded_) return *expanded_;
    Mat rows;
    Poly xp = Poly::x(base_);
    for (const auto& g : gens_) {
        std::vector<Poly> cur = g;
        for (unsigned i = 0; i < m_; ++i) {
            Mat arr = to_array(cur, m_);
            Vec flat;
            flat.reserve(m_ * ell_);
            for (const auto& r : arr) flat.insert(flat.end(), r.begin(), r.end());
            rows.push_back(std::move(flat));
            cur = mul_codeword(cur, xp);
        }
    }
    expanded_ = LinearCode(base_, m_ * ell_, std::move(rows));
    return *expanded_;
}

unsigned QCCode::true_index() const {
    const LinearCode& C = expand();
    for (unsigned cand = 1; cand <= ell_; ++cand) {
        if (ell_ % cand != 0) continue;
        bool ok = true;
        for (const auto& row : C.basis()) {
            if (!C.contains(shifted(row, cand))) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return ell_;  // construction invariant guarantees this is reached at ell
}

}  // namespace qc
