#include "qc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qc {

unsigned hamming_weight(const Vec& v) {
    unsigned w = 0;
    for (auto x : v) w += (x != 0);
    return w;
}

unsigned rref_in_place(const FieldPtr& F, Mat& rows) {
    if (rows.empty()) return 0;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::uint64_t inv = F->inv(rows[r][col]);
        for (auto& x : rows[r]) x = F->mul(x, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint64_t c = rows[i][col];
            for (size_t j = 0; j < n; ++j)
                rows[i][j] = F->sub(rows[i][j], F->mul(c, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<unsigned>(r);
}

Mat null_space(const FieldPtr& F, const Mat& rows_in, unsigned n) {
    Mat rows = rows_in;
    for (const auto& row : rows)
        if (row.size() != n) throw std::invalid_argument("row length mismatch in null_space");
    rref_in_place(F, rows);
    std::vector<int> pivot_of_col(n, -1);
    for (size_t r = 0; r < rows.size(); ++r) {
        size_t lead = 0;
        while (lead < n && rows[r][lead] == 0) ++lead;
        if (lead < n) pivot_of_col[lead] = static_cast<int>(r);
    }
    Mat basis;
    for (unsigned free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        Vec v(n, 0);
        v[free_col] = F->one().value();
        for (unsigned col = 0; col < n; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = F->neg(rows[static_cast<size_t>(pr)][free_col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearCode::LinearCode(FieldPtr field, unsigned n, Mat generators)
    : field_(std::move(field)), n_(n), gens_(std::move(generators)) {
    for (const auto& row : gens_) {
        if (row.size() != n_) throw std::invalid_argument("generator row length mismatch");
        for (auto x : row)
            if (x >= field_->order()) throw std::invalid_argument("entry out of field range");
    }
    rref_ = gens_;
    rref_in_place(field_, rref_);
}

LinearCode LinearCode::zero(FieldPtr field, unsigned n) { return LinearCode(std::move(field), n, {}); }

LinearCode LinearCode::full(FieldPtr field, unsigned n) {
    Mat rows(n, Vec(n, 0));
    for (unsigned i = 0; i < n; ++i) rows[i][i] = field->one().value();
    return LinearCode(std::move(field), n, std::move(rows));
}

bool LinearCode::contains(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    Vec w = v;
    // reduce against the echelon basis
    for (const auto& row : rref_) {
        size_t lead = 0;
        while (lead < n_ && row[lead] == 0) ++lead;
        if (lead < n_ && w[lead] != 0) {
            std::uint64_t c = w[lead];  // row is normalized, pivot = 1
            for (size_t j = lead; j < n_; ++j) w[j] = field_->sub(w[j], field_->mul(c, row[j]));
        }
    }
    return hamming_weight(w) == 0;
}

bool LinearCode::operator==(const LinearCode& o) const {
    if (!field_->same(*o.field_) || n_ != o.n_) return false;
    return rref_ == o.rref_;  // RREF is a canonical form
}

LinearCode LinearCode::dual(DualMode mode) const {
    Mat rows = rref_;
    if (mode == DualMode::Hermitian) {
        if (field_->degree() % 2 != 0)
            throw std::invalid_argument("Hermitian dual requires a square field order");
        std::uint64_t s = 1;
        for (unsigned i = 0; i < field_->degree() / 2; ++i) s *= field_->p();
        for (auto& row : rows)
            for (auto& x : row) x = field_->pow(x, static_cast<std::int64_t>(s));
    }
    return LinearCode(field_, n_, null_space(field_, rows, n_));
}

LinearCode LinearCode::sum(const LinearCode& o) const {
    if (!field_->same(*o.field_) || n_ != o.n_)
        throw std::invalid_argument("codes over different fields or lengths");
    Mat rows = rref_;
    rows.insert(rows.end(), o.rref_.begin(), o.rref_.end());
    return LinearCode(field_, n_, std::move(rows));
}

LinearCode LinearCode::intersect(const LinearCode& o) const {
    return dual().sum(o.dual()).dual();
}

LinearCode LinearCode::hull(DualMode mode) const { return intersect(dual(mode)); }

ExtNat LinearCode::min_distance_exact(std::uint64_t budget) const {
    if (is_zero()) return ExtNat::infinity();
    const unsigned k = dim();
    const std::uint64_t q = field_->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (count > budget / q) throw BudgetError("minimum distance enumeration exceeds budget");
        count *= q;
    }
    if (count > budget) throw BudgetError("minimum distance enumeration exceeds budget");

    if (q == 2) {
        // pack rows into machine words, Gray-code enumeration
        const size_t words = (n_ + 63) / 64;
        std::vector<std::vector<std::uint64_t>> packed(k, std::vector<std::uint64_t>(words, 0));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if (rref_[i][j]) packed[i][j / 64] |= (1ull << (j % 64));
        std::vector<std::uint64_t> cur(words, 0);
        std::uint64_t best = n_ + 1;
        const std::uint64_t total = 1ull << k;
        for (std::uint64_t msg = 1; msg < total; ++msg) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(msg));  // Gray-code flip
            for (size_t w = 0; w < words; ++w) cur[w] ^= packed[bit][w];
            std::uint64_t wt = 0;
            for (size_t w = 0; w < words; ++w) wt += static_cast<std::uint64_t>(std::popcount(cur[w]));
            if (wt && wt < best) best = wt;
        }
        return ExtNat::of(best);
    }

    // general q: depth-first message enumeration with incremental row adds
    std::uint64_t best = n_ + 1;
    Vec cur(n_, 0);
    auto rec = [&](auto&& self, unsigned depth, bool nonzero) -> void {
        if (depth == k) {
            if (nonzero) {
                unsigned w = hamming_weight(cur);
                if (w < best) best = w;
            }
            return;
        }
        self(self, depth + 1, nonzero);  // coefficient 0
        Vec saved = cur;
        for (std::uint64_t a = 1; a < q; ++a) {
            for (unsigned j = 0; j < n_; ++j)
                cur[j] = field_->add(saved[j], field_->mul(a, rref_[depth][j]));
            self(self, depth + 1, true);
        }
        cur = saved;
    };
    rec(rec, 0, false);
    return ExtNat::of(best);
}

}  // namespace qc
