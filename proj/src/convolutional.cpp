#include "qc/convolutional.hpp"

#include <stdexcept>
#include <utility>

#include "qc/bounds.hpp"

namespace qc {

unsigned poly_matrix_rank(std::vector<std::vector<Poly>> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    unsigned rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            // Cross-multiply to clear the column without leaving GF(q)[x].
            Poly piv = a[r][c], cur = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * piv - a[r][j] * cur;
        }
        ++r;
        ++rank;
    }
    return rank;
}

ConvolutionalCode::ConvolutionalCode(FieldPtr field, std::vector<std::vector<Poly>> encoder)
    : field_(std::move(field)), encoder_(std::move(encoder)) {
    if (encoder_.empty() || encoder_[0].empty())
        throw std::invalid_argument("encoder matrix must be nonempty");
    for (const auto& row : encoder_) {
        if (row.size() != encoder_[0].size())
            throw std::invalid_argument("encoder matrix must be rectangular");
        for (const auto& g : row)
            if (g.field() != field_)
                throw std::invalid_argument("encoder entry over the wrong field");
    }
    if (poly_matrix_rank(encoder_) != encoder_.size())
        throw std::invalid_argument("encoder matrix is not of full row rank over GF(q)(x)");
}

QCCode project(const ConvolutionalCode& c, unsigned m) {
    if (m < 2) throw std::invalid_argument("projection modulus must exceed 1");
    Poly xm1 = Poly::xm_minus_1(c.field(), m);
    std::vector<std::vector<Poly>> gens;
    for (const auto& row : c.encoder()) {
        std::vector<Poly> reduced;
        for (const auto& g : row) reduced.push_back(g % xm1);
        gens.push_back(std::move(reduced));
    }
    return QCCode(c.field(), m, c.ell(), std::move(gens));
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& a, const std::vector<size_t>& cols,
              size_t row, std::uint64_t used_mask, const FieldPtr& f) {
    if (row == a.size()) return Poly::one(f);
    Poly det = Poly::zero(f);
    bool negate = false;
    for (size_t t = 0; t < cols.size(); ++t) {
        if (used_mask & (1ull << t)) continue;
        const Poly& entry = a[row][cols[t]];
        if (!entry.is_zero()) {
            Poly sub = poly_det(a, cols, row + 1, used_mask | (1ull << t), f);
            det = negate ? det - entry * sub : det + entry * sub;
        }
        negate = !negate;
    }
    return det;
}

}  // namespace

Poly encoder_minor_gcd(const ConvolutionalCode& c) {
    unsigned k = c.k(), ell = c.ell();
    Poly g = Poly::zero(c.field());
    std::vector<size_t> cols(k);
    // Iterate over all k-subsets of the ell columns in lexicographic order.
    for (unsigned i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
        Poly det = poly_det(c.encoder(), cols, 0, 0, c.field());
        if (!det.is_zero()) g = g.is_zero() ? det.monic() : gcd(g, det);
        unsigned i = k;
        while (i > 0 && cols[i - 1] == ell - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (unsigned j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

DfreeBound dfree_lower_bound(const ConvolutionalCode& c, unsigned m, std::uint64_t budget) {
    QCCode proj = project(c, m);
    try {
        ExtNat d = proj.expand().min_distance_exact(budget);
        return {d, true, "exact distance of the mod x^" + std::to_string(m) + "-1 projection"};
    } catch (const BudgetError&) {
        // Fall back to the certified structural bounds on the projection.
        BoundReport rep = best_bounds(proj, false, budget);
        ExtNat best = ExtNat::of(1);
        std::string name = "trivial";
        for (const auto& [bname, entry] : rep.bounds) {
            if (entry.value > best) {
                best = entry.value;
                name = bname;
            }
        }
        return {best, false,
                "enumeration over budget; best structural bound (" + name + ") on the projection"};
    }
}

std::uint64_t dfree_search(const ConvolutionalCode& c, unsigned degree_cap,
                           std::uint64_t budget) {
    const FieldPtr& f = c.field();
    unsigned k = c.k(), ell = c.ell();
    unsigned digits = k * (degree_cap + 1);
    // Message space size q^digits, overflow-checked against the budget.
    std::uint64_t total = 1;
    for (unsigned i = 0; i < digits; ++i) {
        if (total > budget / f->order())
            throw BudgetError("free-distance search space exceeds the enumeration budget");
        total *= f->order();
    }
    if (total > budget)
        throw BudgetError("free-distance search space exceeds the enumeration budget");

    std::vector<std::uint64_t> digit(digits, 0);
    std::uint64_t best = 0;
    bool found = false;
    for (std::uint64_t step = 1; step < total; ++step) {
        // Odometer over message coefficients: digit i is coefficient
        // i % (cap+1) of message polynomial i / (cap+1).
        for (unsigned i = 0; i < digits; ++i) {
            digit[i] = (digit[i] + 1) % f->order();
            if (digit[i] != 0) break;
        }
        std::vector<Poly> u;
        for (unsigned i = 0; i < k; ++i)
            u.emplace_back(f, std::vector<std::uint64_t>(
                                  digit.begin() + i * (degree_cap + 1),
                                  digit.begin() + (i + 1) * (degree_cap + 1)));
        std::uint64_t w = 0;
        for (unsigned j = 0; j < ell; ++j) {
            Poly cj = Poly::zero(f);
            for (unsigned i = 0; i < k; ++i) cj = cj + u[i] * c.encoder()[i][j];
            w += cj.weight();
        }
        if (w > 0 && (!found || w < best)) {
            best = w;
            found = true;
        }
    }
    if (!found)
        throw std::logic_error("full-rank encoder produced no nonzero codeword in the search");
    return best;
}

}  // namespace qc
