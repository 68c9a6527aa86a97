#pragma once
// Free graded modules, their degreewise monomial bases, and homogeneous
// maps between them. Maps are stored column-sparse: one sorted list of
// (target generator, entry) pairs per source generator. Every entry of a
// map is homogeneous of degree (source twist − target twist).

#include "homcx/poly.hpp"
#include "homcx/sparse.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace homcx {

// Twists are generator degrees: FreeModule{{1,1}} is R(-1)^2.
struct FreeModule {
    std::vector<std::int32_t> twists;

    FreeModule() = default;
    explicit FreeModule(std::vector<std::int32_t> t) : twists(std::move(t)) {}

    std::int32_t rank() const { return std::int32_t(twists.size()); }
    std::int32_t min_twist() const {
        return twists.empty() ? std::numeric_limits<std::int32_t>::max()
                              : *std::min_element(twists.begin(), twists.end());
    }
    std::int32_t max_twist() const {
        return twists.empty() ? std::numeric_limits<std::int32_t>::min()
                              : *std::max_element(twists.begin(), twists.end());
    }

    FreeModule shifted(std::int32_t delta) const {
        FreeModule out = *this;
        for (auto& t : out.twists) t += delta;
        return out;
    }

    bool operator==(const FreeModule&) const = default;
};

// Basis of the degree-d piece of a free module: pairs (generator, standard
// monomial of degree d - twist), indexed generator-major.
struct FreePiece {
    std::int32_t degree = 0;
    std::int32_t dim = 0;
    std::vector<std::int32_t> offset;    // per generator, start index
    std::vector<std::int32_t> block_dim; // per generator, monomial count

    static FreePiece build(const GradedRing& ring, const FreeModule& fm, std::int32_t d) {
        FreePiece p;
        p.degree = d;
        p.offset.resize(fm.rank());
        p.block_dim.resize(fm.rank());
        std::int32_t acc = 0;
        for (std::int32_t g = 0; g < fm.rank(); ++g) {
            p.offset[g] = acc;
            p.block_dim[g] = ring.dim_in_degree(d - fm.twists[g]);
            acc += p.block_dim[g];
        }
        p.dim = acc;
        return p;
    }

    std::int32_t index(std::int32_t gen, std::int32_t mon) const { return offset[gen] + mon; }

    std::pair<std::int32_t, std::int32_t> decompose(std::int32_t idx) const {
        auto it = std::upper_bound(offset.begin(), offset.end(), idx);
        std::int32_t gen = std::int32_t(it - offset.begin()) - 1;
        return {gen, idx - offset[gen]};
    }
};

template <CoefficientField F>
struct GradedMap {
    using Column = std::vector<std::pair<std::int32_t, Poly<F>>>; // sorted by target row

    FreeModule source;
    FreeModule target;
    std::vector<Column> cols;

    GradedMap() = default;
    GradedMap(FreeModule src, FreeModule tgt)
        : source(std::move(src)), target(std::move(tgt)), cols(source.rank()) {}

    void set_entry(std::int32_t row, std::int32_t col, Poly<F> p) {
        if (p.is_zero()) return;
        if (p.degree() != source.twists.at(col) - target.twists.at(row))
            throw std::invalid_argument("GradedMap: entry degree violates homogeneity");
        auto& c = cols.at(col);
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::int32_t r) { return e.first < r; });
        if (it != c.end() && it->first == row) it->second = std::move(p);
        else c.insert(it, {row, std::move(p)});
    }

    const Poly<F>* entry(std::int32_t row, std::int32_t col) const {
        const auto& c = cols.at(col);
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::int32_t r) { return e.first < r; });
        return it != c.end() && it->first == row ? &it->second : nullptr;
    }

    bool is_zero_map() const {
        for (const auto& c : cols)
            if (!c.empty()) return false;
        return true;
    }

    // no unit entries <=> every entry lies in the maximal ideal
    bool entries_in_maxideal(const F& f) const {
        for (const auto& c : cols)
            for (const auto& [r, p] : c)
                if (p.is_unit_constant(f)) return false;
        return true;
    }

    GradedMap shifted(std::int32_t delta) const {
        GradedMap out = *this;
        out.source = source.shifted(delta);
        out.target = target.shifted(delta);
        return out;
    }
};

// The k-linear matrix of a graded map in one internal degree, with rows and
// columns indexed by the free pieces of target and source.
template <CoefficientField F>
SparseMatrix<F> matrix_in_degree(const F& f, const GradedRing& ring, const GradedMap<F>& map,
                                 std::int32_t d, const FreePiece& src_piece,
                                 const FreePiece& tgt_piece) {
    SparseMatrix<F> m(tgt_piece.dim, src_piece.dim);
    for (std::int32_t g = 0; g < map.source.rank(); ++g) {
        if (src_piece.block_dim[g] == 0 || map.cols[g].empty()) continue;
        const auto& mons = ring.standard_basis_in_degree(d - map.source.twists[g]);
        for (std::int32_t mi = 0; mi < src_piece.block_dim[g]; ++mi) {
            SparseVec<F> colvec;
            for (const auto& [row, p] : map.cols[g]) {
                Poly<F> prod = poly_times_monomial(f, ring, p, mons[mi]);
                for (const auto& [mon, c] : prod.terms) {
                    std::int32_t idx = ring.index_of(mon);
                    colvec.push(tgt_piece.index(row, idx), c);
                }
            }
            std::sort(colvec.ent.begin(), colvec.ent.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // merge duplicates (distinct rows can hit the same target index only
            // across different generators, which offsets keep apart, but terms
            // of one product are distinct monomials; still, be safe)
            SparseVec<F> merged;
            for (auto& [i, c] : colvec.ent) {
                if (!merged.ent.empty() && merged.ent.back().first == i) {
                    auto s = f.add(merged.ent.back().second, c);
                    if (f.is_zero(s)) merged.ent.pop_back();
                    else merged.ent.back().second = std::move(s);
                } else {
                    merged.push(i, std::move(c));
                }
            }
            m.set_column(std::move(merged), src_piece.index(g, mi));
        }
    }
    return m;
}

template <CoefficientField F>
SparseMatrix<F> matrix_in_degree(const F& f, const GradedRing& ring, const GradedMap<F>& map,
                                 std::int32_t d) {
    return matrix_in_degree(f, ring, map, d, FreePiece::build(ring, map.source, d),
                            FreePiece::build(ring, map.target, d));
}

// Composition a ∘ b for b: F -> G, a: G -> H.
template <CoefficientField F>
GradedMap<F> compose(const F& f, const GradedRing& ring, const GradedMap<F>& a, const GradedMap<F>& b) {
    if (!(a.source == b.target)) throw std::invalid_argument("compose: shape mismatch");
    GradedMap<F> out(b.source, a.target);
    for (std::int32_t j = 0; j < b.source.rank(); ++j) {
        std::map<std::int32_t, Poly<F>> acc;
        for (const auto& [mid, q] : b.cols[j])
            for (const auto& [row, p] : a.cols[mid]) {
                auto prod = poly_mul(f, ring, p, q);
                if (prod.is_zero()) continue;
                auto it = acc.find(row);
                if (it == acc.end()) acc.emplace(row, std::move(prod));
                else it->second = poly_add(f, it->second, prod);
            }
        for (auto& [row, p] : acc)
            if (!p.is_zero()) out.cols[j].emplace_back(row, std::move(p));
    }
    return out;
}

} // namespace homcx
