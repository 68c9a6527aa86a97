#pragma once
// Submodules M of an ambient module L, carried as generator lists, and the
// degreewise subspace families the Burch condition compares:
// M itself, (M :_L m), and m-multiples of either. All vectors live in the
// canonical quotient coordinates of L's pieces.

#include "homcx/module.hpp"

namespace homcx {

// homogeneous element of a module, in full F0-piece coordinates
template <CoefficientField F>
struct ModElement {
    std::int32_t degree = 0;
    SparseVec<F> coords;
};

template <CoefficientField F>
struct SubmodulePair {
    GradedModule<F> ambient;
    std::vector<ModElement<F>> gens;

    SubmodulePair(GradedModule<F> amb, std::vector<ModElement<F>> g)
        : ambient(std::move(amb)), gens(std::move(g)) {
        for (const auto& e : gens) {
            const auto& piece = ambient.piece_data(e.degree);
            for (const auto& [i, c] : e.coords.ent)
                if (i < 0 || i >= piece.free.dim)
                    throw std::invalid_argument("SubmodulePair: generator coordinate out of range");
        }
    }

    std::int32_t max_gen_degree() const {
        std::int32_t d = ambient.min_degree();
        for (const auto& e : gens) d = std::max(d, e.degree);
        return d;
    }

    // monomial generators inside a cyclic ambient generated in degree 0
    static SubmodulePair from_ideal(const GradedModule<F>& ambient, const MonomialIdeal& I) {
        if (ambient.generators().rank() != 1 || ambient.generators().twists[0] != 0)
            throw std::invalid_argument("SubmodulePair::from_ideal: ambient must be cyclic, generated in degree 0");
        const GradedRing& ring = ambient.ring();
        MonomialIdeal red = ring.reduce_ideal(I);
        std::vector<ModElement<F>> gens;
        for (const auto& g : red.gens()) {
            std::int32_t idx = ring.index_of(g);
            if (idx < 0) continue;
            ModElement<F> e;
            e.degree = g.degree();
            e.coords = SparseVec<F>::unit(ambient.field(), idx);
            gens.push_back(std::move(e));
        }
        return SubmodulePair(ambient, std::move(gens));
    }
};

// Degreewise family of subspaces of L's pieces, stored as echelon reducers
// in quotient coordinates.
template <CoefficientField F>
class GradedFamily {
public:
    GradedFamily(const F& f, std::int32_t lo, std::int32_t hi) : f_(&f), lo_(lo), hi_(hi) {}

    std::int32_t lo() const { return lo_; }
    std::int32_t hi() const { return hi_; }

    SubspaceReducer<F>& at(std::int32_t d) {
        auto it = red_.find(d);
        if (it == red_.end()) it = red_.emplace(d, SubspaceReducer<F>(*f_)).first;
        return it->second;
    }
    const SubspaceReducer<F>* find(std::int32_t d) const {
        auto it = red_.find(d);
        return it == red_.end() ? nullptr : &it->second;
    }

    std::int32_t dim(std::int32_t d) const {
        auto it = red_.find(d);
        return it == red_.end() ? 0 : it->second.rank();
    }

    // normalized echelon basis, ordered by pivot coordinate
    std::vector<SparseVec<F>> basis(std::int32_t d) const {
        std::vector<SparseVec<F>> out;
        auto it = red_.find(d);
        if (it == red_.end()) return out;
        for (const auto& [lead, vec] : it->second.pivots()) out.push_back(vec);
        return out;
    }

    bool contains(std::int32_t d, const SparseVec<F>& v) const {
        auto it = red_.find(d);
        if (it == red_.end()) return v.empty();
        return it->second.contains(v);
    }

private:
    const F* f_;
    std::int32_t lo_, hi_;
    std::map<std::int32_t, SubspaceReducer<F>> red_;
};

// The family M_d = sum over i of x_i M_{d-1} + (generators of degree d).
template <CoefficientField F>
GradedFamily<F> submodule_family(const SubmodulePair<F>& pair, std::int32_t hi) {
    const auto& L = pair.ambient;
    const F& f = L.field();
    std::int32_t lo = L.min_degree();
    GradedFamily<F> fam(f, lo, hi);
    for (std::int32_t d = lo; d <= hi; ++d) {
        auto& red = fam.at(d);
        if (d > lo)
            for (const auto& v : fam.basis(d - 1))
                for (std::size_t var = 0; var < L.ring().nvars(); ++var)
                    red.insert(L.mult(var, d - 1, v));
        for (const auto& g : pair.gens)
            if (g.degree == d) red.insert(L.to_quotient(d, g.coords));
    }
    return fam;
}

// The family (m * family)_d = sum over i of x_i family_{d-1}.
template <CoefficientField F>
GradedFamily<F> m_multiple_family(const GradedModule<F>& L, const GradedFamily<F>& family,
                                  std::int32_t hi) {
    const F& f = L.field();
    std::int32_t lo = L.min_degree();
    GradedFamily<F> out(f, lo, hi);
    for (std::int32_t d = lo + 1; d <= hi; ++d) {
        auto& red = out.at(d);
        for (const auto& v : family.basis(d - 1))
            for (std::size_t var = 0; var < L.ring().nvars(); ++var)
                red.insert(L.mult(var, d - 1, v));
    }
    return out;
}

// (M :_L m)_d = { v in L_d : x_i v in M_{d+1} for every i }, for degrees
// d <= hi. Requires the submodule family up to hi + 1.
template <CoefficientField F>
GradedFamily<F> colon_family(const SubmodulePair<F>& pair, const GradedFamily<F>& mfam,
                             std::int32_t hi) {
    const auto& L = pair.ambient;
    const F& f = L.field();
    const GradedRing& ring = L.ring();
    if (mfam.hi() < hi + 1) throw WindowError("colon_family: submodule family window too small");
    std::int32_t lo = L.min_degree();
    GradedFamily<F> out(f, lo, hi);
    std::int32_t nv = std::int32_t(ring.nvars());
    for (std::int32_t d = lo; d <= hi; ++d) {
        std::int32_t dim_d = L.piece_dim(d);
        if (dim_d == 0) continue;
        std::int32_t dim_up = L.piece_dim(d + 1);
        const SubspaceReducer<F>* mred = mfam.find(d + 1);
        SparseMatrix<F> sys(nv * dim_up, dim_d);
        for (std::int32_t pos = 0; pos < dim_d; ++pos) {
            SparseVec<F> col;
            for (std::int32_t var = 0; var < nv; ++var) {
                SparseVec<F> w = L.mult_matrix(std::size_t(var), d).column(pos);
                if (mred) w = mred->reduce_full(w);
                for (const auto& [i, c] : w.ent) col.push(var * dim_up + i, c);
            }
            sys.set_column(std::move(col), pos);
        }
        auto& red = out.at(d);
        for (auto& v : kernel_basis(f, sys)) red.insert(std::move(v));
    }
    return out;
}

} // namespace homcx
