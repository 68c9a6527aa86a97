#pragma once
// One syzygy step: minimal homogeneous generators of the kernel of a
// graded map between free modules, computed degreewise. Generators in
// degree d are a complement of (m·ker)_d inside ker_d (graded Nakayama),
// so the resulting map into the source is automatically minimal whenever
// the input map was.

#include "homcx/gmap.hpp"
#include "homcx/status.hpp"

#include <vector>

namespace homcx {

template <CoefficientField F>
struct SyzygyStep {
    GradedMap<F> next;  // F_new -> source of the input map
    CompStatus status;
};

namespace detail {

// image of a source-piece vector under multiplication by x_var, one degree up
template <CoefficientField F>
SparseVec<F> shift_piece_vector(const GradedRing& ring, const FreeModule& fm,
                                const FreePiece& from, const FreePiece& to, std::size_t var,
                                const SparseVec<F>& v) {
    SparseVec<F> out;
    out.ent.reserve(v.ent.size());
    for (const auto& [idx, c] : v.ent) {
        auto [gen, mon] = from.decompose(idx);
        const auto& table = ring.var_shift(from.degree - fm.twists[gen], var);
        std::int32_t shifted = table[mon];
        if (shifted >= 0) out.push(to.index(gen, shifted), c);
    }
    std::sort(out.ent.begin(), out.ent.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace detail

// Kernel of `map` with minimal generators, inspecting internal degrees up
// to `window` (Artinian rings are enumerated completely instead and yield
// EXACT status). `guard` controls the STABILIZED verdict.
template <CoefficientField F>
SyzygyStep<F> syzygy_step(const F& f, const GradedRing& ring, const GradedMap<F>& map,
                          std::int32_t window, std::int32_t guard,
                          const LinalgConfig& cfg = default_linalg_config()) {
    SyzygyStep<F> out;
    const FreeModule& src = map.source;
    if (src.rank() == 0) {
        out.next = GradedMap<F>(FreeModule{}, src);
        out.status = CompStatus::exact();
        return out;
    }

    bool artinian = ring.is_artinian();
    std::int32_t lo = src.min_twist();
    std::int32_t hi = artinian ? src.max_twist() + ring.top_degree() - 1 : window;

    struct Gen {
        std::int32_t degree;
        SparseVec<F> vec; // over the source piece at `degree`
    };
    std::vector<Gen> gens;
    std::vector<SparseVec<F>> prev_kernel; // basis of ker in the previous degree
    FreePiece prev_src_piece;

    for (std::int32_t d = lo; d <= hi; ++d) {
        FreePiece src_piece = FreePiece::build(ring, src, d);
        if (src_piece.dim == 0) {
            prev_kernel.clear();
            prev_src_piece = src_piece;
            continue;
        }
        FreePiece tgt_piece = FreePiece::build(ring, map.target, d);
        SparseMatrix<F> mat = matrix_in_degree(f, ring, map, d, src_piece, tgt_piece);
        std::vector<SparseVec<F>> kernel = kernel_basis(f, mat, cfg);

        SubspaceReducer<F> m_kernel(f);
        for (const auto& v : prev_kernel)
            for (std::size_t var = 0; var < ring.nvars(); ++var)
                m_kernel.insert(detail::shift_piece_vector(ring, src, prev_src_piece, src_piece, var, v));

        for (const auto& v : kernel)
            if (m_kernel.insert(v)) gens.push_back(Gen{d, v});

        prev_kernel = std::move(kernel);
        prev_src_piece = src_piece;
    }

    // assemble the new map; generators arrive sorted by (degree, kernel order)
    FreeModule fnew;
    for (const auto& g : gens) fnew.twists.push_back(g.degree);
    out.next = GradedMap<F>(fnew, src);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto& g = gens[j];
        std::map<std::int32_t, Poly<F>> rows;
        FreePiece piece = FreePiece::build(ring, src, g.degree);
        for (const auto& [idx, c] : g.vec.ent) {
            auto [gen, mon] = piece.decompose(idx);
            const auto& mons = ring.standard_basis_in_degree(g.degree - src.twists[gen]);
            auto p = Poly<F>::monomial(f, ring, mons[mon], c);
            auto it = rows.find(gen);
            if (it == rows.end()) rows.emplace(gen, std::move(p));
            else it->second = poly_add(f, it->second, p);
        }
        for (auto& [row, p] : rows)
            if (!p.is_zero()) out.next.cols[j].emplace_back(row, std::move(p));
    }

    if (artinian) {
        out.status = CompStatus::exact();
    } else {
        std::int32_t last = gens.empty() ? -1 : gens.back().degree;
        if (last <= hi - guard) out.status = CompStatus::stabilized(hi, last, guard);
        else out.status = CompStatus::windowed(hi, last);
    }
    return out;
}

} // namespace homcx
