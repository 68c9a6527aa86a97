#pragma once
// Finitely presented graded modules M = coker(φ: F1 -> F0) over a graded
// monomial quotient ring. Graded pieces are computed as quotients of free
// pieces by the degreewise span of the relations; representatives are the
// non-pivot coordinates of that span, which makes every basis choice and
// witness deterministic. Standard constructions: residue field, ideals as
// modules, direct sums, twists, tensor products, Nakayama minimization.

#include "homcx/syzygy.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace homcx {

template <CoefficientField F>
class GradedModule {
public:
    GradedModule(F f, GradedRing ring, GradedMap<F> pres, bool minimized = false,
                 std::optional<std::int32_t> valid_to = std::nullopt,
                 CompStatus build_status = CompStatus::exact())
        : f_(std::move(f)), ring_(std::move(ring)), pres_(std::move(pres)), minimized_(minimized),
          valid_to_(valid_to), build_status_(build_status), cache_(std::make_shared<Cache>()) {}

    const F& field() const { return f_; }
    const GradedRing& ring() const { return ring_; }
    const GradedMap<F>& presentation() const { return pres_; }
    const FreeModule& generators() const { return pres_.target; }
    bool minimized() const { return minimized_; }
    std::optional<std::int32_t> valid_to() const { return valid_to_; }
    const CompStatus& build_status() const { return build_status_; }

    bool is_zero_presentation() const { return pres_.target.rank() == 0; }

    std::int32_t min_degree() const {
        return pres_.target.rank() == 0 ? 0 : pres_.target.min_twist();
    }

    // last degree that can carry a nonzero piece; Artinian rings only
    std::int32_t top_degree() const {
        if (!ring_.is_artinian()) throw std::logic_error("top_degree: ring is not Artinian");
        if (pres_.target.rank() == 0) return min_degree() - 1;
        return pres_.target.max_twist() + ring_.top_degree() - 1;
    }

    struct Piece {
        FreePiece free;                 // piece of F0
        SubspaceReducer<F> relations;   // span of the relations in this degree
        std::vector<std::int32_t> reps; // F0 indices representing the quotient basis
        std::vector<std::int32_t> rep_pos; // F0 index -> quotient coordinate, -1 on pivots
        std::int32_t dim = 0;
    };

    const Piece& piece_data(std::int32_t d) const {
        check_window(d);
        std::scoped_lock lock(cache_->mutex);
        auto it = cache_->pieces.find(d);
        if (it != cache_->pieces.end()) return it->second;
        Piece p{FreePiece::build(ring_, pres_.target, d), SubspaceReducer<F>(f_), {}, {}, 0};
        if (p.free.dim > 0 && pres_.source.rank() > 0) {
            FreePiece src = FreePiece::build(ring_, pres_.source, d);
            SparseMatrix<F> img = matrix_in_degree(f_, ring_, pres_, d, src, p.free);
            for (std::int32_t j = 0; j < img.cols(); ++j) p.relations.insert(img.column(j));
        }
        p.rep_pos.assign(p.free.dim, -1);
        for (std::int32_t i = 0; i < p.free.dim; ++i) {
            if (!p.relations.has_pivot(i)) {
                p.rep_pos[i] = std::int32_t(p.reps.size());
                p.reps.push_back(i);
            }
        }
        p.dim = std::int32_t(p.reps.size());
        return cache_->pieces.emplace(d, std::move(p)).first->second;
    }

    std::int32_t piece_dim(std::int32_t d) const {
        if (pres_.target.rank() == 0) return 0;
        if (d < min_degree()) return 0;
        return piece_data(d).dim;
    }

    // human-readable labels (generator, monomial) of the quotient basis
    std::vector<std::pair<std::int32_t, Monomial>> piece_labels(std::int32_t d) const {
        const Piece& p = piece_data(d);
        std::vector<std::pair<std::int32_t, Monomial>> out;
        for (std::int32_t idx : p.reps) {
            auto [gen, mon] = p.free.decompose(idx);
            out.emplace_back(gen, ring_.standard_basis_in_degree(d - pres_.target.twists[gen])[mon]);
        }
        return out;
    }

    // canonical quotient coordinates of a vector given over the full F0 piece
    SparseVec<F> to_quotient(std::int32_t d, const SparseVec<F>& full) const {
        const Piece& p = piece_data(d);
        SparseVec<F> reduced = p.relations.reduce_full(full);
        SparseVec<F> out;
        out.ent.reserve(reduced.ent.size());
        for (const auto& [i, c] : reduced.ent) out.push(p.rep_pos[i], c);
        return out;
    }

    SparseVec<F> rep_to_full(std::int32_t d, const SparseVec<F>& quot) const {
        const Piece& p = piece_data(d);
        SparseVec<F> out;
        out.ent.reserve(quot.ent.size());
        for (const auto& [i, c] : quot.ent) out.push(p.reps.at(i), c);
        return out;
    }

    // matrix of multiplication by x_var between quotient pieces d -> d+1
    const SparseMatrix<F>& mult_matrix(std::size_t var, std::int32_t d) const {
        piece_data(d);
        piece_data(d + 1);
        std::scoped_lock lock(cache_->mutex);
        auto key = std::make_pair(std::int32_t(var), d);
        auto it = cache_->mult.find(key);
        if (it != cache_->mult.end()) return it->second;
        const Piece& from = cache_->pieces.at(d);
        const Piece& to = cache_->pieces.at(d + 1);
        SparseMatrix<F> m(to.dim, from.dim);
        for (std::int32_t pos = 0; pos < from.dim; ++pos) {
            SparseVec<F> full = SparseVec<F>::unit(f_, from.reps[pos]);
            SparseVec<F> shifted = detail::shift_piece_vector(ring_, pres_.target, from.free, to.free, var, full);
            SparseVec<F> reduced = to.relations.reduce_full(shifted);
            SparseVec<F> col;
            for (const auto& [i, c] : reduced.ent) col.push(to.rep_pos[i], c);
            m.set_column(std::move(col), pos);
        }
        return cache_->mult.emplace(key, std::move(m)).first->second;
    }

    // multiply a quotient-coordinate vector by x_var
    SparseVec<F> mult(std::size_t var, std::int32_t d, const SparseVec<F>& quot) const {
        return mult_matrix(var, d).apply(f_, quot);
    }

    // minimal number of generators by graded Nakayama over the pieces;
    // Artinian rings only (needs the full support)
    std::int32_t mu_nakayama() const {
        std::int32_t lo = min_degree(), hi = top_degree();
        std::int32_t mu = 0;
        for (std::int32_t d = lo; d <= hi; ++d) {
            SubspaceReducer<F> image(f_);
            if (d > lo) {
                std::int32_t prev = piece_dim(d - 1);
                for (std::size_t var = 0; var < ring_.nvars(); ++var)
                    for (std::int32_t pos = 0; pos < prev; ++pos)
                        image.insert(mult_matrix(var, d - 1).column(pos));
            }
            mu += piece_dim(d) - image.rank();
        }
        return mu;
    }

    // Nakayama minimization: removes unit entries of the presentation by
    // row/column operations until none remain. The result presents an
    // isomorphic module with rank(F0) = mu(M).
    GradedModule minimize() const {
        if (minimized_) return *this;
        std::vector<std::int32_t> tgt = pres_.target.twists;
        std::vector<std::int32_t> src = pres_.source.twists;
        // dense working grid of polynomials
        std::vector<std::vector<Poly<F>>> e(tgt.size(), std::vector<Poly<F>>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& [row, p] : pres_.cols[j]) e[row][j] = p;

        std::vector<bool> row_dead(tgt.size(), false), col_dead(src.size(), false);
        for (;;) {
            std::int32_t pi = -1, pj = -1;
            for (std::size_t i = 0; i < tgt.size() && pi < 0; ++i) {
                if (row_dead[i]) continue;
                for (std::size_t j = 0; j < src.size(); ++j) {
                    if (col_dead[j]) continue;
                    if (e[i][j].is_unit_constant(f_)) { pi = std::int32_t(i); pj = std::int32_t(j); break; }
                }
            }
            if (pi < 0) break;
            auto c = e[pi][pj].terms.front().second;
            for (std::size_t k = 0; k < src.size(); ++k) {
                if (col_dead[k] || std::int32_t(k) == pj || e[pi][k].is_zero()) continue;
                Poly<F> mult = poly_scale(f_, e[pi][k], f_.neg(f_.inv(c)));
                for (std::size_t i = 0; i < tgt.size(); ++i) {
                    if (row_dead[i]) continue;
                    if (!e[i][pj].is_zero())
                        e[i][k] = poly_add(f_, e[i][k], poly_mul(f_, ring_, e[i][pj], mult));
                }
            }
            row_dead[pi] = true;
            col_dead[pj] = true;
        }

        std::vector<std::int32_t> new_tgt, new_src;
        std::vector<std::int32_t> row_map(tgt.size(), -1);
        for (std::size_t i = 0; i < tgt.size(); ++i)
            if (!row_dead[i]) { row_map[i] = std::int32_t(new_tgt.size()); new_tgt.push_back(tgt[i]); }
        std::vector<std::size_t> keep_cols;
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (col_dead[j]) continue;
            bool nonzero = false;
            for (std::size_t i = 0; i < tgt.size(); ++i)
                if (!row_dead[i] && !e[i][j].is_zero()) { nonzero = true; break; }
            if (nonzero) { new_src.push_back(src[j]); keep_cols.push_back(j); }
        }
        GradedMap<F> out(FreeModule{new_src}, FreeModule{new_tgt});
        for (std::size_t jj = 0; jj < keep_cols.size(); ++jj) {
            std::size_t j = keep_cols[jj];
            for (std::size_t i = 0; i < tgt.size(); ++i)
                if (!row_dead[i] && !e[i][j].is_zero())
                    out.cols[jj].emplace_back(row_map[i], e[i][j]);
        }
        return GradedModule(f_, ring_, std::move(out), true, valid_to_, build_status_);
    }

    std::int32_t mu() const { return minimize().generators().rank(); }

    GradedModule shifted(std::int32_t delta) const {
        return GradedModule(f_, ring_, pres_.shifted(delta), minimized_,
                            valid_to_ ? std::optional<std::int32_t>(*valid_to_ + delta) : std::nullopt,
                            build_status_);
    }

    // ---- standard constructions -------------------------------------

    static GradedModule zero(F f, GradedRing ring) {
        return GradedModule(std::move(f), std::move(ring), GradedMap<F>(FreeModule{}, FreeModule{}), true);
    }

    static GradedModule free_module(F f, GradedRing ring, std::vector<std::int32_t> twists) {
        return GradedModule(std::move(f), std::move(ring),
                            GradedMap<F>(FreeModule{}, FreeModule{std::move(twists)}), true);
    }

    static GradedModule residue_field(F f, GradedRing ring) {
        auto m = ring.maximal_ideal();
        FreeModule f0{{0}};
        FreeModule f1;
        GradedMap<F> pres;
        f1.twists.assign(m.gens().size(), 1);
        pres = GradedMap<F>(f1, f0);
        for (std::size_t j = 0; j < m.gens().size(); ++j)
            pres.cols[j].emplace_back(0, Poly<F>::monomial(f, ring, m.gens()[j], f.one()));
        return GradedModule(std::move(f), std::move(ring), std::move(pres), true);
    }

    // presentation of an ideal I != R as a module: generators are the
    // minimal monomial generators, relations are their syzygies up to the
    // window (complete, hence EXACT, over Artinian rings)
    static GradedModule from_ideal(F f, GradedRing ring, const MonomialIdeal& ideal,
                                   std::int32_t window, std::int32_t guard = 3) {
        MonomialIdeal I = ring.reduce_ideal(ideal);
        if (I.is_unit()) throw std::invalid_argument("from_ideal: ideal is the whole ring");
        if (I.is_zero()) return zero(std::move(f), std::move(ring));
        std::vector<Monomial> gens = I.gens();
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            auto da = a.degree(), db = b.degree();
            return da != db ? da < db : a < b;
        });
        FreeModule f0;
        for (const auto& g : gens) f0.twists.push_back(g.degree());
        GradedMap<F> eval(f0, FreeModule{{0}});
        for (std::size_t j = 0; j < gens.size(); ++j)
            eval.cols[j].emplace_back(0, Poly<F>::monomial(f, ring, gens[j], f.one()));
        auto syz = syzygy_step(f, ring, eval, window, guard);
        std::optional<std::int32_t> valid;
        if (!syz.status.is_exact()) valid = window;
        return GradedModule(std::move(f), std::move(ring), std::move(syz.next), true, valid, syz.status);
    }

    GradedModule direct_sum(const GradedModule& other) const {
        if (!ring_.same_ring(other.ring_)) throw std::invalid_argument("direct_sum: ring mismatch");
        FreeModule f0, f1;
        f0.twists = pres_.target.twists;
        f0.twists.insert(f0.twists.end(), other.pres_.target.twists.begin(), other.pres_.target.twists.end());
        f1.twists = pres_.source.twists;
        f1.twists.insert(f1.twists.end(), other.pres_.source.twists.begin(), other.pres_.source.twists.end());
        GradedMap<F> pres(f1, f0);
        std::int32_t row_off = pres_.target.rank();
        std::int32_t col_off = pres_.source.rank();
        for (std::int32_t j = 0; j < pres_.source.rank(); ++j) pres.cols[j] = pres_.cols[j];
        for (std::int32_t j = 0; j < other.pres_.source.rank(); ++j) {
            for (const auto& [row, p] : other.pres_.cols[j])
                pres.cols[col_off + j].emplace_back(row + row_off, p);
        }
        std::optional<std::int32_t> valid;
        if (valid_to_ || other.valid_to_)
            valid = std::min(valid_to_.value_or(std::numeric_limits<std::int32_t>::max()),
                             other.valid_to_.value_or(std::numeric_limits<std::int32_t>::max()));
        return GradedModule(f_, ring_, std::move(pres), minimized_ && other.minimized_, valid,
                            build_status_.merge(other.build_status_));
    }

    GradedModule tensor_product(const GradedModule& other) const {
        if (!ring_.same_ring(other.ring_)) throw std::invalid_argument("tensor_product: ring mismatch");
        const auto& a0 = pres_.target.twists;
        const auto& b0 = other.pres_.target.twists;
        FreeModule f0;
        for (auto ta : a0)
            for (auto tb : b0) f0.twists.push_back(ta + tb);
        auto pair_index = [&](std::int32_t i, std::int32_t j) {
            return i * std::int32_t(b0.size()) + j;
        };
        FreeModule f1;
        for (auto ts : pres_.source.twists)
            for (auto tb : b0) f1.twists.push_back(ts + tb);
        for (auto ta : a0)
            for (auto ts : other.pres_.source.twists) f1.twists.push_back(ta + ts);
        GradedMap<F> pres(f1, f0);
        std::int32_t col = 0;
        for (std::int32_t j = 0; j < pres_.source.rank(); ++j)
            for (std::int32_t h = 0; h < std::int32_t(b0.size()); ++h, ++col)
                for (const auto& [row, p] : pres_.cols[j])
                    pres.cols[col].emplace_back(pair_index(row, h), p);
        for (std::int32_t g = 0; g < std::int32_t(a0.size()); ++g)
            for (std::int32_t j = 0; j < other.pres_.source.rank(); ++j, ++col)
                for (const auto& [row, p] : other.pres_.cols[j])
                    pres.cols[col].emplace_back(pair_index(g, row), p);
        for (auto& c : pres.cols)
            std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::optional<std::int32_t> valid;
        if (valid_to_ || other.valid_to_)
            valid = std::min(valid_to_.value_or(std::numeric_limits<std::int32_t>::max()),
                             other.valid_to_.value_or(std::numeric_limits<std::int32_t>::max()));
        return GradedModule(f_, ring_, std::move(pres), false, valid,
                            build_status_.merge(other.build_status_));
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::int32_t, Piece> pieces;
        std::map<std::pair<std::int32_t, std::int32_t>, SparseMatrix<F>> mult;
    };

    void check_window(std::int32_t d) const {
        if (valid_to_ && d > *valid_to_)
            throw WindowError("module piece requested in degree " + std::to_string(d) +
                              " beyond certified window " + std::to_string(*valid_to_));
    }

    F f_;
    GradedRing ring_;
    GradedMap<F> pres_;
    bool minimized_ = false;
    std::optional<std::int32_t> valid_to_;
    CompStatus build_status_;
    std::shared_ptr<Cache> cache_;
};

} // namespace homcx
