#pragma once
// Sparse exact linear algebra over a coefficient field: rank, right kernel
// bases, column reduction with recorded transformations, and incremental
// echelon subspaces. Pivoting is deterministic (columns left to right, the
// leading entry of a column is its lowest row index) so every downstream
// basis choice is reproducible.

#include "homcx/field.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace homcx {

struct LinalgConfig {
    double dense_threshold = 0.25;      // switch to dense elimination above this density
    std::size_t dense_max_cells = 8u << 20; // never densify beyond this many cells
};

inline const LinalgConfig& default_linalg_config() {
    static const LinalgConfig cfg{};
    return cfg;
}

// Sorted-by-index sparse vector. Zero coefficients are never stored.
template <CoefficientField F>
struct SparseVec {
    using Elem = typename F::Elem;
    std::vector<std::pair<std::int32_t, Elem>> ent;

    bool empty() const { return ent.empty(); }
    std::int32_t lead() const { return ent.front().first; }
    const Elem& lead_coeff() const { return ent.front().second; }
    std::size_t nnz() const { return ent.size(); }

    void push(std::int32_t i, Elem c) { ent.emplace_back(i, std::move(c)); }

    static SparseVec unit(const F& f, std::int32_t i) {
        SparseVec v;
        v.push(i, f.one());
        return v;
    }
};

// dst += c * src, merging sorted supports.
template <CoefficientField F>
void axpy(const F& f, SparseVec<F>& dst, const typename F::Elem& c, const SparseVec<F>& src) {
    if (f.is_zero(c) || src.empty()) return;
    SparseVec<F> out;
    out.ent.reserve(dst.ent.size() + src.ent.size());
    std::size_t i = 0, j = 0;
    while (i < dst.ent.size() && j < src.ent.size()) {
        if (dst.ent[i].first < src.ent[j].first) {
            out.ent.push_back(dst.ent[i++]);
        } else if (dst.ent[i].first > src.ent[j].first) {
            out.push(src.ent[j].first, f.mul(c, src.ent[j].second));
            ++j;
        } else {
            auto s = f.add(dst.ent[i].second, f.mul(c, src.ent[j].second));
            if (!f.is_zero(s)) out.push(dst.ent[i].first, std::move(s));
            ++i; ++j;
        }
    }
    for (; i < dst.ent.size(); ++i) out.ent.push_back(dst.ent[i]);
    for (; j < src.ent.size(); ++j) out.push(src.ent[j].first, f.mul(c, src.ent[j].second));
    dst = std::move(out);
}

template <CoefficientField F>
void scale_in_place(const F& f, SparseVec<F>& v, const typename F::Elem& c) {
    if (f.is_zero(c)) { v.ent.clear(); return; }
    for (auto& [i, x] : v.ent) x = f.mul(x, c);
}

template <CoefficientField F>
typename F::Elem coeff_at(const F& f, const SparseVec<F>& v, std::int32_t i) {
    auto it = std::lower_bound(v.ent.begin(), v.ent.end(), i,
                               [](const auto& e, std::int32_t k) { return e.first < k; });
    if (it != v.ent.end() && it->first == i) return it->second;
    return f.zero();
}

// Column-major sparse matrix. Conceptually a map (row, col) -> nonzero
// scalar; stored as one sorted sparse column per column index.
template <CoefficientField F>
class SparseMatrix {
public:
    using Elem = typename F::Elem;

    SparseMatrix() = default;
    SparseMatrix(std::int32_t rows, std::int32_t cols) : rows_(rows), cols_(cols), col_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
    }

    std::int32_t rows() const { return rows_; }
    std::int32_t cols() const { return cols_; }

    const SparseVec<F>& column(std::int32_t j) const { return col_.at(j); }
    SparseVec<F>& column_mut(std::int32_t j) { return col_.at(j); }

    void set(const F& f, std::int32_t i, std::int32_t j, Elem c) {
        check_index(i, j);
        auto& v = col_[j].ent;
        auto it = std::lower_bound(v.begin(), v.end(), i,
                                   [](const auto& e, std::int32_t k) { return e.first < k; });
        if (it != v.end() && it->first == i) {
            if (f.is_zero(c)) v.erase(it);
            else it->second = std::move(c);
        } else if (!f.is_zero(c)) {
            v.insert(it, {i, std::move(c)});
        }
    }

    Elem get(const F& f, std::int32_t i, std::int32_t j) const {
        check_index(i, j);
        return coeff_at(f, col_[j], i);
    }

    // Sets a whole column from an already sorted sparse vector.
    void set_column(SparseVec<F> v, std::int32_t j) {
        if (j < 0 || j >= cols_) throw std::out_of_range("SparseMatrix: column out of range");
        for (auto& [i, c] : v.ent)
            if (i < 0 || i >= rows_) throw std::out_of_range("SparseMatrix: row out of range");
        col_[j] = std::move(v);
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : col_) n += c.ent.size();
        return n;
    }

    double density() const {
        std::size_t cells = std::size_t(rows_) * std::size_t(cols_);
        return cells == 0 ? 0.0 : double(nnz()) / double(cells);
    }

    SparseVec<F> apply(const F& f, const SparseVec<F>& x) const {
        SparseVec<F> y;
        for (const auto& [j, c] : x.ent) axpy(f, y, c, col_[j]);
        return y;
    }

    SparseMatrix transposed(const F&) const {
        SparseMatrix t(cols_, rows_);
        for (std::int32_t j = 0; j < cols_; ++j)
            for (const auto& [i, c] : col_[j].ent)
                t.col_[i].push(j, c);
        for (auto& c : t.col_)
            std::sort(c.ent.begin(), c.ent.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return t;
    }

    static SparseMatrix identity(const F& f, std::int32_t n) {
        SparseMatrix m(n, n);
        for (std::int32_t i = 0; i < n; ++i) m.col_[i] = SparseVec<F>::unit(f, i);
        return m;
    }

    SparseMatrix multiply(const F& f, const SparseMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch in multiply");
        SparseMatrix out(rows_, rhs.cols_);
        for (std::int32_t j = 0; j < rhs.cols_; ++j) out.col_[j] = apply(f, rhs.col_[j]);
        return out;
    }

    bool equals(const F& f, const SparseMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
        for (std::int32_t j = 0; j < cols_; ++j) {
            const auto& a = col_[j].ent;
            const auto& b = rhs.col_[j].ent;
            if (a.size() != b.size()) return false;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k].first != b[k].first || !f.is_zero(f.sub(a[k].second, b[k].second))) return false;
        }
        return true;
    }

private:
    void check_index(std::int32_t i, std::int32_t j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("SparseMatrix: index out of range");
    }

    std::int32_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec<F>> col_;
};

// Incremental echelon basis of a subspace. Pivot columns are normalized so
// the leading (lowest-index) coefficient is 1; later pivot columns never
// touch earlier pivot rows above their own lead, which keeps full reduction
// terminating and canonical.
template <CoefficientField F>
class SubspaceReducer {
public:
    explicit SubspaceReducer(const F& f) : f_(&f) {}

    std::int32_t rank() const { return std::int32_t(pivot_.size()); }

    bool has_pivot(std::int32_t row) const { return pivot_.count(row) != 0; }

    const std::map<std::int32_t, SparseVec<F>>& pivots() const { return pivot_; }

    // Eliminates leading entries only; the residual's lead has no pivot.
    SparseVec<F> reduce(SparseVec<F> v) const {
        while (!v.empty()) {
            auto it = pivot_.find(v.lead());
            if (it == pivot_.end()) break;
            axpy(*f_, v, f_->neg(v.lead_coeff()), it->second);
        }
        return v;
    }

    // Eliminates every entry sitting on a pivot row; the canonical form of
    // the class of v modulo the subspace.
    SparseVec<F> reduce_full(SparseVec<F> v) const {
        SparseVec<F> out;
        while (!v.empty()) {
            std::size_t k = 0;
            while (k < v.ent.size() && pivot_.find(v.ent[k].first) == pivot_.end()) ++k;
            out.ent.insert(out.ent.end(), v.ent.begin(), v.ent.begin() + std::ptrdiff_t(k));
            v.ent.erase(v.ent.begin(), v.ent.begin() + std::ptrdiff_t(k));
            if (v.empty()) break;
            axpy(*f_, v, f_->neg(v.lead_coeff()), pivot_.find(v.lead())->second);
        }
        return out;
    }

    // Returns true if v enlarged the subspace.
    bool insert(SparseVec<F> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        scale_in_place(*f_, v, f_->inv(v.lead_coeff()));
        std::int32_t lead = v.lead();
        pivot_.emplace(lead, std::move(v));
        return true;
    }

    bool contains(SparseVec<F> v) const { return reduce(std::move(v)).empty(); }

private:
    const F* f_;
    std::map<std::int32_t, SparseVec<F>> pivot_;
};

// Echelon span with coordinate tracking: expresses vectors as combinations
// of the inserted basis vectors.
template <CoefficientField F>
class SpanSolver {
public:
    explicit SpanSolver(const F& f) : f_(&f) {}

    std::int32_t size() const { return std::int32_t(rows_.size()); }

    void insert_basis_vector(const SparseVec<F>& v) {
        SparseVec<F> r = v;
        SparseVec<F> combo = SparseVec<F>::unit(*f_, size());
        reduce(r, combo);
        if (r.empty()) throw std::logic_error("SpanSolver: basis vectors must be independent");
        auto c = f_->inv(r.lead_coeff());
        scale_in_place(*f_, r, c);
        scale_in_place(*f_, combo, c);
        std::int32_t lead = r.lead();
        rows_.emplace(lead, Entry{std::move(r), std::move(combo)});
    }

    // Coordinates of v in the inserted basis, or nullopt if v is outside.
    std::optional<SparseVec<F>> express(SparseVec<F> v) const {
        SparseVec<F> combo;
        reduce(v, combo);
        if (!v.empty()) return std::nullopt;
        scale_in_place(*f_, combo, f_->neg(f_->one()));
        return combo;
    }

private:
    struct Entry {
        SparseVec<F> vec;
        SparseVec<F> combo;
    };

    void reduce(SparseVec<F>& v, SparseVec<F>& combo) const {
        while (!v.empty()) {
            auto it = rows_.find(v.lead());
            if (it == rows_.end()) break;
            auto c = f_->neg(v.lead_coeff());
            axpy(*f_, v, c, it->second.vec);
            axpy(*f_, combo, c, it->second.combo);
        }
    }

    const F* f_;
    std::map<std::int32_t, Entry> rows_;
};

namespace detail {

// Dense Gaussian elimination used as a fallback when a matrix is too dense
// for the sparse path to pay off. Same pivot rule, same results.
template <CoefficientField F>
struct DenseElim {
    using Elem = typename F::Elem;
    const F& f;
    std::int32_t rows, cols;
    std::vector<std::vector<Elem>> a; // column-major

    DenseElim(const F& f_, const SparseMatrix<F>& m)
        : f(f_), rows(m.rows()), cols(m.cols()), a(m.cols(), std::vector<Elem>(m.rows(), f_.zero())) {
        for (std::int32_t j = 0; j < cols; ++j)
            for (const auto& [i, c] : m.column(j).ent) a[j][i] = c;
    }

    // Column echelon with kernel tracking, mirroring the sparse code path.
    void run(std::vector<SparseVec<F>>* kernel, std::int32_t* rank_out) {
        std::vector<std::int32_t> pivot_row_of_col;
        std::map<std::int32_t, std::int32_t> pivot; // row -> column storing pivot
        std::vector<std::vector<Elem>> combo(cols);
        for (std::int32_t j = 0; j < cols; ++j) {
            std::vector<Elem> cmb(cols, f.zero());
            cmb[j] = f.one();
            auto& v = a[j];
            std::int32_t lead = first_nonzero(v);
            while (lead >= 0) {
                auto it = pivot.find(lead);
                if (it == pivot.end()) break;
                Elem c = f.neg(v[lead]);
                const auto& pv = a[it->second];
                const auto& pc = combo[it->second];
                for (std::int32_t i = lead; i < rows; ++i)
                    if (!f.is_zero(pv[i])) v[i] = f.add(v[i], f.mul(c, pv[i]));
                for (std::int32_t i = 0; i < cols; ++i)
                    if (!f.is_zero(pc[i])) cmb[i] = f.add(cmb[i], f.mul(c, pc[i]));
                lead = first_nonzero(v);
            }
            if (lead < 0) {
                if (kernel) {
                    SparseVec<F> k;
                    for (std::int32_t i = 0; i < cols; ++i)
                        if (!f.is_zero(cmb[i])) k.push(i, cmb[i]);
                    kernel->push_back(std::move(k));
                }
            } else {
                Elem inv = f.inv(v[lead]);
                for (auto& x : v) if (!f.is_zero(x)) x = f.mul(x, inv);
                for (auto& x : cmb) if (!f.is_zero(x)) x = f.mul(x, inv);
                pivot.emplace(lead, j);
                combo[j] = std::move(cmb);
            }
        }
        if (rank_out) *rank_out = std::int32_t(pivot.size());
    }

    std::int32_t first_nonzero(const std::vector<Elem>& v) const {
        for (std::int32_t i = 0; i < rows; ++i)
            if (!f.is_zero(v[i])) return i;
        return -1;
    }
};

template <CoefficientField F>
bool use_dense(const SparseMatrix<F>& m, const LinalgConfig& cfg) {
    std::size_t cells = std::size_t(m.rows()) * std::size_t(m.cols());
    return cells > 0 && cells <= cfg.dense_max_cells && m.density() > cfg.dense_threshold;
}

template <CoefficientField F>
void sparse_echelon(const F& f, const SparseMatrix<F>& m, std::vector<SparseVec<F>>* kernel,
                    std::int32_t* rank_out) {
    std::map<std::int32_t, std::pair<SparseVec<F>, SparseVec<F>>> pivot; // row -> (col, combo)
    std::int32_t rank = 0;
    for (std::int32_t j = 0; j < m.cols(); ++j) {
        SparseVec<F> v = m.column(j);
        SparseVec<F> combo = SparseVec<F>::unit(f, j);
        while (!v.empty()) {
            auto it = pivot.find(v.lead());
            if (it == pivot.end()) break;
            auto c = f.neg(v.lead_coeff());
            axpy(f, v, c, it->second.first);
            axpy(f, combo, c, it->second.second);
        }
        if (v.empty()) {
            if (kernel) kernel->push_back(std::move(combo));
        } else {
            auto c = f.inv(v.lead_coeff());
            scale_in_place(f, v, c);
            scale_in_place(f, combo, c);
            std::int32_t lead = v.lead();
            pivot.emplace(lead, std::make_pair(std::move(v), std::move(combo)));
            ++rank;
        }
    }
    if (rank_out) *rank_out = rank;
}

} // namespace detail

template <CoefficientField F>
std::int32_t rank(const F& f, const SparseMatrix<F>& m,
                  const LinalgConfig& cfg = default_linalg_config()) {
    std::int32_t r = 0;
    if (detail::use_dense(m, cfg)) {
        detail::DenseElim<F> d(f, m);
        d.run(static_cast<std::vector<SparseVec<F>>*>(nullptr), &r);
    } else {
        detail::sparse_echelon<F>(f, m, nullptr, &r);
    }
    return r;
}

// Basis of the right kernel {v : m v = 0}. Always satisfies
// rank + kernel.size() == cols.
template <CoefficientField F>
std::vector<SparseVec<F>> kernel_basis(const F& f, const SparseMatrix<F>& m,
                                       const LinalgConfig& cfg = default_linalg_config()) {
    std::vector<SparseVec<F>> kernel;
    std::int32_t r = 0;
    if (detail::use_dense(m, cfg)) {
        detail::DenseElim<F> d(f, m);
        d.run(&kernel, &r);
    } else {
        detail::sparse_echelon(f, m, &kernel, &r);
    }
    return kernel;
}

template <CoefficientField F>
struct ColumnReduction {
    SparseMatrix<F> reduced;
    SparseMatrix<F> transform; // invertible, reduced == m * transform
};

// Clears the pivot rows outside the pivot columns by column operations.
// Each requested pivot column must contain a unit (nonzero) entry; the
// pivot row is the lowest row with a nonzero entry unless given explicitly.
template <CoefficientField F>
ColumnReduction<F> column_reduce_against(const F& f, const SparseMatrix<F>& m,
                                         const std::vector<std::int32_t>& pivot_cols) {
    ColumnReduction<F> out{m, SparseMatrix<F>::identity(f, m.cols())};
    for (std::int32_t pc : pivot_cols) {
        if (pc < 0 || pc >= m.cols()) throw std::out_of_range("column_reduce_against: bad pivot column");
        const auto& col = out.reduced.column(pc);
        if (col.empty()) throw std::invalid_argument("column_reduce_against: pivot column has no unit entry");
        std::int32_t prow = col.lead();
        auto pval = col.lead_coeff();
        for (std::int32_t j = 0; j < out.reduced.cols(); ++j) {
            if (j == pc) continue;
            auto c = coeff_at(f, out.reduced.column(j), prow);
            if (f.is_zero(c)) continue;
            auto mult = f.neg(f.div(c, pval));
            axpy(f, out.reduced.column_mut(j), mult, out.reduced.column(pc));
            axpy(f, out.transform.column_mut(j), mult, out.transform.column(pc));
        }
    }
    return out;
}

// Gauss-Jordan by column operations (swap, scale, axpy). An invertible
// matrix reduces to the identity and the transform is then its inverse.
template <CoefficientField F>
ColumnReduction<F> full_column_reduce(const F& f, const SparseMatrix<F>& m) {
    ColumnReduction<F> out{m, SparseMatrix<F>::identity(f, m.cols())};
    auto& red = out.reduced;
    auto& t = out.transform;
    std::int32_t next = 0;
    for (std::int32_t row = 0; row < m.rows() && next < m.cols(); ++row) {
        std::int32_t found = -1;
        for (std::int32_t j = next; j < m.cols(); ++j) {
            if (!f.is_zero(coeff_at(f, red.column(j), row))) { found = j; break; }
        }
        if (found < 0) continue;
        if (found != next) {
            std::swap(red.column_mut(found), red.column_mut(next));
            std::swap(t.column_mut(found), t.column_mut(next));
        }
        auto inv = f.inv(coeff_at(f, red.column(next), row));
        scale_in_place(f, red.column_mut(next), inv);
        scale_in_place(f, t.column_mut(next), inv);
        for (std::int32_t j = 0; j < m.cols(); ++j) {
            if (j == next) continue;
            auto c = coeff_at(f, red.column(j), row);
            if (f.is_zero(c)) continue;
            axpy(f, red.column_mut(j), f.neg(c), red.column(next));
            axpy(f, t.column_mut(j), f.neg(c), t.column(next));
        }
        ++next;
    }
    return out;
}

} // namespace homcx
