#pragma once
// Standard-graded quotient rings R = k[x_1..x_v]/J with J a monomial
// ideal. The ring object is an immutable handle (cheap to copy) owning
// write-once caches of standard-monomial bases per degree; it stands in
// for the local ring at (x_1..x_v), which is what makes every degreewise
// computation finite-dimensional.

#include "homcx/field.hpp"
#include "homcx/ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace homcx {

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GradedRing {
public:
    GradedRing(FieldSpec field, std::vector<std::string> varnames, MonomialIdeal defining)
        : core_(std::make_shared<Core>()) {
        if (varnames.empty()) throw std::invalid_argument("GradedRing: need at least one variable");
        if (defining.nvars() != varnames.size())
            throw std::invalid_argument("GradedRing: defining ideal variable count mismatch");
        if (field.kind == FieldSpec::Kind::prime && !is_prime(field.p))
            throw std::invalid_argument("GradedRing: field characteristic must be prime");
        core_->field = field;
        core_->names = std::move(varnames);
        core_->defining = std::move(defining);
        if (core_->defining.is_unit()) throw std::invalid_argument("GradedRing: defining ideal is the unit ideal");
    }

    static GradedRing make(FieldSpec field, std::size_t nvars, MonomialIdeal defining) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
        return GradedRing(field, std::move(names), std::move(defining));
    }

    const FieldSpec& field() const { return core_->field; }
    std::size_t nvars() const { return core_->names.size(); }
    const std::vector<std::string>& varnames() const { return core_->names; }
    const MonomialIdeal& defining() const { return core_->defining; }

    bool same_ring(const GradedRing& other) const {
        return core_ == other.core_ ||
               (core_->field == other.core_->field && core_->names == other.core_->names &&
                core_->defining.equals(other.core_->defining));
    }

    // All degree-d monomials outside the defining ideal, sorted lex.
    const std::vector<Monomial>& standard_basis_in_degree(std::int32_t d) const {
        if (d < 0) throw std::invalid_argument("standard_basis_in_degree: negative degree");
        std::scoped_lock lock(core_->mutex);
        auto it = core_->basis.find(d);
        if (it != core_->basis.end()) return it->second;
        std::vector<Monomial> out;
        Monomial m = Monomial::one(nvars());
        enumerate(m, 0, d, out);
        std::sort(out.begin(), out.end());
        return core_->basis.emplace(d, std::move(out)).first->second;
    }

    std::int32_t dim_in_degree(std::int32_t d) const {
        return d < 0 ? 0 : std::int32_t(standard_basis_in_degree(d).size());
    }

    // Position of a standard monomial within its degree's basis, -1 if the
    // monomial lies in the defining ideal.
    std::int32_t index_of(const Monomial& m) const {
        std::int32_t d = m.degree();
        standard_basis_in_degree(d);
        std::scoped_lock lock(core_->mutex);
        const auto& idx = index_map_locked(d);
        auto it = idx.find(m);
        return it == idx.end() ? -1 : it->second;
    }

    // index table for multiplication by x_i: position j in basis(d) maps to
    // var_shift(d,i)[j] in basis(d+1), or -1 when the product dies in J.
    const std::vector<std::int32_t>& var_shift(std::int32_t d, std::size_t var) const {
        const auto& from = standard_basis_in_degree(d);
        standard_basis_in_degree(d + 1);
        std::scoped_lock lock(core_->mutex);
        auto key = std::make_pair(d, std::int32_t(var));
        auto it = core_->shift.find(key);
        if (it != core_->shift.end()) return it->second;
        std::vector<std::int32_t> table(from.size(), -1);
        auto& idx = index_map_locked(d + 1);
        for (std::size_t j = 0; j < from.size(); ++j) {
            Monomial m = from[j];
            m.exp[var] += 1;
            if (core_->defining.contains(m)) continue;
            auto hit = idx.find(m);
            table[j] = hit == idx.end() ? -1 : hit->second;
        }
        return core_->shift.emplace(key, std::move(table)).first->second;
    }

    // Generators of an ideal of R: drops generators inside J, minimalizes.
    MonomialIdeal reduce_ideal(const MonomialIdeal& I) const {
        std::vector<Monomial> keep;
        for (const auto& g : I.gens())
            if (!core_->defining.contains(g)) keep.push_back(g);
        return MonomialIdeal(nvars(), std::move(keep));
    }

    MonomialIdeal maximal_ideal() const {
        std::vector<Monomial> vars;
        for (std::size_t i = 0; i < nvars(); ++i) vars.push_back(Monomial::var(nvars(), i));
        return reduce_ideal(MonomialIdeal(nvars(), std::move(vars)));
    }

    // (I :_R m), computed by lifting to the polynomial ring:
    // ((I + J) :_P (x_1..x_v)) reduced mod J.
    MonomialIdeal ideal_colon_maxideal(const MonomialIdeal& I) const {
        MonomialIdeal lifted = I.sum(core_->defining);
        std::vector<Monomial> vars;
        for (std::size_t i = 0; i < nvars(); ++i) vars.push_back(Monomial::var(nvars(), i));
        MonomialIdeal c = lifted.colon(MonomialIdeal(nvars(), std::move(vars)));
        return reduce_ideal(c);
    }

    MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) const {
        return reduce_ideal(a.sum(b));
    }
    MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) const {
        return reduce_ideal(a.product(b));
    }
    MonomialIdeal ideal_power(const MonomialIdeal& a, std::int32_t n) const {
        return reduce_ideal(a.power(n));
    }
    bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) const {
        // generators of R-ideals avoid J, where divisibility in P and in R agree
        return reduce_ideal(a).equals(reduce_ideal(b));
    }

    // dim_k (R/I)_d for an ideal I of R.
    std::int32_t hilbert_function(const MonomialIdeal& I, std::int32_t d) const {
        if (d < 0) throw std::invalid_argument("hilbert_function: negative degree");
        if (I.is_unit()) return 0;
        std::int32_t count = 0;
        for (const auto& m : standard_basis_in_degree(d))
            if (!I.contains(m)) ++count;
        return count;
    }

    // true iff dim_k(R/I) is finite: every variable has a pure power in I + J.
    bool is_m_primary(const MonomialIdeal& I) const {
        MonomialIdeal lifted = I.sum(core_->defining);
        for (std::size_t i = 0; i < nvars(); ++i) {
            bool found = false;
            for (const auto& g : lifted.gens()) {
                bool pure = true;
                for (std::size_t j = 0; j < nvars(); ++j)
                    if (j != i && g.exp[j] > 0) { pure = false; break; }
                if (pure && (g.exp[i] > 0 || g.is_one())) { found = true; break; }
            }
            if (!found) return false;
        }
        return true;
    }

    bool is_artinian() const {
        std::scoped_lock lock(core_->mutex);
        if (!core_->artinian) core_->artinian = is_m_primary(MonomialIdeal(nvars()));
        return *core_->artinian;
    }

    // First degree with R_d = 0; only defined for Artinian rings. Standard
    // grading makes all higher degrees vanish as well.
    std::int32_t top_degree() const {
        if (!is_artinian()) throw std::logic_error("top_degree: ring is not Artinian");
        {
            std::scoped_lock lock(core_->mutex);
            if (core_->top) return *core_->top;
        }
        std::int32_t d = 1;
        while (dim_in_degree(d) > 0) ++d;
        std::scoped_lock lock(core_->mutex);
        core_->top = d;
        return d;
    }

    std::string describe() const {
        std::string s = core_->field.describe() + "[";
        for (std::size_t i = 0; i < core_->names.size(); ++i) {
            if (i) s += ",";
            s += core_->names[i];
        }
        s += "]";
        if (!core_->defining.is_zero()) {
            s += "/(";
            const auto& g = core_->defining.gens();
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i) s += ",";
                s += g[i].str(core_->names);
            }
            s += ")";
        }
        return s;
    }

private:
    struct Core {
        FieldSpec field;
        std::vector<std::string> names;
        MonomialIdeal defining;
        mutable std::mutex mutex;
        mutable std::map<std::int32_t, std::vector<Monomial>> basis;
        mutable std::map<std::int32_t, std::map<Monomial, std::int32_t>> index;
        mutable std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::int32_t>> shift;
        mutable std::optional<bool> artinian;
        mutable std::optional<std::int32_t> top;
    };

    // requires core_->mutex held and basis(d) already built
    std::map<Monomial, std::int32_t>& index_map_locked(std::int32_t d) const {
        auto& idx = core_->index[d];
        const auto& basis = core_->basis.at(d);
        if (idx.empty() && !basis.empty())
            for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], std::int32_t(i));
        return idx;
    }

    void enumerate(Monomial& m, std::size_t var, std::int32_t remaining, std::vector<Monomial>& out) const {
        if (core_->defining.contains(m)) return;
        if (var + 1 == nvars()) {
            m.exp[var] = remaining;
            if (!core_->defining.contains(m)) out.push_back(m);
            m.exp[var] = 0;
            return;
        }
        for (std::int32_t e = 0; e <= remaining; ++e) {
            m.exp[var] = e;
            enumerate(m, var + 1, remaining - e, out);
        }
        m.exp[var] = 0;
    }

    std::shared_ptr<Core> core_;
};

} // namespace homcx
