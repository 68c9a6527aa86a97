#pragma once
// Monomial ideals as antichains of minimal generators, with exact
// sum/product/power/intersection/colon arithmetic via lcm/gcd. Generators
// are kept minimal (no generator divides another) and sorted
// lexicographically, so equal ideals have identical representations.

#include "homcx/monomial.hpp"

#include <algorithm>
#include <vector>

namespace homcx {

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
        for (const auto& g : gens)
            if (g.nvars() != nvars) throw std::invalid_argument("MonomialIdeal: variable count mismatch");
        gens_ = minimalize(std::move(gens));
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const {
        return !gens_.empty() && gens_.front().is_one();
    }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool contains(const MonomialIdeal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    // equality by mutual divisibility of generators
    bool equals(const MonomialIdeal& other) const {
        return contains(other) && other.contains(*this);
    }

    MonomialIdeal sum(const MonomialIdeal& other) const {
        require_same(other);
        std::vector<Monomial> g = gens_;
        g.insert(g.end(), other.gens_.begin(), other.gens_.end());
        return MonomialIdeal(nvars_, std::move(g));
    }

    MonomialIdeal product(const MonomialIdeal& other) const {
        require_same(other);
        std::vector<Monomial> g;
        g.reserve(gens_.size() * other.gens_.size());
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) g.push_back(a.times(b));
        return MonomialIdeal(nvars_, std::move(g));
    }

    MonomialIdeal power(std::int32_t n) const {
        if (n < 0) throw std::invalid_argument("MonomialIdeal::power: negative exponent");
        MonomialIdeal r(nvars_, {Monomial::one(nvars_)});
        MonomialIdeal base = *this;
        while (n > 0) {
            if (n & 1) r = r.product(base);
            n >>= 1;
            if (n) base = base.product(base);
        }
        return r;
    }

    MonomialIdeal intersect(const MonomialIdeal& other) const {
        require_same(other);
        std::vector<Monomial> g;
        g.reserve(gens_.size() * other.gens_.size());
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) g.push_back(a.lcm(b));
        return MonomialIdeal(nvars_, std::move(g));
    }

    // (I : t) for a monomial t
    MonomialIdeal colon(const Monomial& t) const {
        std::vector<Monomial> g;
        g.reserve(gens_.size());
        for (const auto& a : gens_) g.push_back(a.colon(t));
        return MonomialIdeal(nvars_, std::move(g));
    }

    // (I : K) = intersection of (I : g) over the generators of K
    MonomialIdeal colon(const MonomialIdeal& other) const {
        require_same(other);
        if (other.is_zero()) return MonomialIdeal(nvars_, {Monomial::one(nvars_)});
        MonomialIdeal r = colon(other.gens_.front());
        for (std::size_t i = 1; i < other.gens_.size(); ++i)
            r = r.intersect(colon(other.gens_[i]));
        return r;
    }

    static std::vector<Monomial> minimalize(std::vector<Monomial> g) {
        std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
            auto da = a.degree(), db = b.degree();
            return da != db ? da < db : a < b;
        });
        g.erase(std::unique(g.begin(), g.end()), g.end());
        std::vector<Monomial> keep;
        for (const auto& m : g) {
            bool divisible = false;
            for (const auto& k : keep)
                if (k.divides(m)) { divisible = true; break; }
            if (!divisible) keep.push_back(m);
        }
        std::sort(keep.begin(), keep.end());
        return keep;
    }

private:
    void require_same(const MonomialIdeal& other) const {
        if (nvars_ != other.nvars_) throw std::invalid_argument("MonomialIdeal: variable count mismatch");
    }

    std::size_t nvars_ = 0;
    std::vector<Monomial> gens_;
};

} // namespace homcx
