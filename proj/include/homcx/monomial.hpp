#pragma once
// Monomials in a fixed number of variables, with the divisibility
// arithmetic (lcm, gcd, colon) monomial ideals are built from.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcx {

struct Monomial {
    std::vector<std::int32_t> exp;

    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> e) : exp(std::move(e)) {
        for (auto x : exp)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::int32_t>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, std::int32_t power = 1) {
        std::vector<std::int32_t> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return exp.size(); }
    std::int32_t degree() const { return std::accumulate(exp.begin(), exp.end(), std::int32_t(0)); }
    bool is_one() const { return degree() == 0; }

    bool operator==(const Monomial&) const = default;
    // plain lexicographic order on exponent vectors
    bool operator<(const Monomial& o) const { return exp < o.exp; }

    Monomial times(const Monomial& o) const {
        require_same_nvars(o);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        require_same_nvars(o);
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    Monomial lcm(const Monomial& o) const {
        require_same_nvars(o);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = std::max(r.exp[i], o.exp[i]);
        return r;
    }

    Monomial gcd(const Monomial& o) const {
        require_same_nvars(o);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = std::min(r.exp[i], o.exp[i]);
        return r;
    }

    // the generator of (this) : (o), equal to lcm(this, o) / o
    Monomial colon(const Monomial& o) const {
        Monomial l = lcm(o);
        for (std::size_t i = 0; i < exp.size(); ++i) l.exp[i] -= o.exp[i];
        return l;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (names.size() != exp.size()) throw std::invalid_argument("Monomial::str: name count mismatch");
        std::string s;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void require_same_nvars(const Monomial& o) const {
        if (exp.size() != o.exp.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    }
};

} // namespace homcx
