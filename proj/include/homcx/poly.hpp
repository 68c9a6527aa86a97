#pragma once
// Homogeneous elements of a graded quotient ring: k-linear combinations of
// standard monomials of one common degree, kept reduced modulo the
// defining ideal (monomials inside it are dropped on contact).

#include "homcx/field.hpp"
#include "homcx/ring.hpp"

#include <algorithm>
#include <vector>

namespace homcx {

template <CoefficientField F>
struct Poly {
    using Elem = typename F::Elem;
    std::vector<std::pair<Monomial, Elem>> terms; // sorted by monomial, no zeros

    bool is_zero() const { return terms.empty(); }
    std::int32_t degree() const { return terms.empty() ? -1 : terms.front().first.degree(); }

    static Poly zero() { return {}; }

    static Poly monomial(const F& f, const GradedRing& ring, Monomial m, Elem c) {
        Poly p;
        if (!f.is_zero(c) && !ring.defining().contains(m)) p.terms.emplace_back(std::move(m), std::move(c));
        return p;
    }

    bool is_unit_constant(const F& f) const {
        return terms.size() == 1 && terms.front().first.is_one() && !f.is_zero(terms.front().second);
    }
};

template <CoefficientField F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].first < b.terms[j].first) out.terms.push_back(a.terms[i++]);
        else if (b.terms[j].first < a.terms[i].first) out.terms.push_back(b.terms[j++]);
        else {
            auto s = f.add(a.terms[i].second, b.terms[j].second);
            if (!f.is_zero(s)) out.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

template <CoefficientField F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
    Poly<F> out;
    if (f.is_zero(c)) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms) out.terms.emplace_back(m, f.mul(x, c));
    return out;
}

template <CoefficientField F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
    Poly<F> out;
    out.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms) out.terms.emplace_back(m, f.neg(x));
    return out;
}

// a * u for a monomial u, reduced modulo the defining ideal.
template <CoefficientField F>
Poly<F> poly_times_monomial(const F& f, const GradedRing& ring, const Poly<F>& a, const Monomial& u) {
    Poly<F> out;
    out.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms) {
        Monomial prod = m.times(u);
        if (!ring.defining().contains(prod)) out.terms.emplace_back(std::move(prod), x);
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

template <CoefficientField F>
Poly<F> poly_mul(const F& f, const GradedRing& ring, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> out;
    for (const auto& [m, x] : b.terms)
        out = poly_add(f, out, poly_scale(f, poly_times_monomial(f, ring, a, m), x));
    return out;
}

template <CoefficientField F>
std::string poly_str(const F& f, const GradedRing& ring, const Poly<F>& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (i) s += " + ";
        const auto& [m, c] = a.terms[i];
        std::string cs = f.to_string(c);
        if (cs != "1" || m.is_one()) {
            s += cs;
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += m.str(ring.varnames());
    }
    return s;
}

} // namespace homcx
