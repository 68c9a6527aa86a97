#pragma once
// Exact coefficient fields: prime fields F_p and arbitrary-precision
// rationals. Everything downstream is templated on one of these; no
// floating point enters any computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Runtime description of a coefficient field, used by parsers, reports and
// cache keys. Arithmetic itself goes through PrimeField / RationalField.
struct FieldSpec {
    enum class Kind { prime, rationals };
    Kind kind = Kind::prime;
    std::int64_t p = 101;

    static FieldSpec fp(std::int64_t p) { return FieldSpec{Kind::prime, p}; }
    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    bool operator==(const FieldSpec&) const = default;

    std::string describe() const {
        return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
    }
};

class PrimeField {
public:
    using Elem = std::int64_t;

    explicit PrimeField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
        if (p > (std::int64_t(1) << 31)) throw std::invalid_argument("PrimeField: modulus too large");
    }

    std::int64_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec::fp(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t n) const {
        Elem r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem from_rational(const Rational& q) const {
        BigInt num = boost::multiprecision::numerator(q) % p_;
        BigInt den = boost::multiprecision::denominator(q) % p_;
        Elem n = from_int(num.convert_to<std::int64_t>());
        Elem d = from_int(den.convert_to<std::int64_t>());
        if (d == 0) throw std::domain_error("rational has zero denominator mod p");
        return mul(n, inv(d));
    }

    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= p_ ? r - p_ : r; }
    Elem sub(Elem a, Elem b) const { Elem r = a - b; return r < 0 ? r + p_ : r; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        Elem t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            Elem q = r / nr;
            Elem tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::int64_t p_;
};

class RationalField {
public:
    using Elem = Rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t n) const { return Elem(n); }
    Elem from_rational(const Rational& q) const { return q; }

    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    std::string to_string(const Elem& a) const { return a.str(); }
};

template <class F>
concept CoefficientField = requires(const F f, typename F::Elem a) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.spec() } -> std::convertible_to<FieldSpec>;
};

// Runs fn with the concrete field named by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField{spec.p});
}

} // namespace homcx
