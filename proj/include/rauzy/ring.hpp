#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroInverse : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Parameters of P(x) = x^3 - a x^2 - b x - 1 with a >= 3 and -a+1 <= b <= -2.
struct Params {
    int a = 3;
    int b = -2;

    static bool valid(int a, int b) noexcept { return a >= 3 && b <= -2 && b >= 1 - a; }
    static Params make(int a, int b);

    // floor((a-1)/(a+b+1)); a+b+1 >= 2 always holds for valid parameters.
    int K() const noexcept { return (a - 1) / (a + b + 1); }

    friend bool operator==(const Params&, const Params&) = default;
};

// n + p*alpha + q*alpha^2, always kept reduced.
template <class C>
struct CubicElem {
    C n{0};
    C p{0};
    C q{0};

    CubicElem() = default;
    CubicElem(C n_, C p_, C q_) : n(std::move(n_)), p(std::move(p_)), q(std::move(q_)) {}

    static CubicElem constant(C c) { return CubicElem(std::move(c), C(0), C(0)); }
    static CubicElem alpha() { return CubicElem(C(0), C(1), C(0)); }

    bool is_zero() const { return n == 0 && p == 0 && q == 0; }

    friend bool operator==(const CubicElem& x, const CubicElem& y) {
        return x.n == y.n && x.p == y.p && x.q == y.q;
    }
    // Export order: q first, then p, then n.
    friend bool operator<(const CubicElem& x, const CubicElem& y) {
        if (x.q != y.q) return x.q < y.q;
        if (x.p != y.p) return x.p < y.p;
        return x.n < y.n;
    }

    friend CubicElem operator+(const CubicElem& x, const CubicElem& y) {
        return {x.n + y.n, x.p + y.p, x.q + y.q};
    }
    friend CubicElem operator-(const CubicElem& x, const CubicElem& y) {
        return {x.n - y.n, x.p - y.p, x.q - y.q};
    }
    friend CubicElem operator-(const CubicElem& x) { return {-x.n, -x.p, -x.q}; }
    friend CubicElem operator*(const C& s, const CubicElem& x) { return {s * x.n, s * x.p, s * x.q}; }
};

using RingElem = CubicElem<Integer>;
using FieldElem = CubicElem<Rational>;

// Reduces sum c_i alpha^i (any degree) using alpha^3 = a alpha^2 + b alpha + 1.
template <class C>
CubicElem<C> reduce(std::span<const C> coeffs, const Params& params) {
    std::vector<C> c(coeffs.begin(), coeffs.end());
    if (c.size() < 3) c.resize(3, C(0));
    for (std::size_t k = c.size() - 1; k >= 3; --k) {
        if (c[k] == 0) continue;
        const C top = c[k];
        c[k] = 0;
        c[k - 1] += params.a * top;
        c[k - 2] += params.b * top;
        c[k - 3] += top;
    }
    return {c[0], c[1], c[2]};
}

RingElem reduce(std::initializer_list<long long> coeffs, const Params& params);

template <class C>
CubicElem<C> mul(const CubicElem<C>& x, const CubicElem<C>& y, const Params& params) {
    const C prod[5] = {
        x.n * y.n,
        x.n * y.p + x.p * y.n,
        x.n * y.q + x.p * y.p + x.q * y.n,
        x.p * y.q + x.q * y.p,
        x.q * y.q,
    };
    return reduce<C>(std::span<const C>(prod, 5), params);
}

template <class C>
CubicElem<C> times_alpha(const CubicElem<C>& x, const Params& params) {
    return {x.q, x.n + params.b * x.q, x.p + params.a * x.q};
}

// Exact because alpha^{-1} = alpha^2 - a alpha - b.
template <class C>
CubicElem<C> div_by_alpha(const CubicElem<C>& x, const Params& params) {
    return {-params.b * x.n + x.p, -params.a * x.n + x.q, x.n};
}

// alpha^k for any integer k.
RingElem alpha_pow(int k, const Params& params);

template <class C>
CubicElem<C> pow(CubicElem<C> x, unsigned e, const Params& params) {
    CubicElem<C> r = CubicElem<C>::constant(C(1));
    while (e) {
        if (e & 1u) r = mul(r, x, params);
        x = mul(x, x, params);
        e >>= 1u;
    }
    return r;
}

FieldElem to_field(const RingElem& x);
bool is_integral(const FieldElem& x);
RingElem to_ring(const FieldElem& x);  // throws std::domain_error if a coefficient is not integral

FieldElem field_inverse(const FieldElem& x, const Params& params);
FieldElem field_div(const FieldElem& x, const FieldElem& y, const Params& params);

std::string to_string(const RingElem& x);
std::string to_string(const FieldElem& x);

}  // namespace rauzy
