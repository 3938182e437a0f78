#include "rauzy/ring.hpp"

#include <array>
#include <sstream>

namespace rauzy {

Params Params::make(int a, int b) {
    if (!valid(a, b)) {
        std::ostringstream os;
        os << "invalid parameters (a,b) = (" << a << "," << b << "): need a >= 3 and -a+1 <= b <= -2";
        throw InvalidParams(os.str());
    }
    return Params{a, b};
}

RingElem reduce(std::initializer_list<long long> coeffs, const Params& params) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return reduce<Integer>(std::span<const Integer>(c), params);
}

RingElem alpha_pow(int k, const Params& params) {
    RingElem r = RingElem::constant(1);
    if (k >= 0) {
        for (int i = 0; i < k; ++i) r = times_alpha(r, params);
    } else {
        for (int i = 0; i < -k; ++i) r = div_by_alpha(r, params);
    }
    return r;
}

FieldElem to_field(const RingElem& x) {
    return {Rational(x.n), Rational(x.p), Rational(x.q)};
}

bool is_integral(const FieldElem& x) {
    using boost::multiprecision::denominator;
    return denominator(x.n) == 1 && denominator(x.p) == 1 && denominator(x.q) == 1;
}

RingElem to_ring(const FieldElem& x) {
    using boost::multiprecision::numerator;
    if (!is_integral(x)) throw std::domain_error("element has non-integral coefficients: " + to_string(x));
    return {numerator(x.n), numerator(x.p), numerator(x.q)};
}

FieldElem field_inverse(const FieldElem& x, const Params& params) {
    if (x.is_zero()) throw ZeroInverse("field_inverse of zero");
    // Columns are x*1, x*alpha, x*alpha^2 in the basis {1, alpha, alpha^2}.
    std::array<FieldElem, 3> cols;
    cols[0] = x;
    cols[1] = times_alpha(cols[0], params);
    cols[2] = times_alpha(cols[1], params);
    Rational m[3][4];
    for (int j = 0; j < 3; ++j) {
        m[0][j] = cols[j].n;
        m[1][j] = cols[j].p;
        m[2][j] = cols[j].q;
    }
    m[0][3] = 1;
    m[1][3] = 0;
    m[2][3] = 0;
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        while (piv < 3 && m[piv][c] == 0) ++piv;
        if (piv == 3) throw std::logic_error("singular multiplication matrix for nonzero element " + to_string(x));
        if (piv != c)
            for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
        for (int r = 0; r < 3; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

FieldElem field_div(const FieldElem& x, const FieldElem& y, const Params& params) {
    return mul(x, field_inverse(y, params), params);
}

namespace {

template <class C>
std::string format_elem(const CubicElem<C>& x) {
    const C* coeff[3] = {&x.n, &x.p, &x.q};
    const char* mono[3] = {"", "α", "α²"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        const C& c = *coeff[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const C mag = negative ? C(-c) : c;
        if (negative)
            os << '-';
        else if (!first)
            os << '+';
        if (i == 0 || mag != 1) {
            // Rationals with non-unit denominators are parenthesized next to a monomial.
            std::ostringstream ms;
            ms << mag;
            const std::string s = ms.str();
            if (i > 0 && s.find('/') != std::string::npos)
                os << '(' << s << ')';
            else
                os << s;
        }
        os << mono[i];
        first = false;
    }
    return first ? std::string("0") : os.str();
}

}  // namespace

std::string to_string(const RingElem& x) { return format_elem(x); }
std::string to_string(const FieldElem& x) { return format_elem(x); }

}  // namespace rauzy
