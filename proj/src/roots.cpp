#include "rauzy/roots.hpp"

#include <cmath>

namespace rauzy {

namespace {

template <class T>
T poly(const Params& params, T x) {
    return ((x - T(params.a)) * x - T(params.b)) * x - T(1);
}

template <class T>
T dpoly(const Params& params, T x) {
    return (T(3) * x - T(2 * params.a)) * x - T(params.b);
}

template <class T>
T polish(const Params& params, T x) {
    for (int i = 0; i < 4; ++i) {
        const T d = dpoly(params, x);
        if (std::abs(d) == 0.0) break;
        x -= poly(params, x) / d;
    }
    return x;
}

}  // namespace

Complex RootData::value(Root r) const {
    switch (r) {
        case Root::Beta:
            return {beta, 0.0};
        case Root::Alpha:
            return alpha;
        case Root::Lambda:
            return lambda;
    }
    return alpha;
}

std::vector<Root> RootData::contracting() const {
    if (kind == RootCase::Complex) return {Root::Alpha};
    return {Root::Alpha, Root::Lambda};
}

Integer discriminant(const Params& params) {
    const Integer A = -params.a;
    const Integer B = -params.b;
    const Integer C = -1;
    return 18 * A * B * C - 4 * A * A * A * C + A * A * B * B - 4 * B * B * B - 27 * C * C;
}

RootData solve_roots(const Params& params) {
    RootData rd;
    double lo = 1.0;
    double hi = params.a + 1.0;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (poly(params, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    rd.beta = polish(params, 0.5 * (lo + hi));

    // x^3 - a x^2 - b x - 1 = (x - beta)(x^2 + (beta - a) x + 1/beta)
    const double s = rd.beta - params.a;
    const double disc = s * s - 4.0 / rd.beta;
    if (discriminant(params) < 0) {
        rd.kind = RootCase::Complex;
        const double im = 0.5 * std::sqrt(std::max(0.0, -disc));
        rd.alpha = polish(params, Complex(-0.5 * s, im));
        if (rd.alpha.imag() < 0) rd.alpha = std::conj(rd.alpha);
        rd.lambda = std::conj(rd.alpha);
    } else {
        rd.kind = RootCase::TotallyReal;
        const double root = std::sqrt(std::max(0.0, disc));
        // Stable quadratic formula: the product of the two roots is 1/beta.
        const double big = -0.5 * (s + (s >= 0 ? root : -root));
        double r1 = polish(params, big);
        double r2 = polish(params, (1.0 / rd.beta) / big);
        if (std::abs(r1) > std::abs(r2)) std::swap(r1, r2);
        rd.alpha = {r1, 0.0};
        rd.lambda = {r2, 0.0};
    }
    return rd;
}

Complex embed(const RingElem& x, Complex r) {
    return x.n.convert_to<double>() + r * (x.p.convert_to<double>() + r * x.q.convert_to<double>());
}

Complex embed(const FieldElem& x, Complex r) {
    return x.n.convert_to<double>() + r * (x.p.convert_to<double>() + r * x.q.convert_to<double>());
}

Point2 plane(Complex alpha_value, Complex lambda_value, RootCase kind) {
    if (kind == RootCase::Complex) return {alpha_value.real(), alpha_value.imag()};
    return {alpha_value.real(), lambda_value.real()};
}

Point2 plane(const RingElem& x, const RootData& rd) {
    if (rd.kind == RootCase::Complex) return plane(embed(x, rd.alpha), {}, rd.kind);
    return plane(embed(x, rd.alpha), embed(x, rd.lambda), rd.kind);
}

Point2 plane(const FieldElem& x, const RootData& rd) {
    if (rd.kind == RootCase::Complex) return plane(embed(x, rd.alpha), {}, rd.kind);
    return plane(embed(x, rd.alpha), embed(x, rd.lambda), rd.kind);
}

}  // namespace rauzy
