#pragma once

#include "rauzy/geometry.hpp"
#include "rauzy/ring.hpp"

#include <array>
#include <complex>
#include <vector>

namespace rauzy {

using Complex = std::complex<double>;

enum class RootCase { Complex, TotallyReal };

// Beta is the Pisot root; Alpha and Lambda are the two conjugates. In the complex
// case Lambda is the complex conjugate of Alpha. In the totally real case Alpha is
// the conjugate of smaller absolute value.
enum class Root { Beta, Alpha, Lambda };

struct RootData {
    double beta = 0.0;
    Complex alpha;
    Complex lambda;
    RootCase kind = RootCase::Complex;

    Complex value(Root r) const;

    // Roots whose embeddings must stay bounded: alpha in the complex case, both
    // alpha and lambda in the totally real case.
    std::vector<Root> contracting() const;
};

// 18ABC - 4A^3C + A^2B^2 - 4B^3 - 27C^2 for x^3 + Ax^2 + Bx + C.
Integer discriminant(const Params& params);

RootData solve_roots(const Params& params);

Complex embed(const RingElem& x, Complex r);
Complex embed(const FieldElem& x, Complex r);
inline Complex embed(const RingElem& x, Root r, const RootData& rd) { return embed(x, rd.value(r)); }
inline Complex embed(const FieldElem& x, Root r, const RootData& rd) { return embed(x, rd.value(r)); }

// Coordinates in the contracting plane: (Re, Im) of the alpha-embedding in the
// complex case, (alpha-embedding, lambda-embedding) in the totally real case.
Point2 plane(Complex alpha_value, Complex lambda_value, RootCase kind);
Point2 plane(const RingElem& x, const RootData& rd);
Point2 plane(const FieldElem& x, const RootData& rd);

}  // namespace rauzy
