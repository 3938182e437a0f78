#pragma once

// Explicit self-affine description of the boundary of R_{3,-2}: the curve
// R_{1-2alpha} = R ∩ (R + 1 - 2alpha), its two infinite map families, triple
// points and polygonal approximations.

#include "rauzy/fractal.hpp"
#include "rauzy/ring.hpp"
#include "rauzy/roots.hpp"

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

class AdjacencyFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Family { F, G, Cover, NeighborDecomp };
const char* to_string(Family f);

// sum c alpha^k as (k, c) pairs
using PowerSum = std::vector<std::pair<int, long long>>;

// z -> translation + alpha^scale_power z.
struct AffineMap {
    RingElem translation;
    int scale_power = 1;
    Family family = Family::F;
    std::string label;
    // The translation before reduction. Reduced coefficients grow like beta^k and
    // cancel badly in floating point, so numeric evaluation uses this when present.
    PowerSum terms;

    Complex offset(Complex alpha) const;
    FieldElem apply(const FieldElem& z, const Params& params) const;
    Complex apply(Complex z, Complex alpha) const;
    FieldElem fixed_point(const Params& params) const;
    double ratio(Complex alpha) const { return std::pow(std::abs(alpha), scale_power); }
};

// outer ∘ inner
AffineMap compose(const AffineMap& outer, const AffineMap& inner, const Params& params);

const Params& ifs_params();     // (3,-2)
const RootData& ifs_roots();

// f_0..f_4 and f_{3+k} for k <= kmax; g_0..g_2 and g_{1+k} for k <= kmax.
std::vector<AffineMap> f_family(int kmax);
std::vector<AffineMap> g_family(int kmax);
// f_0, f_{1,i,j}, f_{2,i,j}, f_{3,i,j} and f_{2+k,i} for 2 <= k <= kmax, as first listed.
std::vector<AffineMap> cover_family(int kmax);

enum class Curve { OneMinusAlpha, Alpha };
// OneMinusAlpha: l alpha^{k+1} + alpha^k z.
// Alpha: alpha z, then l alpha^{k+2} + alpha^{k+1} z.
// Always l in {0,1,2}, 1 <= k <= kmax.
std::vector<AffineMap> neighbor_decomposition(Curve which, int kmax);

// z0 = (alpha^3+alpha^4+alpha^5)/(1-alpha^6), y0 = (alpha^4+alpha^5+alpha^6)/(1-alpha^6),
// P = 2alpha^4 + alpha^5/(1-alpha), the common limit of f_k(z) and g_k(z).
FieldElem curve_z0();
FieldElem curve_y0();
FieldElem curve_limit();
// |z0 - y0|, the reference diameter of R_{1-2alpha}.
double curve_diameter();

// The six translates u with R ∩ (R+u) a boundary curve.
std::vector<RingElem> curve_translates();

// Samples of R ∩ (R+u) for one of the six curve translates.
struct BoundaryCurve {
    RingElem which;
    std::vector<Point2> samples;
};
BoundaryCurve boundary_curve(const RingElem& u, int depth, std::size_t budget = default_budget());

struct TriplePoint {
    std::string label;
    FieldElem value;
    std::array<RingElem, 3> tiles;  // value lies in R + tiles[i]
};
std::vector<TriplePoint> triple_points();

// Pairwise separation of sampled images. Below 2 eps is inconclusive.
struct Separation {
    std::string first;
    std::string second;
    double distance = 0.0;
    bool conclusive = false;
};

struct AdjacencyReport {
    int kmax = 2;
    // name, holds (always true; a false identity throws)
    std::vector<std::pair<std::string, bool>> identities;
    std::vector<Separation> separations;
    double eps = 0.0;
    double min_margin = 0.0;  // smallest conclusive separation
    std::size_t inconclusive = 0;
};

// Exact f_k(z0) = f_{k+1}(y0) for k <= 3+kmax, g_k(y0) = g_{k+1}(z0) for k <= 1+kmax,
// f_0(y0) = z0, g_0(z0) = y0.
// Sampled separation of f_i, f_l (|i-l| > 1) and f_i, g_l images of `samples`.
AdjacencyReport adjacency_check(int kmax, std::span<const Point2> samples, double eps);

// Keeps the maps whose image of a set of diameter `diameter` is at least eps wide.
std::vector<AffineMap> truncate_family(const std::vector<AffineMap>& maps, double diameter, double eps);

// seed under every composition of up to `depth` maps. A branch stops early once its
// composed image of the reference diameter is narrower than eps.
std::vector<Point2> attractor(const std::vector<AffineMap>& maps, int depth, const FieldElem& seed, double eps);

// f and g families truncated at eps, ready for attractor / parametrize_phi.
std::vector<AffineMap> curve_maps(double eps);

// Piecewise linear curve on [0,1]: vertex i sits at parameter t[i].
struct PolygonalApprox {
    int level = 0;
    std::vector<double> t;
    std::vector<Point2> vertices;
};

// phi_0 is the segment z0 -> y0. phi_{n} is f_0, f_1, ... applied to reversed phi_{n-1},
// a straight tail to P, then ..., g_1, g_0 applied to reversed phi_{n-1}. Each piece
// owns a share of [0,1] proportional to its contraction ratio; pieces below eps
// are not refined.
PolygonalApprox parametrize_phi(int n, double eps);

// max_t |p(t) - q(t)|, exact for piecewise linear curves.
double sup_distance(const PolygonalApprox& p, const PolygonalApprox& q);

// Each first-listing map with the second-listing map of identical translation and scale.
struct ListingMatch {
    std::string cover_label;
    std::string match;  // empty when no f or g map agrees
};
std::vector<ListingMatch> compare_listings(int kmax);

}  // namespace rauzy
