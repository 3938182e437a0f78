#pragma once

#include "rauzy/geometry.hpp"
#include "rauzy/numeration.hpp"
#include "rauzy/ring.hpp"
#include "rauzy/roots.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rauzy {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IdentityFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class EmptySet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// sum_i l_i alpha^i for l = preperiod followed by period repeated forever,
// starting at start_index. Digits may be any integers.
struct PeriodicDigitString {
    std::vector<long long> preperiod;
    std::vector<long long> period;
    int start_index = 0;
};

FieldElem psi_exact(const PeriodicDigitString& s, const Params& params);
Complex psi_numeric(const PeriodicDigitString& s, Complex root, int repetitions = 200);

struct JunctionReport {
    PeriodicDigitString w1s, w2s, w3s, z1s, z2s;
    FieldElem w1, w2, w3, z1, z2;
};

// The five strings with the repeating block (b+2)(a+b)(a-2)000.
JunctionReport junction_strings(const Params& params);
// Throws IdentityFailed unless w1 = w2 = w3 and z1 = z2 exactly.
JunctionReport verify_junction_identities(const Params& params);

// One point per admissible word on indices 2..depth. digits holds those words
// flattened, depth-1 entries per point, lowest index first.
struct PointCloud {
    Params params;
    int depth = 2;
    RootCase kind = RootCase::Complex;
    std::vector<Point2> points;
    std::vector<std::uint8_t> digits;

    std::size_t size() const noexcept { return points.size(); }
    std::size_t stride() const noexcept { return static_cast<std::size_t>(depth - 1); }
    DigitWord word(std::size_t i) const;
};

// 5e6 unless the RAUZY_BUDGET environment variable holds a positive integer.
std::size_t default_budget();

// Number of admissible words of the given length (counted by the DFA).
Integer count_admissible(const Params& params, int length);

PointCloud generate_points(const Params& params, int depth, const RootData& rd,
                           std::size_t budget = default_budget());

// (a-1)|alpha|^2/(1-|alpha|) style bound on |sum_{i>=start} l_i sigma^i|.
double tail_bound(const Params& params, Complex sigma, int start);

struct Lattice {
    RingElem g1;
    RingElem g2;
    Point2 e1;
    Point2 e2;
    double det() const { return e1.x * e2.y - e1.y * e2.x; }
};

// Z + Z alpha embedded in the contracting plane.
Lattice tiling_lattice(const Params& params, const RootData& rd);

struct Translate {
    RingElem u;  // m + n alpha
    Point2 shift;
};

// Lattice translates with |plane(u)| <= radius, sorted by norm then (q,p,n).
std::vector<Translate> tiling_patch(const Params& params, const RootData& rd, double radius);

std::vector<Point2> shifted(std::span<const Point2> pts, Point2 by);

// Static 2-d tree over a point set answering nearest-distance queries.
class PointIndex {
public:
    explicit PointIndex(std::span<const Point2> pts);
    double nearest(Point2 q) const;
    std::size_t size() const noexcept { return pts_.size(); }

private:
    using Box = std::array<double, 4>;  // x0, y0, x1, y1
    void build(std::ptrdiff_t lo, std::ptrdiff_t hi, int axis, std::size_t node);
    void query(std::ptrdiff_t lo, std::ptrdiff_t hi, int axis, std::size_t node, Point2 q, double& best2) const;
    std::vector<Point2> pts_;
    std::vector<Box> boxes_;
};

double directed_distance(std::span<const Point2> from, const PointIndex& to);
double hausdorff_distance(std::span<const Point2> A, std::span<const Point2> B);

struct TilingCheck {
    int depth = 14;
    int resolution = 512;
    double eps = 0.0;  // one pixel
    std::size_t samples = 0;
    std::size_t uncovered = 0;
    double max_distance = 0.0;
    std::size_t tiles = 0;
    std::size_t tile_pixels = 0;
    std::size_t union_pixels = 0;
    double overlap_ratio = 0.0;
};

// Covering: random points in a disk around the tile centroid, each within one
// pixel of some translate. Overlap: sum of per-tile pixel counts over the count of
// the union, on a resolution^2 canvas fitted to R with 5% margin.
TilingCheck check_tiling(const Params& params, const RootData& rd, int depth = 14, std::size_t samples = 10000,
                         std::uint64_t seed = 1, int resolution = 512);

}  // namespace rauzy
