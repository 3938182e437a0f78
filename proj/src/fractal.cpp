#include "rauzy/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

namespace rauzy {

double distance(Point2 u, Point2 v) { return std::hypot(u.x - v.x, u.y - v.y); }

Viewport fit_viewport(std::span<const Point2> pts, int width, int height, double margin) {
    if (pts.empty()) return {};
    double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const Point2& p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    double w = x1 - x0, h = y1 - y0;
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    if (w <= 0 && h <= 0) w = h = 1.0;
    w *= 1.0 + 2.0 * margin;
    h *= 1.0 + 2.0 * margin;
    const double aspect = static_cast<double>(width) / height;
    if (w < h * aspect)
        w = h * aspect;
    else
        h = w / aspect;
    return {cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h};
}

FieldElem psi_exact(const PeriodicDigitString& s, const Params& params) {
    FieldElem sum;
    RingElem power = alpha_pow(s.start_index, params);
    for (long long d : s.preperiod) {
        sum = sum + to_field(Integer(d) * power);
        power = times_alpha(power, params);
    }
    if (s.period.empty()) return sum;
    RingElem block;
    RingElem pj = RingElem::constant(1);
    for (long long d : s.period) {
        block = block + Integer(d) * pj;
        pj = times_alpha(pj, params);
    }
    const FieldElem denom = FieldElem::constant(1) - to_field(pj);
    if (denom.is_zero()) throw std::logic_error("psi_exact: 1 - alpha^k vanished");
    const FieldElem tail = mul(to_field(mul(power, block, params)), field_inverse(denom, params), params);
    return sum + tail;
}

Complex psi_numeric(const PeriodicDigitString& s, Complex root, int repetitions) {
    Complex sum = 0;
    Complex power = std::pow(root, s.start_index);
    for (long long d : s.preperiod) {
        sum += static_cast<double>(d) * power;
        power *= root;
    }
    if (s.period.empty()) return sum;
    for (int r = 0; r < repetitions; ++r)
        for (long long d : s.period) {
            sum += static_cast<double>(d) * power;
            power *= root;
        }
    return sum;
}

JunctionReport junction_strings(const Params& params) {
    const long long a = params.a, b = params.b;
    const std::vector<long long> block{b + 2, a + b, a - 2, 0, 0, 0};
    JunctionReport r;
    r.w1s = {{0, 0, 0, 0}, block, 0};
    r.w2s = {{0, 1, b, a - 1, 0, 0, 0}, block, 0};
    r.w3s = {{1, b + 1, a + b, a - 2, 0, 0, 0}, block, 0};
    r.z1s = {{1, b, a - 1}, {}, 0};
    r.z2s = {{0, 0, 0, b + 2, a + b + 1}, {a + b}, 0};
    r.w1 = psi_exact(r.w1s, params);
    r.w2 = psi_exact(r.w2s, params);
    r.w3 = psi_exact(r.w3s, params);
    r.z1 = psi_exact(r.z1s, params);
    r.z2 = psi_exact(r.z2s, params);
    return r;
}

JunctionReport verify_junction_identities(const Params& params) {
    JunctionReport r = junction_strings(params);
    auto fail = [&](const char* what, const FieldElem& d) {
        std::ostringstream os;
        os << what << " differ by " << to_string(d) << " for (a,b) = (" << params.a << "," << params.b << ")";
        throw IdentityFailed(os.str());
    };
    if (!(r.w1 == r.w2)) fail("w1, w2", r.w1 - r.w2);
    if (!(r.w1 == r.w3)) fail("w1, w3", r.w1 - r.w3);
    if (!(r.z1 == r.z2)) fail("z1, z2", r.z1 - r.z2);
    return r;
}

DigitWord PointCloud::word(std::size_t i) const {
    DigitWord w;
    w.start_index = 2;
    const std::size_t s = stride();
    w.digits.reserve(s);
    for (std::size_t k = 0; k < s; ++k) w.digits.push_back(digits[i * s + k]);
    return w;
}

std::size_t default_budget() {
    if (const char* env = std::getenv("RAUZY_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

Integer count_admissible(const Params& params, int length) {
    const AdmissibilityDfa dfa(params);
    std::vector<Integer> cnt(AdmissibilityDfa::state_count(), 0);
    cnt[static_cast<int>(AdmissibilityDfa::initial())] = 1;
    for (int i = 0; i < length; ++i) {
        std::vector<Integer> next(cnt.size(), 0);
        for (int s = 0; s < AdmissibilityDfa::state_count(); ++s) {
            if (cnt[s] == 0) continue;
            for (int d = 0; d < params.a; ++d)
                if (auto t = dfa.step(static_cast<AdmissibilityDfa::State>(s), d)) next[static_cast<int>(*t)] += cnt[s];
        }
        cnt = std::move(next);
    }
    Integer total = 0;
    for (const Integer& c : cnt) total += c;
    return total;
}

PointCloud generate_points(const Params& params, int depth, const RootData& rd, std::size_t budget) {
    if (depth < 2) throw std::invalid_argument("generate_points: depth must be >= 2");
    const int len = depth - 1;
    const Integer total = count_admissible(params, len);
    if (total > budget) {
        std::ostringstream os;
        os << "depth " << depth << " needs " << total << " words, budget is " << budget;
        throw BudgetExceeded(os.str());
    }
    PointCloud cloud;
    cloud.params = params;
    cloud.depth = depth;
    cloud.kind = rd.kind;
    const std::size_t n = total.convert_to<std::size_t>();
    cloud.points.reserve(n);
    cloud.digits.reserve(n * static_cast<std::size_t>(len));

    std::vector<Complex> pa(len), pl(len);
    for (int i = 0; i < len; ++i) {
        pa[i] = std::pow(rd.alpha, i + 2);
        pl[i] = std::pow(rd.lambda, i + 2);
    }
    const AdmissibilityDfa dfa(params);
    std::vector<std::uint8_t> word(len, 0);
    struct Frame {
        AdmissibilityDfa::State state;
        Complex va, vl;
        int digit;
    };
    std::vector<Frame> stack;
    stack.reserve(len + 1);
    stack.push_back({AdmissibilityDfa::initial(), 0.0, 0.0, -1});
    // Depth-first walk; stack.size()-1 digits are fixed.
    while (!stack.empty()) {
        const int level = static_cast<int>(stack.size()) - 1;
        if (level == len) {
            const Frame& f = stack.back();
            cloud.points.push_back(plane(f.va, f.vl, rd.kind));
            cloud.digits.insert(cloud.digits.end(), word.begin(), word.end());
            stack.pop_back();
            continue;
        }
        Frame& f = stack.back();
        int d = f.digit + 1;
        std::optional<AdmissibilityDfa::State> next;
        for (; d < params.a; ++d)
            if ((next = dfa.step(f.state, d))) break;
        if (d >= params.a) {
            stack.pop_back();
            continue;
        }
        f.digit = d;
        word[level] = static_cast<std::uint8_t>(d);
        stack.push_back({*next, f.va + double(d) * pa[level], f.vl + double(d) * pl[level], -1});
    }
    return cloud;
}

double tail_bound(const Params& params, Complex sigma, int start) {
    const double r = std::abs(sigma);
    return (params.a - 1) * std::pow(r, start) / (1.0 - r);
}

Lattice tiling_lattice(const Params& params, const RootData& rd) {
    (void)params;
    Lattice l;
    l.g1 = RingElem::constant(1);
    l.g2 = RingElem::alpha();
    l.e1 = plane(l.g1, rd);
    l.e2 = plane(l.g2, rd);
    return l;
}

std::vector<Translate> tiling_patch(const Params& params, const RootData& rd, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("tiling_patch: radius must be positive");
    const Lattice l = tiling_lattice(params, rd);
    const double det = l.det();
    // Rows of the inverse matrix bound |m| and |n| for points within the radius.
    const double mrow = std::hypot(l.e2.y, l.e2.x) / std::abs(det);
    const double nrow = std::hypot(l.e1.y, l.e1.x) / std::abs(det);
    const long mmax = static_cast<long>(std::ceil(radius * mrow)) + 1;
    const long nmax = static_cast<long>(std::ceil(radius * nrow)) + 1;
    std::vector<Translate> out;
    for (long m = -mmax; m <= mmax; ++m)
        for (long n = -nmax; n <= nmax; ++n) {
            const Point2 s{m * l.e1.x + n * l.e2.x, m * l.e1.y + n * l.e2.y};
            if (std::hypot(s.x, s.y) <= radius) out.push_back({RingElem(m, n, 0), s});
        }
    std::sort(out.begin(), out.end(), [](const Translate& x, const Translate& y) {
        const double nx = std::hypot(x.shift.x, x.shift.y), ny = std::hypot(y.shift.x, y.shift.y);
        if (std::abs(nx - ny) > 1e-12) return nx < ny;
        return x.u < y.u;
    });
    return out;
}

std::vector<Point2> shifted(std::span<const Point2> pts, Point2 by) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.push_back(p + by);
    return out;
}

namespace {

constexpr std::ptrdiff_t kLeaf = 8;

double coord(Point2 p, int axis) { return axis == 0 ? p.x : p.y; }

}  // namespace

// Balanced median tree stored implicitly; node i has children 2i+1, 2i+2 and a
// bounding box, so far-away clusters are rejected whole.
void PointIndex::build(std::ptrdiff_t lo, std::ptrdiff_t hi, int axis, std::size_t node) {
    if (node >= boxes_.size()) boxes_.resize(2 * node + 2);
    Box box{pts_[lo].x, pts_[lo].y, pts_[lo].x, pts_[lo].y};
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
        box[0] = std::min(box[0], pts_[i].x);
        box[1] = std::min(box[1], pts_[i].y);
        box[2] = std::max(box[2], pts_[i].x);
        box[3] = std::max(box[3], pts_[i].y);
    }
    boxes_[node] = box;
    if (hi - lo <= kLeaf) return;
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    std::nth_element(pts_.begin() + lo, pts_.begin() + mid, pts_.begin() + hi,
                     [axis](Point2 u, Point2 v) { return coord(u, axis) < coord(v, axis); });
    build(lo, mid, 1 - axis, 2 * node + 1);
    build(mid + 1, hi, 1 - axis, 2 * node + 2);
}

void PointIndex::query(std::ptrdiff_t lo, std::ptrdiff_t hi, int axis, std::size_t node, Point2 q, double& best2) const {
    const Box& b = boxes_[node];
    const double bx = std::max({b[0] - q.x, 0.0, q.x - b[2]});
    const double by = std::max({b[1] - q.y, 0.0, q.y - b[3]});
    if (bx * bx + by * by >= best2) return;
    if (hi - lo <= kLeaf) {
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            const double dx = pts_[i].x - q.x, dy = pts_[i].y - q.y;
            best2 = std::min(best2, dx * dx + dy * dy);
        }
        return;
    }
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    const Point2 m = pts_[mid];
    const double dx = m.x - q.x, dy = m.y - q.y;
    best2 = std::min(best2, dx * dx + dy * dy);
    if (coord(q, axis) < coord(m, axis)) {
        query(lo, mid, 1 - axis, 2 * node + 1, q, best2);
        query(mid + 1, hi, 1 - axis, 2 * node + 2, q, best2);
    } else {
        query(mid + 1, hi, 1 - axis, 2 * node + 2, q, best2);
        query(lo, mid, 1 - axis, 2 * node + 1, q, best2);
    }
}

PointIndex::PointIndex(std::span<const Point2> pts) : pts_(pts.begin(), pts.end()) {
    if (pts_.empty()) throw EmptySet("PointIndex over an empty set");
    build(0, static_cast<std::ptrdiff_t>(pts_.size()), 0, 0);
}

double PointIndex::nearest(Point2 q) const {
    double best2 = std::numeric_limits<double>::infinity();
    query(0, static_cast<std::ptrdiff_t>(pts_.size()), 0, 0, q, best2);
    return std::sqrt(best2);
}

double directed_distance(std::span<const Point2> from, const PointIndex& to) {
    if (from.empty()) throw EmptySet("directed_distance from an empty set");
    double d = 0.0;
    for (const Point2& p : from) d = std::max(d, to.nearest(p));
    return d;
}

double hausdorff_distance(std::span<const Point2> A, std::span<const Point2> B) {
    if (A.empty() || B.empty()) throw EmptySet("hausdorff_distance of an empty set");
    const PointIndex ia(A), ib(B);
    return std::max(directed_distance(A, ib), directed_distance(B, ia));
}

TilingCheck check_tiling(const Params& params, const RootData& rd, int depth, std::size_t samples, std::uint64_t seed,
                         int resolution) {
    TilingCheck tc;
    tc.depth = depth;
    tc.resolution = resolution;
    tc.samples = samples;
    const PointCloud cloud = generate_points(params, depth, rd);
    const Viewport vp = fit_viewport(cloud.points, resolution, resolution, 0.05);
    tc.eps = pixel_size(vp, resolution);

    Point2 centroid{0, 0};
    double reach = 0.0;
    for (const Point2& p : cloud.points) {
        centroid.x += p.x;
        centroid.y += p.y;
        reach = std::max(reach, std::hypot(p.x, p.y));
    }
    centroid.x /= static_cast<double>(cloud.size());
    centroid.y /= static_cast<double>(cloud.size());
    const double disk = 0.5 * std::max(vp.width(), vp.height()) / 1.1;

    // Every translate whose copy can come near the disk or the canvas.
    const double patch_r = std::hypot(centroid.x, centroid.y) + disk + reach + std::hypot(vp.width(), vp.height());
    const std::vector<Translate> tr = tiling_patch(params, rd, patch_r);
    std::vector<Point2> all;
    all.reserve(cloud.size() * tr.size());
    for (const Translate& t : tr)
        for (const Point2& p : cloud.points) all.push_back(p + t.shift);
    const PointIndex index(all);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = disk * std::sqrt(unit(rng));
        const double th = 2.0 * M_PI * unit(rng);
        const double d = index.nearest({centroid.x + r * std::cos(th), centroid.y + r * std::sin(th)});
        tc.max_distance = std::max(tc.max_distance, d);
        if (d > tc.eps) ++tc.uncovered;
    }

    const std::size_t npx = static_cast<std::size_t>(resolution) * resolution;
    std::vector<std::uint8_t> tile(npx), uni(npx, 0);
    for (const Translate& t : tr) {
        std::fill(tile.begin(), tile.end(), 0);
        bool any = false;
        for (const Point2& p : cloud.points) {
            const double x = (p.x + t.shift.x - vp.x0) / vp.width() * resolution;
            const double y = (p.y + t.shift.y - vp.y0) / vp.height() * resolution;
            if (x < 0 || y < 0 || x >= resolution || y >= resolution) continue;
            tile[static_cast<std::size_t>(y) * resolution + static_cast<std::size_t>(x)] = 1;
            any = true;
        }
        if (!any) continue;
        ++tc.tiles;
        for (std::size_t k = 0; k < npx; ++k)
            if (tile[k]) {
                ++tc.tile_pixels;
                uni[k] = 1;
            }
    }
    for (std::uint8_t u : uni) tc.union_pixels += u;
    tc.overlap_ratio = tc.union_pixels ? static_cast<double>(tc.tile_pixels) / tc.union_pixels : 0.0;
    return tc;
}

}  // namespace rauzy
