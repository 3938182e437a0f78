#include "rauzy/ifs32.hpp"

#include "rauzy/boundary.hpp"

#include <algorithm>
#include <limits>

namespace rauzy {

namespace {

RingElem poly(const PowerSum& terms) {
    RingElem out;
    for (auto [k, c] : terms) out = out + Integer(c) * alpha_pow(k, ifs_params());
    return out;
}

AffineMap make(PowerSum t, int s, Family fam, std::string label) {
    return {poly(t), s, fam, std::move(label), std::move(t)};
}

// 2 alpha^4 + alpha^5 + ... + alpha^{3+k} + c alpha^{5+k} - alpha^{6+k}
PowerSum tail_translation(int k, long long c) {
    PowerSum t{{4, 2}};
    for (int j = 1; j <= k - 1; ++j) t.emplace_back(4 + j, 1);
    t.emplace_back(5 + k, c);
    t.emplace_back(6 + k, -1);
    return t;
}

Complex to_complex(Point2 p) { return {p.x, p.y}; }
Point2 to_point(Complex z) { return {z.real(), z.imag()}; }

Complex num(const FieldElem& x) { return embed(x, ifs_roots().alpha); }

FieldElem over_one_minus(const RingElem& numer, int k) {
    const Params& p = ifs_params();
    return field_div(to_field(numer), to_field(RingElem(1, 0, 0) - alpha_pow(k, p)), p);
}

double min_distance(std::span<const Point2> from, const PointIndex& to) {
    double best = std::numeric_limits<double>::infinity();
    for (Point2 q : from) best = std::min(best, to.nearest(q));
    return best;
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::F: return "f";
        case Family::G: return "g";
        case Family::Cover: return "cover";
        case Family::NeighborDecomp: return "neighborDecomp";
    }
    return "?";
}

FieldElem AffineMap::apply(const FieldElem& z, const Params& params) const {
    return to_field(translation) + mul(to_field(alpha_pow(scale_power, params)), z, params);
}

Complex AffineMap::offset(Complex alpha) const {
    if (terms.empty()) return embed(translation, alpha);
    Complex s = 0;
    for (auto [k, c] : terms) s += double(c) * std::pow(alpha, k);
    return s;
}

Complex AffineMap::apply(Complex z, Complex alpha) const { return offset(alpha) + std::pow(alpha, scale_power) * z; }

FieldElem AffineMap::fixed_point(const Params& params) const {
    const FieldElem d = to_field(RingElem(1, 0, 0) - alpha_pow(scale_power, params));
    return field_div(to_field(translation), d, params);
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner, const Params& params) {
    AffineMap out{outer.translation + mul(alpha_pow(outer.scale_power, params), inner.translation, params),
                  outer.scale_power + inner.scale_power, outer.family, outer.label + "∘" + inner.label, {}};
    if (!outer.terms.empty() && !inner.terms.empty()) {
        out.terms = outer.terms;
        for (auto [k, c] : inner.terms) out.terms.emplace_back(k + outer.scale_power, c);
    }
    return out;
}

const Params& ifs_params() {
    static const Params p = Params::make(3, -2);
    return p;
}

const RootData& ifs_roots() {
    static const RootData rd = solve_roots(ifs_params());
    return rd;
}

std::vector<AffineMap> f_family(int kmax) {
    if (kmax < 2) throw std::invalid_argument("f_family: kmax must be >= 2");
    std::vector<AffineMap> out{
        make({{4, 3}, {5, -1}}, 3, Family::F, "f0"),
        make({{2, -1}, {3, 2}}, 2, Family::F, "f1"),
        make({{3, -1}, {4, 4}, {5, -1}}, 3, Family::F, "f2"),
        make({{4, 1}, {5, 3}, {6, -1}}, 4, Family::F, "f3"),
    };
    for (int k = 1; k <= kmax; ++k)
        out.push_back(make(tail_translation(k, 3), 4 + k, Family::F, "f" + std::to_string(3 + k)));
    return out;
}

std::vector<AffineMap> g_family(int kmax) {
    if (kmax < 2) throw std::invalid_argument("g_family: kmax must be >= 2");
    std::vector<AffineMap> out{
        make({{3, -1}, {4, 3}, {5, -1}}, 3, Family::G, "g0"),
        make({{4, 1}, {5, 2}, {6, -1}}, 4, Family::G, "g1"),
    };
    for (int k = 1; k <= kmax; ++k)
        out.push_back(make(tail_translation(k, 2), 4 + k, Family::G, "g" + std::to_string(1 + k)));
    return out;
}

std::vector<AffineMap> cover_family(int kmax) {
    if (kmax < 2) throw std::invalid_argument("cover_family: kmax must be >= 2");
    std::vector<AffineMap> out{make({{2, -1}, {3, 2}}, 2, Family::Cover, "c0")};
    auto label = [](int k, int i, int j) {
        return "c" + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j);
    };
    // j = 0 is forced when i = 1
    for (auto [i, j] : {std::pair{1, 0}, {0, 0}, {0, 1}})
        out.push_back(make({{3, i - 1}, {4, j + 3}, {5, -1}}, 3, Family::Cover, label(1, i, j)));
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            out.push_back(make({{3, i}, {4, 1}, {5, j + 2}, {6, -2}}, 4, Family::Cover, label(2, i, j)));
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            out.push_back(make({{3, i}, {4, 2}, {6, j + 2}, {7, -2}}, 5, Family::Cover, label(3, i, j)));
    for (int k = 2; k <= kmax; ++k)
        for (int i = 0; i <= 1; ++i)
            out.push_back(make(tail_translation(k, i + 2), 4 + k, Family::Cover,
                               "c" + std::to_string(2 + k) + "," + std::to_string(i)));
    return out;
}

std::vector<AffineMap> neighbor_decomposition(Curve which, int kmax) {
    if (kmax < 1) throw std::invalid_argument("neighbor_decomposition: kmax must be >= 1");
    const int shift = which == Curve::Alpha ? 1 : 0;
    std::vector<AffineMap> out;
    if (which == Curve::Alpha) out.push_back(make({}, 1, Family::NeighborDecomp, "alpha"));
    for (int k = 1; k <= kmax; ++k)
        for (long long l = 0; l <= 2; ++l)
            out.push_back(make({{k + 1 + shift, l}}, k + shift, Family::NeighborDecomp,
                               "l" + std::to_string(l) + ",k" + std::to_string(k)));
    return out;
}

FieldElem curve_z0() { return over_one_minus(poly({{3, 1}, {4, 1}, {5, 1}}), 6); }
FieldElem curve_y0() { return over_one_minus(poly({{4, 1}, {5, 1}, {6, 1}}), 6); }
FieldElem curve_limit() { return to_field(poly({{4, 2}})) + over_one_minus(poly({{5, 1}}), 1); }

double curve_diameter() { return std::abs(num(curve_z0()) - num(curve_y0())); }

std::vector<RingElem> curve_translates() {
    const std::vector<RingElem> base{{0, 1, 0}, {1, -1, 0}, {1, -2, 0}};
    std::vector<RingElem> out;
    for (const RingElem& u : base) {
        out.push_back(u);
        out.push_back(-u);
    }
    return out;
}

BoundaryCurve boundary_curve(const RingElem& u, int depth, std::size_t budget) {
    const std::vector<RingElem> six = curve_translates();
    if (std::find(six.begin(), six.end(), u) == six.end())
        throw std::invalid_argument("boundary_curve: " + to_string(u) + " is not one of the six curve translates");
    return {u, intersection_points(ifs_params(), ifs_roots(), u, depth, budget)};
}

std::vector<TriplePoint> triple_points() {
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    const RingElem zero{}, al{0, 1, 0}, one{1, 0, 0};
    auto F = [](const RingElem& x) { return to_field(x); };
    return {
        {"alpha+z0", F(al) + z0, {zero, al, one - al}},
        {"y0", y0, {zero, one - al, one - al - al}},
        {"z0", z0, {zero, one - al - al, -al}},
        {"-1+alpha+y0", F(al - one) + y0, {zero, -al, al - one}},
        {"-1+2alpha+z0", F(al + al - one) + z0, {zero, al - one, al + al - one}},
        {"-1+2alpha+y0", F(al + al - one) + y0, {zero, al + al - one, al}},
    };
}

AdjacencyReport adjacency_check(int kmax, std::span<const Point2> samples, double eps) {
    const Params& p = ifs_params();
    const Complex al = ifs_roots().alpha;
    AdjacencyReport rep;
    rep.kmax = kmax;
    rep.eps = eps;
    const std::vector<AffineMap> f = f_family(kmax + 1), g = g_family(kmax + 1);
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    auto record = [&](const std::string& name, const FieldElem& l, const FieldElem& r) {
        if (!(l == r)) throw AdjacencyFailed(name + ": " + to_string(l) + " != " + to_string(r));
        rep.identities.emplace_back(name, true);
    };
    record("f0(y0) = z0", f[0].apply(y0, p), z0);
    record("g0(z0) = y0", g[0].apply(z0, p), y0);
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
        record(f[k].label + "(z0) = " + f[k + 1].label + "(y0)", f[k].apply(z0, p), f[k + 1].apply(y0, p));
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
        record(g[k].label + "(y0) = " + g[k + 1].label + "(z0)", g[k].apply(y0, p), g[k + 1].apply(z0, p));

    if (samples.empty()) return rep;
    std::vector<AffineMap> all = f;
    all.insert(all.end(), g.begin(), g.end());
    std::vector<std::vector<Point2>> images;
    for (const AffineMap& m : all) {
        std::vector<Point2> img;
        img.reserve(samples.size());
        for (Point2 s : samples) img.push_back(to_point(m.apply(to_complex(s), al)));
        images.push_back(std::move(img));
    }
    const std::size_t nf = f.size();
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < all.size(); ++i) {
        const PointIndex idx(images[i]);
        for (std::size_t j = 0; j < i; ++j) {
            const bool same = (i < nf) == (j < nf);
            if (same && i - j <= 1) continue;  // consecutive maps share a point
            Separation s{all[j].label, all[i].label, min_distance(images[j], idx), false};
            s.conclusive = s.distance >= 2 * eps;
            if (s.conclusive)
                rep.min_margin = std::min(rep.min_margin, s.distance);
            else
                ++rep.inconclusive;
            rep.separations.push_back(std::move(s));
        }
    }
    return rep;
}

std::vector<AffineMap> truncate_family(const std::vector<AffineMap>& maps, double diameter, double eps) {
    const Complex al = ifs_roots().alpha;
    std::vector<AffineMap> out;
    for (const AffineMap& m : maps)
        if (m.ratio(al) * diameter >= eps) out.push_back(m);
    return out;
}

namespace {

struct CurveFamilies {
    std::vector<AffineMap> f, g;
};

// Families long enough that every omitted map is below eps.
CurveFamilies truncated_families(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const double D = curve_diameter();
    const double r = std::abs(ifs_roots().alpha);
    int kmax = 2;
    while (std::pow(r, 4 + kmax) * D >= eps) ++kmax;
    return {truncate_family(f_family(kmax), D, eps), truncate_family(g_family(kmax), D, eps)};
}

}  // namespace

std::vector<AffineMap> curve_maps(double eps) {
    CurveFamilies c = truncated_families(eps);
    c.f.insert(c.f.end(), c.g.begin(), c.g.end());
    return c.f;
}

std::vector<Point2> attractor(const std::vector<AffineMap>& maps, int depth, const FieldElem& seed, double eps) {
    if (maps.empty()) throw std::invalid_argument("attractor: no maps");
    if (depth < 1) throw std::invalid_argument("attractor: depth must be >= 1");
    const Complex al = ifs_roots().alpha;
    const double D = curve_diameter();
    const Complex z = num(seed);
    std::vector<Complex> t;
    std::vector<double> r;
    for (const AffineMap& m : maps) {
        if (!(m.ratio(al) < 1)) throw std::invalid_argument("attractor: " + m.label + " is not a contraction");
        t.push_back(m.offset(al));
    }
    std::vector<Point2> out;
    struct Frame {
        Complex c, m;
        int d;
    };
    std::vector<Frame> stack{{0.0, 1.0, 0}};
    while (!stack.empty()) {
        const Frame fr = stack.back();
        stack.pop_back();
        if (fr.d == depth || std::abs(fr.m) * D < eps) {
            out.push_back(to_point(fr.c + fr.m * z));
            continue;
        }
        for (std::size_t i = maps.size(); i-- > 0;)
            stack.push_back({fr.c + fr.m * t[i], fr.m * std::pow(al, maps[i].scale_power), fr.d + 1});
    }
    return out;
}

namespace {

struct Piece {
    bool segment = false;  // straight tail; endpoints a, b
    Complex c, m;          // map for refined pieces
    Complex a, b;
    double w0 = 0, w1 = 0;  // share of [0,1]
};

class PhiBuilder {
public:
    explicit PhiBuilder(double eps) : eps_(eps) {
        const Complex al = ifs_roots().alpha;
        const double r = std::abs(al);
        const CurveFamilies fam = truncated_families(eps);
        z0_ = num(curve_z0());
        y0_ = num(curve_y0());
        D_ = curve_diameter();
        const Complex P = num(curve_limit());
        // weights: ratio per map; a tail carries the geometric remainder of its family
        std::vector<Piece> ps;
        std::vector<double> w;
        auto add_map = [&](const AffineMap& mp) {
            ps.push_back({false, mp.offset(al), std::pow(al, mp.scale_power), {}, {}});
            w.push_back(mp.ratio(al));
        };
        for (const AffineMap& mp : fam.f) add_map(mp);
        ps.push_back({true, {}, {}, ps.back().c + ps.back().m * z0_, P});
        w.push_back(std::pow(r, fam.f.back().scale_power + 1) / (1 - r));
        const Complex g_end = fam.g.back().apply(y0_, al);
        ps.push_back({true, {}, {}, P, g_end});
        w.push_back(std::pow(r, fam.g.back().scale_power + 1) / (1 - r));
        for (std::size_t i = fam.g.size(); i-- > 0;) add_map(fam.g[i]);
        double total = 0;
        for (double x : w) total += x;
        double acc = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            ps[i].w0 = acc / total;
            acc += w[i];
            ps[i].w1 = i + 1 == ps.size() ? 1.0 : acc / total;
        }
        pieces_ = std::move(ps);
    }

    PolygonalApprox build(int n) {
        out_ = {};
        out_.level = n;
        emit(n, 0.0, 1.0, false, 0.0, 1.0);
        return std::move(out_);
    }

private:
    void push(double t, Complex z) {
        if (!out_.t.empty() && std::abs(out_.t.back() - t) < 1e-15) return;
        out_.t.push_back(t);
        out_.vertices.push_back(to_point(z));
    }

    // phi_level under z -> c + m z, on [t0,t1], traversed backwards if rev.
    void emit(int level, Complex c, Complex m, bool rev, double t0, double t1) {
        if (level == 0 || std::abs(m) * D_ < eps_) {
            push(t0, c + m * (rev ? y0_ : z0_));
            push(t1, c + m * (rev ? z0_ : y0_));
            return;
        }
        const double len = t1 - t0;
        auto visit = [&](const Piece& p) {
            const double a = rev ? t1 - p.w1 * len : t0 + p.w0 * len;
            const double b = rev ? t1 - p.w0 * len : t0 + p.w1 * len;
            if (p.segment) {
                push(a, c + m * (rev ? p.b : p.a));
                push(b, c + m * (rev ? p.a : p.b));
            } else {
                emit(level - 1, c + m * p.c, m * p.m, !rev, a, b);
            }
        };
        if (rev)
            for (std::size_t i = pieces_.size(); i-- > 0;) visit(pieces_[i]);
        else
            for (const Piece& p : pieces_) visit(p);
    }

    double eps_;
    double D_ = 1;
    Complex z0_, y0_;
    std::vector<Piece> pieces_;
    PolygonalApprox out_;
};

Point2 lerp(const PolygonalApprox& p, std::size_t i, double t) {
    if (i + 1 >= p.t.size()) return p.vertices.back();
    const double s = (t - p.t[i]) / (p.t[i + 1] - p.t[i]);
    const Point2 u = p.vertices[i], v = p.vertices[i + 1];
    return {u.x + s * (v.x - u.x), u.y + s * (v.y - u.y)};
}

}  // namespace

PolygonalApprox parametrize_phi(int n, double eps) {
    if (n < 0) throw std::invalid_argument("parametrize_phi: level must be >= 0");
    return PhiBuilder(eps).build(n);
}

double sup_distance(const PolygonalApprox& p, const PolygonalApprox& q) {
    if (p.t.size() < 2 || q.t.size() < 2) throw std::invalid_argument("sup_distance: need two vertices per curve");
    std::vector<double> ts(p.t);
    ts.insert(ts.end(), q.t.begin(), q.t.end());
    std::sort(ts.begin(), ts.end());
    // Both curves are linear between consecutive merged breakpoints.
    auto at = [](const PolygonalApprox& c, std::size_t& i, double t) {
        while (i + 2 < c.t.size() && c.t[i + 1] < t) ++i;
        return lerp(c, i, t);
    };
    std::size_t i = 0, j = 0;
    double best = 0;
    for (double t : ts) best = std::max(best, distance(at(p, i, t), at(q, j, t)));
    return best;
}

std::vector<ListingMatch> compare_listings(int kmax) {
    std::vector<AffineMap> second = f_family(kmax + 1);
    const std::vector<AffineMap> g = g_family(kmax + 2);
    second.insert(second.end(), g.begin(), g.end());
    std::vector<ListingMatch> out;
    for (const AffineMap& c : cover_family(kmax)) {
        ListingMatch m{c.label, ""};
        for (const AffineMap& s : second)
            if (s.scale_power == c.scale_power && s.translation == c.translation) {
                m.match = s.label;
                break;
            }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace rauzy
