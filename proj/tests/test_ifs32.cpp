#include <doctest.h>

#include "rauzy/ifs32.hpp"

#include <map>

using namespace rauzy;

namespace {

const Params& P() { return ifs_params(); }
Complex al() { return ifs_roots().alpha; }
Complex num(const FieldElem& x) { return embed(x, al()); }
Point2 pt(const FieldElem& x) { return {num(x).real(), num(x).imag()}; }

RingElem red(std::initializer_list<long long> c) { return reduce(c, P()); }

const AffineMap& by_label(const std::vector<AffineMap>& maps, const std::string& label) {
    for (const AffineMap& m : maps)
        if (m.label == label) return m;
    throw std::out_of_range(label);
}

// Shared fixtures: the depth-14 cloud of R, its raster pixel, and curve samples.
struct Fixture {
    PointCloud R = generate_points(P(), 14, ifs_roots());
    double pixel = pixel_size(fit_viewport(R.points, 512, 512), 512);
    double tail = tail_bound(P(), al(), 15);
    PointIndex Ridx{R.points};
    std::map<std::string, std::vector<Point2>> curves;

    const std::vector<Point2>& curve(const RingElem& u) {
        auto [it, fresh] = curves.try_emplace(to_string(u));
        if (fresh) it->second = boundary_curve(u, 18).samples;
        return it->second;
    }
};

Fixture& fx() {
    static Fixture f;
    return f;
}

std::vector<Point2> image(const AffineMap& m, std::span<const Point2> pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (Point2 p : pts) {
        const Complex z = m.apply(Complex(p.x, p.y), al());
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

const RingElem one_minus_2a{1, -2, 0}, one_minus_a{1, -1, 0}, a1{0, 1, 0};

}  // namespace

TEST_CASE("map listings") {
    const auto f = f_family(10), g = g_family(10);
    CHECK(f.size() == 14);
    CHECK(g.size() == 12);
    CHECK(f[1].translation == red({0, 0, -1, 2}));
    CHECK(f[1].scale_power == 2);
    CHECK(f[0].translation == red({0, 0, 0, 0, 3, -1}));
    CHECK(g[0].translation == red({0, 0, 0, -1, 3, -1}));
    CHECK(g[1].translation == red({0, 0, 0, 0, 1, 2, -1}));
    CHECK(g[1].scale_power == 4);
    // f_{3+k} and g_{1+k} rebuilt from their coefficient strings
    for (int k = 1; k <= 10; ++k) {
        std::vector<long long> cf(7 + k, 0), cg(7 + k, 0);
        cf[4] = cg[4] = 2;
        for (int j = 1; j <= k - 1; ++j) cf[4 + j] = cg[4 + j] = 1;
        cf[5 + k] = 3;
        cg[5 + k] = 2;
        cf[6 + k] = cg[6 + k] = -1;
        CHECK(f[3 + k].translation == reduce<Integer>(std::vector<Integer>(cf.begin(), cf.end()), P()));
        CHECK(g[1 + k].translation == reduce<Integer>(std::vector<Integer>(cg.begin(), cg.end()), P()));
        CHECK(f[3 + k].scale_power == 4 + k);
        CHECK(g[1 + k].scale_power == 4 + k);
    }
    CHECK(std::abs(al()) == doctest::Approx(0.6558).epsilon(1e-4));
    for (const auto* fam : {&f, &g})
        for (const AffineMap& m : *fam) CHECK(m.ratio(al()) < 1);
    CHECK_THROWS(f_family(1));
}

TEST_CASE("fixed point of f1") {
    const AffineMap f1 = f_family(2)[1];
    const FieldElem fix = f1.fixed_point(P());
    const FieldElem expect = field_div(to_field(red({0, 0, -1, 2})), to_field(red({1, 0, -1})), P());
    CHECK(fix == expect);
    CHECK(f1.apply(fix, P()) == fix);
    // Banach iteration from an arbitrary seed
    Complex z(1.0, -2.0);
    const double d0 = std::abs(z - num(fix));
    for (int i = 1; i <= 30; ++i) {
        z = f1.apply(z, al());
        CHECK(std::abs(z - num(fix)) <= d0 * std::pow(std::abs(al()), 2 * i) * (1 + 1e-9) + 1e-15);
    }
    const auto pts = attractor({f1}, 40, to_field(RingElem(3, 1, 0)), 0.0 + 1e-300);
    REQUIRE(pts.size() == 1);
    CHECK(distance(pts[0], pt(fix)) < 1e-8);
}

TEST_CASE("composition") {
    const auto f = f_family(3), g = g_family(3);
    const AffineMap h = compose(f[2], g[1], P());
    CHECK(h.scale_power == 7);
    const FieldElem z = curve_y0();
    CHECK(h.apply(z, P()) == f[2].apply(g[1].apply(z, P()), P()));
}

TEST_CASE("first listing and its relation to the second") {
    const auto c = cover_family(6);
    CHECK(c.size() == 1 + 3 + 4 + 4 + 2 * 5);
    const AffineMap& c110 = by_label(c, "c1,1,0");
    CHECK(c110.translation == red({0, 0, 0, 0, 3, -1}));
    CHECK(c110.scale_power == 3);
    CHECK_THROWS(by_label(c, "c1,1,1"));
    int two = 0;
    for (const AffineMap& m : c) two += m.label.rfind("c2,", 0) == 0;
    CHECK(two == 4);

    std::map<std::string, std::string> match;
    for (const ListingMatch& m : compare_listings(6)) match[m.cover_label] = m.match;
    CHECK(match["c0"] == "f1");
    CHECK(match["c1,1,0"] == "f0");
    CHECK(match["c1,0,0"] == "g0");
    CHECK(match["c1,0,1"] == "f2");
    for (int k = 2; k <= 6; ++k) {
        CHECK(match["c" + std::to_string(2 + k) + ",1"] == "f" + std::to_string(3 + k));
        CHECK(match["c" + std::to_string(2 + k) + ",0"] == "g" + std::to_string(1 + k));
    }
    // The f_{2,i,j}, f_{3,i,j} maps have no counterpart in the second listing.
    for (const char* l : {"c2,0,0", "c2,0,1", "c2,1,0", "c2,1,1", "c3,0,0", "c3,0,1", "c3,1,0", "c3,1,1"})
        CHECK(match[l].empty());
}

TEST_CASE("first listing maps the curve partly off itself") {
    auto& F = fx();
    const auto& C = F.curve(one_minus_2a);
    const PointIndex idx(C);
    std::vector<Point2> sub;
    for (std::size_t i = 0; i < C.size(); i += 7) sub.push_back(C[i]);
    for (const AffineMap& m : cover_family(4)) {
        const double d = directed_distance(image(m, sub), idx);
        MESSAGE(m.label << ": max distance of image to curve " << d);
        const bool off = m.label.rfind("c2,", 0) == 0 || m.label.rfind("c3,", 0) == 0;
        if (off)
            CHECK(d > 2 * F.pixel);
        else
            CHECK(d <= F.pixel);
    }
}

TEST_CASE("curve constants") {
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    const FieldElem one_minus_a6 = to_field(RingElem(1, 0, 0) - alpha_pow(6, P()));
    CHECK(mul(z0, one_minus_a6, P()) == to_field(red({0, 0, 0, 1, 1, 1})));
    CHECK(mul(y0, one_minus_a6, P()) == to_field(red({0, 0, 0, 0, 1, 1, 1})));
    CHECK(y0 == mul(to_field(a1), z0, P()));
    CHECK(curve_diameter() == doctest::Approx(0.3927).epsilon(1e-3));
    // P is the limit of both families
    const auto f = f_family(30), g = g_family(30);
    CHECK(std::abs(f.back().apply(num(z0), al()) - num(curve_limit())) < 1e-5);
    CHECK(std::abs(g.back().apply(num(z0), al()) - num(curve_limit())) < 1e-5);
}

TEST_CASE("adjacency identities hold exactly") {
    const AdjacencyReport rep = adjacency_check(10, {}, 0.0);
    // f0..f14 and g0..g12 give 14 + 12 consecutive pairs plus the two endpoint identities
    CHECK(rep.identities.size() == 28);
    for (const auto& [name, ok] : rep.identities) CHECK_MESSAGE(ok, name);
    const auto f = f_family(11), g = g_family(11);
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    CHECK(f[0].apply(z0, P()) == f[1].apply(y0, P()));
    CHECK(g[1].apply(y0, P()) == g[2].apply(z0, P()));
    for (int k = 0; k <= 10; ++k) {
        CHECK(f[3 + k].apply(z0, P()) == f[4 + k].apply(y0, P()));
        CHECK(g[1 + k].apply(y0, P()) == g[2 + k].apply(z0, P()));
    }
    // The other denominator breaks the identity.
    const FieldElem z0p = field_div(to_field(red({0, 0, 0, 1, 1, 1})), to_field(red({1, 0, 0, 0, 0, 0, 1})), P());
    CHECK_FALSE(f[0].apply(z0p, P()) == f[1].apply(y0, P()));
}

TEST_CASE("non-adjacent images are separated") {
    auto& F = fx();
    const auto& C = F.curve(one_minus_2a);
    std::vector<Point2> sub;
    for (std::size_t i = 0; i < C.size(); i += 3) sub.push_back(C[i]);
    const AdjacencyReport rep = adjacency_check(10, sub, F.pixel);
    std::size_t conclusive = 0;
    for (const Separation& s : rep.separations) {
        conclusive += s.conclusive;
        // maps of index <= 3 are far apart from every non-neighbor
        auto idx = [](const std::string& l) { return std::stoi(l.substr(1)); };
        if (idx(s.first) <= 3 && idx(s.second) <= 3) CHECK_MESSAGE(s.conclusive, s.first << " " << s.second);
        CHECK(s.distance > 0);
    }
    MESSAGE(rep.separations.size() << " pairs, " << conclusive << " conclusive, min margin " << rep.min_margin
                                   << ", inconclusive " << rep.inconclusive);
    CHECK(rep.min_margin >= 2 * F.pixel);
}

TEST_CASE("triple points") {
    auto& F = fx();
    const auto tp = triple_points();
    REQUIRE(tp.size() == 6);
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    CHECK(tp[1].value == y0);
    CHECK(tp[2].value == z0);
    CHECK(tp[0].value - tp[2].value == to_field(a1));
    CHECK(tp[3].value - tp[1].value == to_field(RingElem(-1, 1, 0)));
    CHECK(tp[4].value - tp[2].value == to_field(RingElem(-1, 2, 0)));
    CHECK(tp[5].value - tp[1].value == to_field(RingElem(-1, 2, 0)));
    for (const TriplePoint& t : tp)
        for (const RingElem& u : t.tiles) {
            const Point2 q = pt(t.value - to_field(u));
            const double d = F.Ridx.nearest(q);
            CHECK_MESSAGE(d <= F.tail, t.label << " in R+" << to_string(u) << ": " << d);
        }
    const PointIndex cidx(F.curve(one_minus_2a));
    CHECK(cidx.nearest(pt(z0)) <= F.pixel);
    CHECK(cidx.nearest(pt(y0)) <= F.pixel);
}

TEST_CASE("attractor of f and g matches the automaton curve") {
    auto& F = fx();
    const double eps = 1e-4 * curve_diameter();
    const auto maps = curve_maps(eps);
    CHECK(maps.size() == 40);
    const auto A = attractor(maps, 6, curve_z0(), eps);
    const double h = hausdorff_distance(A, F.curve(one_minus_2a));
    MESSAGE("Hausdorff " << h << " vs 3 px = " << 3 * F.pixel);
    CHECK(h <= 3 * F.pixel);
}

TEST_CASE("attractor convergence and invariance") {
    auto& F = fx();
    const double eps = 1e-4 * curve_diameter();
    const auto maps = curve_maps(eps);
    const auto& C = F.curve(one_minus_2a);
    double prev = 1e9;
    for (int d = 1; d <= 5; ++d) {
        const double h = hausdorff_distance(attractor(maps, d, curve_z0(), eps), C);
        MESSAGE("depth " << d << ": " << h);
        CHECK(h <= prev + 1e-12);
        prev = h;
    }
    // With only the diameter cutoff the leaves form a cut of the composition
    // tree, and every image of a leaf lies within the cutoff of another leaf.
    const double cut = F.pixel;
    const auto coarse = curve_maps(cut);
    const auto A = attractor(coarse, 1000, curve_z0(), cut);
    std::vector<Point2> B;
    for (const AffineMap& m : coarse) {
        const auto img = image(m, A);
        B.insert(B.end(), img.begin(), img.end());
    }
    const double inv = hausdorff_distance(A, B);
    MESSAGE(A.size() << " leaves, d(A, maps(A)) = " << inv);
    CHECK(inv <= cut);
    CHECK_THROWS(attractor({}, 3, curve_z0(), eps));
    CHECK_THROWS(attractor(maps, 0, curve_z0(), eps));
}

TEST_CASE("neighbor curve decompositions") {
    auto& F = fx();
    const auto& C = F.curve(one_minus_2a);
    const auto& C1 = F.curve(one_minus_a);
    const auto& Ca = F.curve(a1);
    const PointIndex i1(C1), ia(Ca);
    std::vector<Point2> sub;
    for (std::size_t i = 0; i < C.size(); i += 5) sub.push_back(C[i]);

    for (const AffineMap& m : neighbor_decomposition(Curve::OneMinusAlpha, 8)) {
        const double d = directed_distance(image(m, sub), i1);
        if (m.label[1] == '2')
            CHECK_MESSAGE(d > 2 * F.pixel, m.label << " " << d);
        else
            CHECK_MESSAGE(d <= F.pixel, m.label << " " << d);
    }
    // The pieces with k > K sit inside a disk of radius |alpha|^{K+1} (2|alpha| + max|z|)
    // around 0, where they accumulate. Outside it k <= K covers; k <= 12 covers everything.
    double zmax = 0;
    for (Point2 p : C) zmax = std::max(zmax, std::hypot(p.x, p.y));
    auto cover_gap = [&](int K, double skip) {
        std::vector<Point2> pieces;
        for (const AffineMap& m : neighbor_decomposition(Curve::OneMinusAlpha, K))
            if (m.label[1] != '2') {
                const auto img = image(m, C);
                pieces.insert(pieces.end(), img.begin(), img.end());
            }
        const PointIndex idx(pieces);
        double gap = 0;
        for (Point2 p : C1)
            if (std::hypot(p.x, p.y) > skip) gap = std::max(gap, idx.nearest(p));
        return gap;
    };
    const double r = std::abs(al());
    const double rho8 = std::pow(r, 9) * (2 * r + zmax);
    const double all8 = cover_gap(8, -1), out8 = cover_gap(8, rho8), all12 = cover_gap(12, -1);
    MESSAGE("l in {0,1}: k <= 8 covers R_{1-alpha} to " << all8 << " (" << out8 << " outside radius " << rho8
                                                        << "), k <= 12 to " << all12);
    CHECK(out8 <= F.pixel);
    CHECK(all12 <= F.pixel);

    // alpha R_{1-2alpha} lies on R_{1-alpha} rather than R_alpha.
    const auto alpha_maps = neighbor_decomposition(Curve::Alpha, 4);
    CHECK(alpha_maps.front().label == "alpha");
    const auto img = image(alpha_maps.front(), sub);
    CHECK(directed_distance(img, i1) <= F.pixel);
    CHECK(directed_distance(img, ia) > 2 * F.pixel);
    // Pieces that do lie on R_alpha.
    const AffineMap on_a{red({0, 0, 2}), 1, Family::NeighborDecomp, "2a^2+az"};
    CHECK(directed_distance(image(on_a, sub), ia) <= F.pixel);
    CHECK_THROWS(boundary_curve(RingElem(2, 0, 0), 10));
}

TEST_CASE("polygonal approximations") {
    auto& F = fx();
    const double eps = 1e-4 * curve_diameter();
    const PolygonalApprox p0 = parametrize_phi(0, eps), p1 = parametrize_phi(1, eps);
    CHECK(p0.vertices.size() == 2);
    std::size_t nf = 0, ng = 0;
    for (const AffineMap& m : curve_maps(eps)) (m.family == Family::F ? nf : ng) += 1;
    // f side z0 .. f_last(z0), the limit point, g_last(y0) .. y0
    CHECK(p1.vertices.size() == nf + ng + 3);
    CHECK(distance(p1.vertices.front(), pt(curve_z0())) < 1e-12);
    CHECK(distance(p1.vertices.back(), pt(curve_y0())) < 1e-12);
    CHECK(distance(p1.vertices[nf + 1], pt(curve_limit())) < 1e-12);
    const auto f = f_family(3);
    CHECK(distance(p1.vertices[1], pt(f[1].apply(curve_y0(), P()))) < 1e-12);

    std::vector<PolygonalApprox> phi{p0, p1};
    for (int n = 2; n <= 6; ++n) phi.push_back(parametrize_phi(n, eps));
    for (const auto& p : phi) {
        CHECK(std::is_sorted(p.t.begin(), p.t.end()));
        CHECK(p.t.front() == 0.0);
        CHECK(p.t.back() == 1.0);
    }
    std::vector<double> d;
    for (int n = 1; n <= 6; ++n) d.push_back(sup_distance(phi[n], phi[n - 1]));
    for (int n = 2; n <= 5; ++n) {
        const double ratio = d[n] / d[n - 1];
        MESSAGE("n=" << n << " sup " << d[n] << " ratio " << ratio);
        CHECK(ratio <= std::abs(al()) + 0.1);
    }
    // nested vertex sets
    for (int n = 1; n <= 3; ++n) {
        const PointIndex next(phi[n + 1].vertices);
        CHECK(directed_distance(phi[n].vertices, next) < 1e-12);
    }
    const PointIndex cidx(F.curve(one_minus_2a));
    CHECK(directed_distance(phi[4].vertices, cidx) <= F.pixel);
}

TEST_CASE("sup distance") {
    PolygonalApprox a{1, {0, 1}, {{0, 0}, {1, 0}}};
    PolygonalApprox b{1, {0, 0.5, 1}, {{0, 0}, {0.5, 0.25}, {1, 0}}};
    CHECK(sup_distance(a, a) == 0.0);
    CHECK(sup_distance(a, b) == doctest::Approx(0.25));
    CHECK(sup_distance(b, a) == doctest::Approx(0.25));
    PolygonalApprox c{1, {0, 0.25, 1}, {{0, 1}, {0.25, 1}, {1, 1}}};
    CHECK(sup_distance(a, c) == doctest::Approx(1.0));
    CHECK_THROWS(sup_distance(a, PolygonalApprox{}));
}
