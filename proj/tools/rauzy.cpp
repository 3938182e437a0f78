// Command-line front end. Every subcommand prints a JSON report and writes it
// to <out-dir>/<command>.json (or --json PATH). Exit codes: 0 success,
// 2 invalid input, 3 a failed check or internal error.

#include "report.hpp"

#include "rauzy/boundary.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/ifs32.hpp"
#include "rauzy/numeration.hpp"
#include "rauzy/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>

namespace fs = std::filesystem;
using namespace rauzy;
using namespace rauzy::cli;

namespace {

struct Common {
    int a = 3;
    int b = -2;
    std::string out_dir = ".";
    std::string report_path;
};

Params params_of(const Common& c) { return Params::make(c.a, c.b); }

fs::path under(const Common& c, const std::string& file) {
    const fs::path p(file);
    return p.is_absolute() ? p : fs::path(c.out_dir) / p;
}

Report start(const std::string& command, const Params& p) {
    Report r;
    r.command = command;
    r.params = params_json(p);
    return r;
}

void require_ifs_params(const Params& p) {
    if (!(p == ifs_params()))
        throw UsageError("this command is specific to (a,b) = (3,-2); got (" + std::to_string(p.a) + "," +
                         std::to_string(p.b) + ")");
}

Integer parse_integer(const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw UsageError("not an integer: '" + s + "'");
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

// "2011" or "2,0,1,1", most significant digit first.
std::vector<int> parse_digits(const std::string& s) {
    std::vector<int> out;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t end = std::min(s.find(',', pos), s.size());
            const std::string tok = s.substr(pos, end - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("bad digit '" + tok + "'");
            out.push_back(std::stoi(tok));
            pos = end + 1;
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw UsageError(std::string("bad digit '") + ch + "'");
            out.push_back(ch - '0');
        }
    }
    if (out.empty()) throw UsageError("empty digit string");
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Largest depth whose admissible word count stays under cap.
int auto_depth(const Params& p, std::size_t cap, int lo = 4, int hi = 24) {
    int d = lo;
    while (d < hi && count_admissible(p, d) <= cap) ++d;
    return d;
}

std::vector<Point2> marker(Point2 c, double radius) {
    std::vector<Point2> out;
    for (int i = -8; i <= 8; ++i)
        for (int j = -8; j <= 8; ++j)
            if (i * i + j * j <= 64) out.push_back({c.x + radius * i / 8.0, c.y + radius * j / 8.0});
    return out;
}

// Drops vertices closer than tol to the last kept one; endpoints stay.
std::vector<Point2> decimate(std::span<const Point2> v, double tol) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (out.empty() || i + 1 == v.size() || distance(out.back(), v[i]) >= tol) out.push_back(v[i]);
    return out;
}

// ---------------------------------------------------------------- numeration

Report cmd_expand(const Common& c, const std::string& n_str) {
    const Params p = params_of(c);
    Report r = start("expand", p);
    const Integer n = parse_integer(n_str);
    if (n < 0) throw UsageError("n must be nonnegative");
    r.inputs = {{"n", big(n)}};
    const DigitWord w = greedy_expand(n, p);
    const bool valid = is_admissible(w, p);
    const Integer back = word_value(w, p);
    r.outputs = {{"input", big(n)}, {"digits", w.msd_first()}, {"valid", valid}, {"value", big(back)}};
    r.check("admissible", valid);
    r.check("round trip", back == n, "value of digits = " + back.str());
    return r;
}

Report cmd_tseq(const Common& c, int N) {
    const Params p = params_of(c);
    Report r = start("tseq", p);
    if (N < 0) throw UsageError("N must be nonnegative");
    r.inputs = {{"N", N}};
    const TSequence t = t_sequence(p, N);
    json vals = json::array();
    for (const Integer& v : t.values) vals.push_back(big(v));
    r.outputs = {{"values", vals}};
    bool ok = true;
    for (int n = 4; n <= N; ++n) ok = ok && t_identity_check(t, n);
    r.check("T decomposition identity", ok, N >= 4 ? "n = 4.." + std::to_string(N) : "needs N >= 4; vacuous");
    return r;
}

Report cmd_admissible(const Common& c, const std::string& digits) {
    const Params p = params_of(c);
    Report r = start("admissible", p);
    const std::vector<int> msd = parse_digits(digits);
    r.inputs = {{"digits", digits}};
    const DigitWord w = DigitWord::from_msd(msd);
    const bool valid = is_admissible(w, p);
    r.outputs = {{"input", digits}, {"digits", msd}, {"valid", valid}, {"value", nullptr}};
    if (valid) r.outputs["value"] = big(word_value(w, p));
    r.check("automaton agrees with window check", AdmissibilityDfa(p).accepts(w.digits) == valid);
    return r;
}

Report cmd_roots(const Common& c) {
    const Params p = params_of(c);
    Report r = start("roots", p);
    const RootData rd = solve_roots(p);
    r.outputs = {{"beta", rd.beta},
                 {"alpha", complex_json(rd.alpha)},
                 {"lambda", complex_json(rd.lambda)},
                 {"case", rd.kind == RootCase::Complex ? "complex" : "real"},
                 {"discriminant", big(discriminant(p))}};
    auto P = [&](Complex x) { return x * x * x - double(p.a) * x * x - double(p.b) * x - 1.0; };
    const double res = std::max({std::abs(P(rd.beta)), std::abs(P(rd.alpha)), std::abs(P(rd.lambda))});
    r.check("residuals", res < 1e-9, "max |P(root)| = " + fmt(res));
    r.check("contracting conjugates", std::abs(rd.alpha) < 1 && std::abs(rd.lambda) < 1 && rd.beta > 1);
    return r;
}

// ------------------------------------------------------------------ fractal

Report cmd_points(const Common& c, int depth, const std::string& out) {
    const Params p = params_of(c);
    Report r = start("points", p);
    if (depth < 2) throw UsageError("depth must be >= 2");
    r.inputs = {{"depth", depth}, {"out", out}};
    const RootData rd = solve_roots(p);
    const PointCloud cloud = generate_points(p, depth, rd);
    const fs::path path = under(c, out);
    if (path.extension() == ".json") {
        json pts = json::array();
        for (Point2 q : cloud.points) pts.push_back(point_json(q, cloud.kind));
        write_file(path, json{{"params", params_json(p)}, {"depth", depth}, {"points", pts}}.dump() + "\n");
    } else if (path.extension() == ".ppm") {
        write_file(path, to_ppm(rasterize({{cloud.points, palette()[0]}})));
    } else {
        throw UsageError("--out must end in .json or .ppm");
    }
    const Integer words = count_admissible(p, depth - 1);
    r.outputs = {{"count", cloud.size()},
                 {"kind", cloud.kind == RootCase::Complex ? "complex" : "real"},
                 {"file", path.string()}};
    r.check("one point per admissible word", Integer(cloud.size()) == words, "words = " + words.str());
    return r;
}

Report cmd_tiling(const Common& c, double radius, int depth, std::size_t samples, const std::string& out) {
    const Params p = params_of(c);
    Report r = start("tiling", p);
    r.inputs = {{"radius", radius}, {"depth", depth}, {"samples", samples}, {"out", out}};
    const RootData rd = solve_roots(p);
    const TilingCheck tc = check_tiling(p, rd, depth, samples);
    const std::vector<Translate> patch = tiling_patch(p, rd, radius);
    json tr = json::array();
    for (const Translate& t : patch) tr.push_back(ring_json(t.u));
    const PointCloud cloud = generate_points(p, depth, rd);
    std::vector<std::vector<Point2>> tiles;
    for (const Translate& t : patch) tiles.push_back(shifted(cloud.points, t.shift));
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < tiles.size(); ++i) layers.push_back({tiles[i], palette()[i % 8]});
    CanvasSpec spec;
    spec.viewport = Viewport{-radius, -radius, radius, radius};
    const fs::path path = under(c, out);
    write_file(path, to_ppm(rasterize(layers, spec)));
    r.outputs = {{"translates", tr},
                 {"eps", tc.eps},
                 {"samples", tc.samples},
                 {"uncovered", tc.uncovered},
                 {"maxDistance", tc.max_distance},
                 {"tiles", tc.tiles},
                 {"overlapRatio", tc.overlap_ratio},
                 {"file", path.string()}};
    r.check("covering", tc.uncovered == 0,
            std::to_string(tc.uncovered) + " of " + std::to_string(tc.samples) + " samples farther than " + fmt(tc.eps));
    r.check("overlap <= 5%", tc.overlap_ratio - 1.0 <= 0.05, "overlap estimate " + fmt(tc.overlap_ratio - 1.0));
    return r;
}

// ----------------------------------------------------------------- boundary

ExploreOptions explore_options(bool loose, bool beta) {
    ExploreOptions o;
    o.language = loose ? Language::Unrestricted : Language::Admissible;
    o.beta_filter = beta;
    return o;
}

Report cmd_automaton(const Common& c, bool loose, bool beta, const std::string& dot) {
    const Params p = params_of(c);
    Report r = start("automaton", p);
    r.inputs = {{"language", loose ? "unrestricted" : "admissible"}, {"betaFilter", beta}, {"dot", dot}};
    const RootData rd = solve_roots(p);
    const DiffAutomaton aut = boundary_automaton(p, rd, explore_options(loose, beta));
    const std::vector<RingElem> vals = aut.values();
    auto id = [&](const RingElem& v) { return std::lower_bound(vals.begin(), vals.end(), v) - vals.begin(); };
    json states = json::array();
    for (const RingElem& v : vals) states.push_back(ring_json(v));
    std::set<std::tuple<long, long, int>> arcs;
    for (const Edge& e : aut.edges) arcs.emplace(id(aut.states[e.from].value), id(aut.states[e.to].value), e.diff());
    json edges = json::array();
    for (auto [f, t, d] : arcs) edges.push_back({{"from", f}, {"to", t}, {"diff", d}});
    const std::size_t nonzero = vals.size() - std::count_if(vals.begin(), vals.end(), [](const RingElem& v) { return v.is_zero(); });
    r.outputs = {{"states", states},
                 {"edges", edges},
                 {"stateCount", nonzero},
                 {"productStates", aut.states.size()},
                 {"K", p.K()}};
    if (!dot.empty()) {
        const fs::path path = under(c, dot);
        write_file(path, render_dot(aut));
        r.outputs["dot"] = path.string();
    }
    bool has_e = true;
    for (const RingElem& e : base_states(p)) has_e = has_e && aut.contains(e);
    r.check("contains ±E", has_e);
    bool has_chain = true;
    for (const RingElem& e : chain_states(p)) has_chain = has_chain && aut.contains(e) && aut.contains(-e);
    r.check("contains ±(t + t(b+1)α + t(a+b+1)α²), t <= K", has_chain);
    bool sym = true;
    for (const RingElem& v : vals) sym = sym && std::binary_search(vals.begin(), vals.end(), -v);
    r.check("negation symmetric", sym);
    return r;
}

Report cmd_neighbors(const Common& c, bool loose) {
    const Params p = params_of(c);
    Report r = start("neighbors", p);
    r.inputs = {{"language", loose ? "unrestricted" : "admissible"}};
    const RootData rd = solve_roots(p);
    const NeighborReport n = neighbor_set(p, rd, explore_options(loose, false));
    json H = json::array();
    for (const RingElem& u : n.H) H.push_back({{"m", big(u.n)}, {"n", big(u.p)}, {"label", to_string(u)}});
    const int bound = 6 + 2 * (n.K - 1);
    r.outputs = {{"H", H},
                 {"count", n.count},
                 {"K", n.K},
                 {"lowerBound", bound},
                 {"candidates", n.candidates},
                 {"negationSymmetric", n.negation_symmetric},
                 {"diskVerdict", to_string(n.disk)}};
    r.check("count >= 6 + 2(K-1)", static_cast<int>(n.count) >= bound,
            std::to_string(n.count) + " vs " + std::to_string(bound));
    r.check("negation symmetric", n.negation_symmetric);
    return r;
}

Report cmd_disk(const Common& c) {
    const Params p = params_of(c);
    Report r = start("disk", p);
    const DiskVerdict v = disk_test(p);
    const int crit = 2 * p.a + 3 * p.b + 4;
    r.outputs = {{"diskVerdict", to_string(v)}, {"criterion", crit}};
    r.check("verdict follows 2a+3b+4 <= 0", (v == DiskVerdict::NotDisk) == (crit <= 0), "2a+3b+4 = " + std::to_string(crit));
    return r;
}

// -------------------------------------------------------------------- ifs32

struct CurveContext {
    double pixel = 0;
    std::vector<Point2> curve;
};

CurveContext curve_context() {
    CurveContext cc;
    const PointCloud R = generate_points(ifs_params(), 14, ifs_roots());
    cc.pixel = pixel_size(fit_viewport(R.points, 512, 512), 512);
    cc.curve = boundary_curve(RingElem(1, -2, 0), 18).samples;
    return cc;
}

json map_json(const AffineMap& m) {
    return {{"label", m.label},
            {"family", to_string(m.family)},
            {"translation", ring_json(m.translation)},
            {"scalePower", m.scale_power},
            {"ratio", m.ratio(ifs_roots().alpha)}};
}

Report cmd_ifs(const Common& c, const std::string& family, int depth, double eps_rel, int kmax_opt,
               const std::string& out) {
    const Params p = params_of(c);
    require_ifs_params(p);
    Report r = start("ifs", p);
    if (depth < 1) throw UsageError("depth must be >= 1");
    if (!(eps_rel > 0)) throw UsageError("eps must be positive");
    if (kmax_opt < -1) throw UsageError("kmax must be nonnegative");
    r.inputs = {{"family", family}, {"depth", depth}, {"eps", eps_rel}, {"kmax", kmax_opt}, {"out", out}};
    const double eps = eps_rel * curve_diameter();
    const double D = curve_diameter();
    std::vector<AffineMap> maps;
    if (family == "fg") {
        maps = curve_maps(eps);
    } else if (family == "f" || family == "g" || family == "cover") {
        int kmax = kmax_opt;
        if (kmax < 0) {
            kmax = 2;
            while (std::pow(std::abs(ifs_roots().alpha), 4 + kmax) * D >= eps) ++kmax;
        }
        maps = family == "f" ? f_family(kmax) : family == "g" ? g_family(kmax) : cover_family(kmax);
        if (kmax_opt < 0) maps = truncate_family(maps, D, eps);
    } else {
        throw UsageError("--family must be f, g, fg or cover");
    }
    const std::vector<Point2> A = attractor(maps, depth, curve_z0(), eps);
    json mj = json::array();
    for (const AffineMap& m : maps) mj.push_back(map_json(m));
    const fs::path path = under(c, out);
    if (path.extension() == ".svg") {
        SvgStyle st;
        st.stroke = palette()[3];
        write_file(path, svg_points(A, st));
    } else if (path.extension() == ".json") {
        // one point per 1e-6 cell, thinned to at most 200000
        std::set<std::pair<long long, long long>> seen;
        std::vector<Point2> uniq;
        for (Point2 q : A)
            if (seen.emplace(std::llround(q.x * 1e6), std::llround(q.y * 1e6)).second) uniq.push_back(q);
        const std::size_t step = uniq.size() / 200000 + 1;
        json pts = json::array();
        for (std::size_t i = 0; i < uniq.size(); i += step) pts.push_back(point_json(uniq[i], RootCase::Complex));
        write_file(path, json{{"maps", mj}, {"step", step}, {"points", pts}}.dump() + "\n");
    } else {
        throw UsageError("--out must end in .svg or .json");
    }
    r.outputs = {{"maps", mj}, {"points", A.size()}, {"file", path.string()}};
    bool contract = true;
    for (const AffineMap& m : maps) contract = contract && m.ratio(ifs_roots().alpha) < 1;
    r.check("all maps contract", contract);
    if (family == "fg") {
        const CurveContext cc = curve_context();
        const double h = hausdorff_distance(A, cc.curve);
        r.outputs["hausdorffToCurve"] = h;
        r.outputs["pixel"] = cc.pixel;
        r.check("attractor within 3 px of the automaton curve", h <= 3 * cc.pixel,
                fmt(h) + " vs " + fmt(3 * cc.pixel));
    }
    return r;
}

Report cmd_param(const Common& c, int level, double eps_rel, const std::string& out) {
    const Params p = params_of(c);
    require_ifs_params(p);
    Report r = start("param", p);
    if (level < 1) throw UsageError("level must be >= 1");
    if (level > 8) throw UsageError("level must be <= 8");
    r.inputs = {{"level", level}, {"eps", eps_rel}, {"out", out}};
    const double eps = eps_rel * curve_diameter();
    const PolygonalApprox phi = parametrize_phi(level, eps);
    const PolygonalApprox prev = parametrize_phi(level - 1, eps);
    const double d = sup_distance(phi, prev);
    const fs::path path = under(c, out.empty() ? "phi_" + std::to_string(level) + ".svg" : out);
    SvgStyle st;
    st.stroke = palette()[3];
    st.viewport = fit_viewport(phi.vertices, st.width, st.height, st.margin);
    const std::vector<Point2> drawn = decimate(phi.vertices, 0.25 * pixel_size(*st.viewport, st.width));
    write_file(path, svg_polyline(drawn, st));
    r.outputs = {{"vertices", phi.vertices.size()},
                 {"svgVertices", drawn.size()},
                 {"supDistanceToPrevious", d},
                 {"file", path.string()}};
    auto pt = [](const FieldElem& x) {
        const Complex z = embed(x, ifs_roots().alpha);
        return Point2{z.real(), z.imag()};
    };
    r.check("starts at z0 and ends at y0",
            distance(phi.vertices.front(), pt(curve_z0())) < 1e-12 && distance(phi.vertices.back(), pt(curve_y0())) < 1e-12);
    if (level >= 2) {
        const double dprev = sup_distance(prev, parametrize_phi(level - 2, eps));
        const double ratio = d / dprev;
        r.outputs["ratioToPrevious"] = ratio;
        const double bound = std::abs(ifs_roots().alpha) + 0.1;
        r.check("sup-distance ratio <= |alpha| + 0.1", ratio <= bound, fmt(ratio) + " vs " + fmt(bound));
    }
    return r;
}

Report cmd_verify() {
    Report r;
    r.command = "verify-lemmas";
    std::size_t total = 0, failed = 0;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        ++total;
        failed += !ok;
        r.check(std::move(name), ok, std::move(detail));
    };
    for (int a = 3; a <= 10; ++a)
        for (int b = 1 - a; b <= -2; ++b) {
            const Params p = Params::make(a, b);
            const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            const TSequence t = t_sequence(p, 60);
            bool ok = true;
            for (int n = 4; n <= 60; ++n) ok = ok && t_identity_check(t, n);
            add("T decomposition identity " + tag, ok, "n = 4..60");
            try {
                verify_junction_identities(p);
                add("junction identities w1 = w2 = w3, z1 = z2 " + tag, true);
            } catch (const IdentityFailed& e) {
                add("junction identities w1 = w2 = w3, z1 = z2 " + tag, false, e.what());
            }
        }
    try {
        const AdjacencyReport adj = adjacency_check(10, {}, 0.0);
        for (const auto& [name, ok] : adj.identities) add(name, ok);
    } catch (const AdjacencyFailed& e) {
        add("adjacency identities", false, e.what());
    }
    const auto tp = triple_points();
    const FieldElem z0 = curve_z0(), y0 = curve_y0();
    const RingElem al{0, 1, 0};
    add("y0 = alpha z0", y0 == mul(to_field(al), z0, ifs_params()));
    add("triple point alpha+z0 = z0 + alpha", tp[0].value - tp[2].value == to_field(al));
    add("triple point -1+alpha+y0 = y0 + (-1+alpha)", tp[3].value - tp[1].value == to_field(RingElem(-1, 1, 0)));
    add("triple point -1+2alpha+z0 = z0 + (-1+2alpha)", tp[4].value - tp[2].value == to_field(RingElem(-1, 2, 0)));
    add("triple point -1+2alpha+y0 = y0 + (-1+2alpha)", tp[5].value - tp[1].value == to_field(RingElem(-1, 2, 0)));
    json tps = json::array();
    for (const TriplePoint& t : tp) tps.push_back({{"label", t.label}, {"value", field_json(t.value, ifs_roots())}});
    r.outputs = {{"identities", total}, {"failed", failed}, {"triplePoints", tps}};
    return r;
}

// --------------------------------------------------------------- render-all

struct Figure {
    std::string figure;
    std::string file;
    std::string description;
};

Report cmd_render_all(const Common& c, std::size_t cap) {
    const Params p = params_of(c);
    Report r = start("render-all", p);
    r.inputs = {{"pointCap", cap}};
    std::vector<Figure> figs;
    auto emit = [&](const std::string& fig, const std::string& file, const std::string& what, const std::string& data) {
        const fs::path path = under(c, file);
        write_file(path, data);
        figs.push_back({fig, path.string(), what});
        r.check(file + " written", !data.empty() && fs::file_size(path) == data.size());
    };
    const Rgb grey{205, 205, 205}, black{0, 0, 0};
    auto tag = [](const Params& q) { return std::to_string(q.a) + "_" + std::to_string(q.b); };

    // Real-case clouds are thin needles at equal scale; stretch both axes to the bounding box.
    auto spec_for = [](RootCase kind, std::span<const Point2> pts) {
        CanvasSpec spec;
        if (kind == RootCase::TotallyReal) {
            Viewport vp{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
            for (Point2 q : pts) {
                vp.x0 = std::min(vp.x0, q.x), vp.x1 = std::max(vp.x1, q.x);
                vp.y0 = std::min(vp.y0, q.y), vp.y1 = std::max(vp.y1, q.y);
            }
            const double mx = spec.margin * vp.width(), my = spec.margin * vp.height();
            spec.viewport = Viewport{vp.x0 - mx, vp.y0 - my, vp.x1 + mx, vp.y1 + my};
        }
        return spec;
    };
    auto stretched = [](RootCase kind) { return kind == RootCase::TotallyReal ? " (axes scaled independently)" : ""; };

    // R with its neighbors, optionally marking points.
    auto neighbor_figure = [&](const Params& q, Rgb centre, const std::vector<Point2>& marks) {
        const RootData rd = solve_roots(q);
        const PointCloud R = generate_points(q, auto_depth(q, cap), rd);
        const NeighborReport n = neighbor_set(q, rd);
        std::vector<std::vector<Point2>> copies;
        std::vector<Point2> all(R.points);
        for (const RingElem& u : n.H) {
            copies.push_back(shifted(R.points, plane(u, rd)));
            all.insert(all.end(), copies.back().begin(), copies.back().end());
        }
        std::vector<Layer> layers;
        for (std::size_t i = 0; i < copies.size(); ++i) layers.push_back({copies[i], palette()[i % 8]});
        layers.push_back({R.points, centre});
        layers.push_back({marks, black});
        return to_ppm(rasterize(layers, spec_for(R.kind, all)));
    };

    {
        const RootData rd = solve_roots(p);
        const PointCloud R = generate_points(p, auto_depth(p, cap), rd);
        emit("1", "fig01_R_" + tag(p) + ".ppm", std::string("the Rauzy fractal R") + stretched(R.kind),
             to_ppm(rasterize({{R.points, palette()[0]}}, spec_for(R.kind, R.points))));
        emit("4", "fig04_neighbors_" + tag(p) + ".ppm", std::string("R (black) and its neighbors R+u") + stretched(R.kind), neighbor_figure(p, black, {}));
        emit("5", "fig05_automaton_" + tag(p) + ".dot", "trimmed boundary automaton", render_dot(boundary_automaton(p, rd)));
    }
    if (p == ifs_params()) {
        {
            const Params q = Params::make(6, -5);
            const PointCloud R = generate_points(q, auto_depth(q, cap), solve_roots(q));
            emit("2", "fig02_R_6_-5.ppm", std::string("the Rauzy fractal R_{6,-5}, totally real case") + stretched(R.kind),
                 to_ppm(rasterize({{R.points, palette()[2]}}, spec_for(R.kind, R.points))));
        }
        {
            const Params q = Params::make(4, -3);
            const RootData rd = solve_roots(q);
            const PointCloud R = generate_points(q, auto_depth(q, cap / 8), rd);
            std::vector<std::vector<Point2>> tiles;
            for (const Translate& t : tiling_patch(q, rd, 2.5)) tiles.push_back(shifted(R.points, t.shift));
            std::vector<Layer> layers;
            for (std::size_t i = 0; i < tiles.size(); ++i) layers.push_back({tiles[i], palette()[i % 8]});
            CanvasSpec spec;
            spec.viewport = Viewport{-1.6, -1.6, 1.6, 1.6};
            emit("3", "fig03_tiling_4_-3.ppm", "lattice tiling by R_{4,-3}", to_ppm(rasterize(layers, spec)));
        }
        emit("6", "fig06_neighbors_8_-7.ppm",
             std::string("R_{8,-7} (black) and its neighbors") + stretched(solve_roots(Params::make(8, -7)).kind),
             neighbor_figure(Params::make(8, -7), black, {}));

        const CurveContext cc = curve_context();
        std::vector<Point2> marks;
        for (const TriplePoint& t : triple_points()) {
            const Complex z = embed(t.value, ifs_roots().alpha);
            const auto m = marker({z.real(), z.imag()}, 6 * cc.pixel);
            marks.insert(marks.end(), m.begin(), m.end());
        }
        emit("7", "fig07_triple_points.ppm", "the six triple points (black discs) on R (grey) and its neighbors",
             neighbor_figure(p, grey, marks));

        const PointCloud R = generate_points(p, auto_depth(p, cap), ifs_roots());
        const double eps = 1e-4 * curve_diameter();
        const std::vector<Point2> A = attractor(curve_maps(eps), 6, curve_z0(), eps);
        emit("8", "fig08_curve_1-2alpha.ppm", "R (grey), R_{1-2alpha} from the automaton (blue) and the f/g attractor (red)",
             to_ppm(rasterize({{R.points, grey}, {cc.curve, palette()[0]}, {A, palette()[3]}})));

        SvgStyle st;
        st.stroke = palette()[3];
        st.viewport = fit_viewport(cc.curve, st.width, st.height);
        const PolygonalApprox phi1 = parametrize_phi(1, eps), phi2 = parametrize_phi(2, eps);
        emit("9", "fig09_phi1.svg", "phi_1", svg_polyline(phi1.vertices, st));
        emit("9", "fig09_phi2.svg", "phi_2", svg_polyline(phi2.vertices, st));
        {
            // zoom on [f0(y0), f1(y0)]
            const auto f = f_family(2);
            const FieldElem a = f[0].apply(curve_y0(), p), b = f[1].apply(curve_y0(), p);
            const Complex za = embed(a, ifs_roots().alpha), zb = embed(b, ifs_roots().alpha);
            const std::vector<Point2> ends{{za.real(), za.imag()}, {zb.real(), zb.imag()}};
            SvgStyle zoom = st;
            zoom.viewport = fit_viewport(ends, zoom.width, zoom.height, 0.25);
            emit("10", "fig10_phi2_zoom.svg", "phi_2 near [f0(y0), f1(y0)]", svg_polyline(phi2.vertices, zoom));
        }
        {
            std::vector<std::vector<Point2>> curves;
            for (const RingElem& u : curve_translates()) curves.push_back(boundary_curve(u, 18).samples);
            std::vector<Layer> layers;
            for (std::size_t i = 0; i < curves.size(); ++i) layers.push_back({curves[i], palette()[i % 8]});
            emit("11", "fig11_boundary.ppm", "the six curves R ∩ (R+u) forming the boundary", to_ppm(rasterize(layers)));
        }
    }
    json fj = json::array();
    for (const Figure& f : figs) fj.push_back({{"figure", f.figure}, {"file", f.file}, {"description", f.description}});
    r.outputs = {{"figures", fj}};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rauzy fractals of x^3 - a x^2 - b x - 1 with -a+1 <= b <= -2"};
    app.require_subcommand(1);
    Common c;
    std::function<Report()> run;

    auto common = [&](CLI::App* sub, bool with_params = true) {
        if (with_params) {
            sub->add_option("--a", c.a, "a >= 3")->capture_default_str();
            sub->add_option("--b", c.b, "-a+1 <= b <= -2")->capture_default_str();
        }
        sub->add_option("--out-dir", c.out_dir, "directory for every output")->capture_default_str();
        sub->add_option("--json", c.report_path, "report path (default <out-dir>/<command>.json)")->expected(0, 1);
    };

    std::string n_str;
    auto* expand = app.add_subcommand("expand", "greedy digits of n");
    common(expand);
    expand->add_option("n,--n", n_str, "nonnegative integer")->required();
    expand->callback([&] { run = [&] { return cmd_expand(c, n_str); }; });

    int N = 10;
    auto* tseq = app.add_subcommand("tseq", "T_0..T_N");
    common(tseq);
    tseq->add_option("N,--N", N)->capture_default_str();
    tseq->callback([&] { run = [&] { return cmd_tseq(c, N); }; });

    std::string digits;
    auto* adm = app.add_subcommand("admissible", "check a digit string (most significant first)");
    common(adm);
    adm->add_option("digits,--digits", digits, "e.g. 2011 or 2,0,1,1")->required();
    adm->callback([&] { run = [&] { return cmd_admissible(c, digits); }; });

    auto* roots = app.add_subcommand("roots", "roots of the cubic");
    common(roots);
    roots->callback([&] { run = [&] { return cmd_roots(c); }; });

    int depth = 14;
    std::string points_out, tiling_out, ifs_out, param_out;
    auto* points = app.add_subcommand("points", "point cloud of R");
    common(points);
    points->add_option("--depth", depth)->capture_default_str();
    points->add_option("--out", points_out, ".json or .ppm")->default_val("cloud.ppm");
    points->callback([&] { run = [&] { return cmd_points(c, depth, points_out); }; });

    double radius = 1.5;
    std::size_t samples = 10000;
    auto* tiling = app.add_subcommand("tiling", "lattice tiling check and patch image");
    common(tiling);
    tiling->add_option("--radius", radius)->capture_default_str();
    tiling->add_option("--depth", depth)->capture_default_str();
    tiling->add_option("--samples", samples)->capture_default_str();
    tiling->add_option("--out", tiling_out)->default_val("tiling.ppm");
    tiling->callback([&] { run = [&] { return cmd_tiling(c, radius, depth, samples, tiling_out); }; });

    bool strict = false, loose = false, beta = false;
    std::string dot;
    auto* aut = app.add_subcommand("automaton", "trimmed boundary automaton");
    common(aut);
    auto* s_opt = aut->add_flag("--strict-language", strict, "digit streams restricted to admissible words (default)");
    aut->add_flag("--loose-language", loose, "any digits 0..a-1")->excludes(s_opt);
    aut->add_flag("--beta-filter", beta, "keep only |S(beta)| < beta^3");
    aut->add_option("--dot", dot, "write Graphviz text");
    aut->callback([&] { run = [&] { return cmd_automaton(c, loose, beta, dot); }; });

    auto* nb = app.add_subcommand("neighbors", "neighbor set H");
    common(nb);
    auto* s2 = nb->add_flag("--strict-language", strict);
    nb->add_flag("--loose-language", loose)->excludes(s2);
    nb->callback([&] { run = [&] { return cmd_neighbors(c, loose); }; });

    auto* disk = app.add_subcommand("disk", "sufficient criterion for R not being a disk");
    common(disk);
    disk->callback([&] { run = [&] { return cmd_disk(c); }; });

    std::string family = "fg";
    double eps_rel = 1e-4;
    int ifs_depth = 6, kmax = -1;
    auto* ifs = app.add_subcommand("ifs", "attractor of the (3,-2) boundary maps");
    common(ifs);
    ifs->add_option("--family", family, "f, g, fg or cover")->capture_default_str();
    ifs->add_option("--depth", ifs_depth)->capture_default_str();
    ifs->add_option("--eps", eps_rel, "branch cutoff relative to |z0-y0|")->capture_default_str();
    ifs->add_option("--kmax", kmax, "family size for f, g or cover (default: from --eps)");
    ifs->add_option("--out", ifs_out, ".svg or .json")->default_val("ifs.svg");
    ifs->callback([&] { run = [&] { return cmd_ifs(c, family, ifs_depth, eps_rel, kmax, ifs_out); }; });

    int level = 2;
    auto* param = app.add_subcommand("param", "polygonal approximation phi_n of R_{1-2alpha}");
    common(param);
    param->add_option("--level", level)->capture_default_str();
    param->add_option("--eps", eps_rel)->capture_default_str();
    param->add_option("--out", param_out, ".svg");
    param->callback([&] { run = [&] { return cmd_param(c, level, eps_rel, param_out); }; });

    auto* verify = app.add_subcommand("verify-lemmas", "every exact identity; fails on any violation");
    common(verify, false);
    verify->callback([&] { run = [&] { return cmd_verify(); }; });

    std::size_t cap = 2'000'000;
    auto* all = app.add_subcommand("render-all", "the figure set");
    common(all);
    all->add_option("--point-cap", cap, "largest cloud per figure")->capture_default_str();
    all->callback([&] { run = [&] { return cmd_render_all(c, cap); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string name;
    for (CLI::App* s : app.get_subcommands()) name = s->get_name();
    try {
        const Report r = run();
        const json j = r.to_json();
        const fs::path path = c.report_path.empty() ? fs::path(c.out_dir) / (name + ".json") : under(c, c.report_path);
        write_file(path, j.dump(2) + "\n");
        std::cout << j.dump(2) << "\n";
        if (!r.ok()) {
            for (const Check& ch : r.checks)
                if (!ch.pass) std::cerr << "check failed: " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
            return 3;
        }
        return 0;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise RAUZY_BUDGET or lower the depth)\n";
        return 2;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory (lower the depth)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
