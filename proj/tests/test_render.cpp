#include <doctest.h>

#include "rauzy/render.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>

using namespace rauzy;

namespace {

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json golden() {
    std::ifstream in(std::string(RAUZY_GOLDEN_DIR) + "/render.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

std::size_t count(const std::string& s, const std::string& sub) {
    std::size_t n = 0;
    for (auto p = s.find(sub); p != std::string::npos; p = s.find(sub, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("single point lands on one pixel") {
    const std::vector<Point2> one{{0.25, -0.75}};
    const Canvas c = rasterize({{one, palette()[3]}});
    CHECK(c.painted() == 1);
    CHECK(c.at(256, 256) == palette()[3]);
    CHECK(c.at(255, 256) == Rgb{255, 255, 255});
}

TEST_CASE("pixel mapping") {
    const Viewport vp{0, 0, 2, 1};
    CHECK(pixel_of({0, 0}, vp, 4, 2) == std::pair{0, 1});
    CHECK(pixel_of({2, 1}, vp, 4, 2) == std::pair{3, 0});
    CHECK(pixel_of({1.1, 0.9}, vp, 4, 2) == std::pair{2, 0});
    CHECK_FALSE(pixel_of({-0.1, 0.5}, vp, 4, 2).has_value());
    CHECK_FALSE(pixel_of({0.5, 1.5}, vp, 4, 2).has_value());
}

TEST_CASE("ppm layout and layer order") {
    const std::vector<Point2> a{{0, 0}, {1, 1}}, b{{1, 1}};
    CanvasSpec spec;
    spec.width = 3;
    spec.height = 2;
    spec.viewport = Viewport{0, 0, 1.5, 1};
    const Canvas c = rasterize({{a, palette()[0]}, {b, palette()[1]}}, spec);
    CHECK(c.at(0, 1) == palette()[0]);
    CHECK(c.at(2, 0) == palette()[1]);
    const std::string ppm = to_ppm(c);
    const std::string head = "P6\n3 2\n255\n";
    REQUIRE(ppm.size() == head.size() + 3 * 6);
    CHECK(ppm.substr(0, head.size()) == head);
    // bottom-left pixel is row 1, column 0
    const std::size_t off = head.size() + 3 * 3;
    CHECK(static_cast<unsigned char>(ppm[off]) == palette()[0].r);
    CHECK(static_cast<unsigned char>(ppm[off + 2]) == palette()[0].b);
}

TEST_CASE("empty input") {
    CHECK_THROWS_AS(rasterize({}), EmptyInput);
    const std::vector<Point2> none;
    CHECK_THROWS_AS(rasterize({{none, palette()[0]}}), EmptyInput);
    CHECK_THROWS_AS(svg_points(none), EmptyInput);
}

TEST_CASE("cloud raster against the frozen reference") {
    const nlohmann::json g = golden()["cloud_3_-2_depth14_512"];
    const Params p = Params::make(3, -2);
    const PointCloud R = generate_points(p, 14, solve_roots(p));
    const Canvas c = rasterize({{R.points, palette()[0]}});
    const double frac = static_cast<double>(c.painted()) / (512.0 * 512.0);
    MESSAGE("painted " << c.painted() << " (" << frac << ")");
    CHECK(frac >= g["band"][0].get<double>());
    CHECK(frac <= g["band"][1].get<double>());
    CHECK(c.painted() == g["painted"].get<std::size_t>());
    const std::string ppm = to_ppm(c);
    CHECK(fnv1a(ppm) == g["ppm_fnv1a64"].get<std::string>());
    // deterministic
    CHECK(to_ppm(rasterize({{R.points, palette()[0]}})) == ppm);
}

TEST_CASE("svg polyline") {
    const std::vector<Point2> two{{0, 0}, {1, 0.5}};
    const std::string s = svg_polyline(two);
    CHECK(count(s, "<path") == 1);
    CHECK(s.find("d=\"M0.000000,0.000000 L1.000000,-0.500000\"") != std::string::npos);
    CHECK(s.find(" Z") == std::string::npos);
    CHECK(s.find("version=\"1.1\"") != std::string::npos);
    SvgStyle closed;
    closed.closed = true;
    CHECK(svg_polyline(two, closed).find(" Z\"") != std::string::npos);
    CHECK_THROWS_AS(svg_polyline(std::vector<Point2>{{0, 0}}), TooFewVertices);
    CHECK_THROWS_AS(svg_polyline(std::vector<Point2>{}), TooFewVertices);
    // rounding to 1e-6
    const std::vector<Point2> fine{{1.23456789, -1e-9}, {2, 2}};
    const std::string r = svg_polyline(fine);
    CHECK(r.find("M1.234568,0.000000") != std::string::npos);
}

TEST_CASE("svg vertex count matches the polyline") {
    std::vector<Point2> v;
    for (int i = 0; i < 137; ++i) v.push_back({std::cos(i * 0.1), std::sin(i * 0.07)});
    const std::string s = svg_polyline(v);
    CHECK(count(s, " L") == v.size() - 1);
    CHECK(count(s, "M") == 1);
    const std::regex num(R"(-?\d+\.(\d+))");
    const std::string d = s.substr(s.find(" d=\""));
    for (auto it = std::sregex_iterator(d.begin(), d.begin() + d.find("\" "), num); it != std::sregex_iterator(); ++it)
        CHECK((*it)[1].length() == 6);
}

TEST_CASE("svg points use one square per occupied pixel") {
    const std::vector<Point2> pts{{0, 0}, {0, 0}, {1, 1}, {1e-9, 0}};
    SvgStyle st;
    st.width = st.height = 10;
    st.viewport = Viewport{0, 0, 1, 1};
    const std::string s = svg_points(pts, st);
    CHECK(count(s, "<path") == 1);
    CHECK(count(s, " Z") == 2);
}

TEST_CASE("dot passthrough") {
    const Params p = Params::make(3, -2);
    const DiffAutomaton aut = boundary_automaton(p, solve_roots(p));
    CHECK(render_dot(aut) == export_dot(aut));
}
