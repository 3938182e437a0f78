#include "rauzy/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace rauzy {

namespace {

std::string coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

Viewport fit_all(const std::vector<Layer>& layers, const CanvasSpec& spec) {
    std::vector<Point2> all;
    for (const Layer& l : layers) all.insert(all.end(), l.points.begin(), l.points.end());
    return fit_viewport(all, spec.width, spec.height, spec.margin);
}

std::string svg_header(const Viewport& vp, const SvgStyle& st) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(st.width) + "\" height=\"" + std::to_string(st.height) + "\" viewBox=\"" + coord(vp.x0) + " " +
           coord(-vp.y1) + " " + coord(vp.width()) + " " + coord(vp.height()) + "\">\n";
}

}  // namespace

const std::array<Rgb, 8>& palette() {
    static const std::array<Rgb, 8> p{{
        {31, 119, 180},
        {255, 127, 14},
        {44, 160, 44},
        {214, 39, 40},
        {148, 103, 189},
        {140, 86, 75},
        {227, 119, 194},
        {23, 190, 207},
    }};
    return p;
}

std::string hex(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::size_t Canvas::painted() const {
    std::size_t n = 0;
    for (Rgb p : pixels) n += !(p == background);
    return n;
}

std::optional<std::pair<int, int>> pixel_of(Point2 p, const Viewport& vp, int width, int height) {
    const double fx = (p.x - vp.x0) / vp.width() * width;
    const double fy = (vp.y1 - p.y) / vp.height() * height;
    if (!(fx >= 0 && fy >= 0 && fx <= width && fy <= height)) return std::nullopt;
    const int x = std::min(static_cast<int>(fx), width - 1);
    const int y = std::min(static_cast<int>(fy), height - 1);
    return std::pair{x, y};
}

Canvas rasterize(const std::vector<Layer>& layers, const CanvasSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) throw std::invalid_argument("rasterize: canvas must be nonempty");
    bool any = false;
    for (const Layer& l : layers) any = any || !l.points.empty();
    if (!any) throw EmptyInput("rasterize: nothing to draw");
    Canvas c;
    c.width = spec.width;
    c.height = spec.height;
    c.background = spec.background;
    c.viewport = spec.viewport ? *spec.viewport : fit_all(layers, spec);
    c.pixels.assign(static_cast<std::size_t>(c.width) * c.height, spec.background);
    for (const Layer& l : layers)
        for (Point2 p : l.points)
            if (auto px = pixel_of(p, c.viewport, c.width, c.height))
                c.pixels[static_cast<std::size_t>(px->second) * c.width + px->first] = l.color;
    return c;
}

std::string to_ppm(const Canvas& c) {
    std::string out = "P6\n" + std::to_string(c.width) + " " + std::to_string(c.height) + "\n255\n";
    const std::size_t head = out.size();
    out.resize(head + c.pixels.size() * 3);
    for (std::size_t i = 0; i < c.pixels.size(); ++i) {
        out[head + 3 * i] = static_cast<char>(c.pixels[i].r);
        out[head + 3 * i + 1] = static_cast<char>(c.pixels[i].g);
        out[head + 3 * i + 2] = static_cast<char>(c.pixels[i].b);
    }
    return out;
}

std::string svg_polyline(std::span<const Point2> vertices, const SvgStyle& style) {
    if (vertices.size() < 2) throw TooFewVertices("svg_polyline: need at least two vertices");
    const Viewport vp = style.viewport ? *style.viewport : fit_viewport(vertices, style.width, style.height, style.margin);
    std::string d;
    d.reserve(vertices.size() * 24);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += coord(vertices[i].x) + "," + coord(-vertices[i].y);
    }
    if (style.closed) d += " Z";
    return svg_header(vp, style) + "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + hex(style.stroke) +
           "\" stroke-width=\"" + coord(style.stroke_px * pixel_size(vp, style.width)) +
           "\" stroke-linejoin=\"round\"/>\n</svg>\n";
}

std::string svg_points(std::span<const Point2> points, const SvgStyle& style) {
    if (points.empty()) throw EmptyInput("svg_points: nothing to draw");
    const Viewport vp = style.viewport ? *style.viewport : fit_viewport(points, style.width, style.height, style.margin);
    std::set<std::pair<int, int>> cells;
    for (Point2 p : points)
        if (auto px = pixel_of(p, vp, style.width, style.height)) cells.insert(*px);
    const double w = vp.width() / style.width, h = vp.height() / style.height;
    std::string d;
    for (auto [x, y] : cells) {
        if (!d.empty()) d += ' ';
        // upper-left corner in svg coordinates (y down = -plane y)
        d += "M" + coord(vp.x0 + x * w) + "," + coord(-vp.y1 + y * h) + " h" + coord(w) + " v" + coord(h) + " h" +
             coord(-w) + " Z";
    }
    return svg_header(vp, style) + "<path d=\"" + d + "\" fill=\"" + hex(style.stroke) + "\" stroke=\"none\"/>\n</svg>\n";
}

}  // namespace rauzy
