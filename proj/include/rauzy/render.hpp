#pragma once

#include "rauzy/boundary.hpp"
#include "rauzy/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TooFewVertices : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(Rgb, Rgb) = default;
};

// Fixed palette; layer i of a tiling gets palette()[i % 8].
const std::array<Rgb, 8>& palette();
std::string hex(Rgb c);

struct Layer {
    std::span<const Point2> points;
    Rgb color;
};

struct CanvasSpec {
    int width = 512;
    int height = 512;
    std::optional<Viewport> viewport;  // fitted to all layers when empty
    double margin = 0.05;
    Rgb background{255, 255, 255};
};

struct Canvas {
    int width = 0;
    int height = 0;
    Viewport viewport;
    Rgb background;
    std::vector<Rgb> pixels;  // row-major, top row first

    // Pixels differing from the background.
    std::size_t painted() const;
    Rgb at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

// Pixel containing p, y axis pointing up; nullopt outside the canvas.
std::optional<std::pair<int, int>> pixel_of(Point2 p, const Viewport& vp, int width, int height);

// One pixel per point, later layers on top. Throws EmptyInput if no layer has points.
Canvas rasterize(const std::vector<Layer>& layers, const CanvasSpec& spec = {});

// Binary P6, 8 bits per channel.
std::string to_ppm(const Canvas& c);

struct SvgStyle {
    int width = 512;
    int height = 512;
    std::optional<Viewport> viewport;
    double margin = 0.05;
    Rgb stroke{0, 0, 0};
    double stroke_px = 1.0;
    bool closed = false;
};

// Single-path SVG 1.1 document; plane coordinates with y negated, rounded to 1e-6.
// Throws TooFewVertices below two vertices.
std::string svg_polyline(std::span<const Point2> vertices, const SvgStyle& style = {});

// Point set as a single path of one-pixel squares, one per occupied pixel.
std::string svg_points(std::span<const Point2> points, const SvgStyle& style = {});

// Graphviz text of the automaton, unchanged.
inline std::string render_dot(const DiffAutomaton& aut) { return export_dot(aut); }

}  // namespace rauzy
