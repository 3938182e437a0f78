#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rauzy {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 u, Point2 v) { return {u.x + v.x, u.y + v.y}; }
    friend Point2 operator-(Point2 u, Point2 v) { return {u.x - v.x, u.y - v.y}; }
    friend bool operator==(Point2, Point2) = default;
};

double distance(Point2 u, Point2 v);

// Axis-aligned rectangle of the embedding plane.
struct Viewport {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

// Bounding box grown by `margin` (fraction of the extent) on each side, then
// widened to the aspect ratio of a width x height canvas. A degenerate box gets
// unit extent around its center.
Viewport fit_viewport(std::span<const Point2> pts, int width, int height, double margin = 0.05);

// Pixel side of a width x height canvas over vp (square pixels assumed).
inline double pixel_size(const Viewport& vp, int width) { return vp.width() / width; }

}  // namespace rauzy
