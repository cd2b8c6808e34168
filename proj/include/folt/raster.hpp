#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace folt {

/// Row-major 2-D raster of samples. T is uint8_t for intensity images and
/// binary-ish data, float for distance/saliency fields.
template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> values;

    Grid() = default;
    Grid(int w, int h, T fill = T{}) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Grid: dimensions must be >= 1");
        values.assign(static_cast<size_t>(w) * h, fill);
    }
    Grid(int w, int h, std::vector<T> data) : width(w), height(h), values(std::move(data)) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Grid: dimensions must be >= 1");
        if (values.size() != static_cast<size_t>(w) * h)
            throw std::invalid_argument("Grid: data size does not match dimensions");
    }

    T& at(int row, int col) { return values[static_cast<size_t>(row) * width + col]; }
    const T& at(int row, int col) const { return values[static_cast<size_t>(row) * width + col]; }

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    size_t size() const { return values.size(); }
};

using GridU8 = Grid<uint8_t>;
using GridF = Grid<float>;

/// Interleaved 8-bit RGB image (decode boundary type; the pipeline itself
/// runs on single-channel grids).
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;  // 3 * width * height, row-major, R G B

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("ColorImage: dimensions must be >= 1");
        rgb.assign(static_cast<size_t>(w) * h * 3, 0);
    }
};

/// Integer pixel rectangle, half-open in neither sense: covers
/// [x0, x0+w) x [y0, y0+h).
struct Region {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    bool valid() const { return w >= 1 && h >= 1; }
    bool bound_to(int grid_w, int grid_h) const {
        return valid() && x0 >= 0 && y0 >= 0 && x0 + w <= grid_w && y0 + h <= grid_h;
    }
    bool contains(int row, int col) const {
        return col >= x0 && col < x0 + w && row >= y0 && row < y0 + h;
    }
    int area() const { return w * h; }
};

/// Real-valued box in center/size form. On-disk ground truth uses the
/// top-left convention; conversion happens only at the parse/serialize
/// boundary.
struct BoundingBox {
    double cx = 0;
    double cy = 0;
    double w = 0;
    double h = 0;

    static BoundingBox from_top_left(double x, double y, double w, double h) {
        return {x + w / 2.0, y + h / 2.0, w, h};
    }
    double x0() const { return cx - w / 2.0; }
    double y0() const { return cy - h / 2.0; }
    bool valid() const { return w > 0 && h > 0; }
};

/// Maps working-resolution coordinates back to the original resolution.
struct ScaleTransform {
    double factor = 1.0;

    BoundingBox apply(const BoundingBox& b) const {
        return {b.cx * factor, b.cy * factor, b.w * factor, b.h * factor};
    }
};

/// Standard luminance conversion, rounded to nearest and clamped.
GridU8 to_luma(const GridU8& r, const GridU8& g, const GridU8& b);
GridU8 to_luma(const ColorImage& image);

/// Downscale so the larger dimension equals max_dim (bilinear); images that
/// already fit are returned unchanged with factor 1. The minor dimension is
/// rounded to nearest, minimum 1.
std::pair<GridU8, ScaleTransform> resize_max_dim(const GridU8& image, int max_dim);

/// Affine min-max map of the in-region samples to [0, 255]. A constant
/// region maps to all-zero; pixels outside the region map to 0.
GridU8 normalize_to_u8(const GridF& grid, const Region& region);

/// Inflate the box by delta*w / delta*h per side, round outward to integer
/// pixels and clip to the grid. Never returns an empty region.
Region expand_region(const BoundingBox& box, double delta, int grid_w, int grid_h);

/// Clip a box so it lies inside [0, w] x [0, h], keeping sides >= min_side.
BoundingBox clip_box(const BoundingBox& box, double bound_w, double bound_h,
                     double min_side = 1.0);

}  // namespace folt
