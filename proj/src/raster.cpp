#include "folt/raster.hpp"

#include <cmath>

namespace folt {

GridU8 to_luma(const GridU8& r, const GridU8& g, const GridU8& b) {
    if (r.width != g.width || r.width != b.width || r.height != g.height ||
        r.height != b.height)
        throw std::invalid_argument("to_luma: channel dimensions differ");
    GridU8 out(r.width, r.height);
    for (size_t i = 0; i < out.size(); ++i) {
        double y = 0.299 * r.values[i] + 0.587 * g.values[i] + 0.114 * b.values[i];
        long v = std::lround(y);
        out.values[i] = static_cast<uint8_t>(std::clamp<long>(v, 0, 255));
    }
    return out;
}

GridU8 to_luma(const ColorImage& image) {
    GridU8 out(image.width, image.height);
    const uint8_t* p = image.rgb.data();
    for (size_t i = 0; i < out.size(); ++i, p += 3) {
        double y = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        long v = std::lround(y);
        out.values[i] = static_cast<uint8_t>(std::clamp<long>(v, 0, 255));
    }
    return out;
}

namespace {

// Bilinear sample with the half-pixel center convention.
uint8_t sample_bilinear(const GridU8& src, double sx, double sy) {
    sx = std::clamp(sx, 0.0, static_cast<double>(src.width - 1));
    sy = std::clamp(sy, 0.0, static_cast<double>(src.height - 1));
    int x0 = static_cast<int>(sx);
    int y0 = static_cast<int>(sy);
    int x1 = std::min(x0 + 1, src.width - 1);
    int y1 = std::min(y0 + 1, src.height - 1);
    double fx = sx - x0;
    double fy = sy - y0;
    double v = (1 - fy) * ((1 - fx) * src.at(y0, x0) + fx * src.at(y0, x1)) +
               fy * ((1 - fx) * src.at(y1, x0) + fx * src.at(y1, x1));
    long r = std::lround(v);
    return static_cast<uint8_t>(std::clamp<long>(r, 0, 255));
}

}  // namespace

std::pair<GridU8, ScaleTransform> resize_max_dim(const GridU8& image, int max_dim) {
    if (max_dim < 1)
        throw std::invalid_argument("resize_max_dim: max_dim must be >= 1");
    int major = std::max(image.width, image.height);
    if (major <= max_dim)
        return {image, ScaleTransform{1.0}};

    double ratio = static_cast<double>(max_dim) / major;
    int out_w, out_h;
    if (image.width >= image.height) {
        out_w = max_dim;
        out_h = std::max(1, static_cast<int>(std::lround(image.height * ratio)));
    } else {
        out_h = max_dim;
        out_w = std::max(1, static_cast<int>(std::lround(image.width * ratio)));
    }

    GridU8 out(out_w, out_h);
    double sx_scale = static_cast<double>(image.width) / out_w;
    double sy_scale = static_cast<double>(image.height) / out_h;
    for (int y = 0; y < out_h; ++y) {
        double sy = (y + 0.5) * sy_scale - 0.5;
        for (int x = 0; x < out_w; ++x) {
            double sx = (x + 0.5) * sx_scale - 0.5;
            out.at(y, x) = sample_bilinear(image, sx, sy);
        }
    }
    return {std::move(out), ScaleTransform{static_cast<double>(major) / max_dim}};
}

GridU8 normalize_to_u8(const GridF& grid, const Region& region) {
    if (!region.bound_to(grid.width, grid.height))
        throw std::invalid_argument("normalize_to_u8: region not bound to grid");

    float lo = std::numeric_limits<float>::max();
    float hi = std::numeric_limits<float>::lowest();
    for (int r = region.y0; r < region.y0 + region.h; ++r) {
        for (int c = region.x0; c < region.x0 + region.w; ++c) {
            float v = grid.at(r, c);
            if (!std::isfinite(v))
                throw std::domain_error("normalize_to_u8: non-finite sample in region");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    GridU8 out(grid.width, grid.height, 0);
    float range = hi - lo;
    if (range <= 0)
        return out;  // constant region maps to all-zero
    for (int r = region.y0; r < region.y0 + region.h; ++r) {
        for (int c = region.x0; c < region.x0 + region.w; ++c) {
            double t = 255.0 * (grid.at(r, c) - lo) / range;
            out.at(r, c) = static_cast<uint8_t>(std::clamp<long>(std::lround(t), 0, 255));
        }
    }
    return out;
}

Region expand_region(const BoundingBox& box, double delta, int grid_w, int grid_h) {
    if (delta < 0)
        throw std::invalid_argument("expand_region: delta must be >= 0");
    double half_w = box.w * (1.0 + 2.0 * delta) / 2.0;
    double half_h = box.h * (1.0 + 2.0 * delta) / 2.0;
    int x0 = static_cast<int>(std::floor(box.cx - half_w));
    int y0 = static_cast<int>(std::floor(box.cy - half_h));
    int x1 = static_cast<int>(std::ceil(box.cx + half_w));
    int y1 = static_cast<int>(std::ceil(box.cy + half_h));

    x0 = std::clamp(x0, 0, grid_w - 1);
    y0 = std::clamp(y0, 0, grid_h - 1);
    x1 = std::clamp(x1, x0 + 1, grid_w);
    y1 = std::clamp(y1, y0 + 1, grid_h);
    return Region{x0, y0, x1 - x0, y1 - y0};
}

BoundingBox clip_box(const BoundingBox& box, double bound_w, double bound_h,
                     double min_side) {
    double x0 = std::clamp(box.x0(), 0.0, bound_w - min_side);
    double y0 = std::clamp(box.y0(), 0.0, bound_h - min_side);
    double x1 = std::clamp(box.x0() + box.w, x0 + min_side, bound_w);
    double y1 = std::clamp(box.y0() + box.h, y0 + min_side, bound_h);
    return {(x0 + x1) / 2.0, (y0 + y1) / 2.0, x1 - x0, y1 - y0};
}

}  // namespace folt
