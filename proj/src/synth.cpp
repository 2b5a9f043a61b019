#include "iap/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "iap/rng.hpp"

namespace iap {

namespace {

constexpr double kPi = 3.14159265358979323846;

double interp_signature(const std::vector<double>& control, int band, int bands) {
    if (control.size() == 1 || bands == 1) return control.front();
    const double t = static_cast<double>(band) / (bands - 1) * (control.size() - 1);
    const std::size_t i = std::min(control.size() - 2, static_cast<std::size_t>(t));
    const double f = t - static_cast<double>(i);
    return control[i] * (1.0 - f) + control[i + 1] * f;
}

}  // namespace

std::vector<std::pair<int, int>> shape_pixels(const ShapeSpec& shape) {
    std::vector<std::pair<int, int>> out;
    if (shape.kind == ShapeSpec::Kind::Rect) {
        for (int y = shape.y; y < shape.y + shape.h; ++y)
            for (int x = shape.x; x < shape.x + shape.w; ++x) out.emplace_back(x, y);
    } else {
        const int r = shape.w;
        for (int y = shape.y - r; y <= shape.y + r; ++y)
            for (int x = shape.x - r; x <= shape.x + r; ++x) {
                const double dx = x - shape.x, dy = y - shape.y;
                if (dx * dx + dy * dy <= static_cast<double>(r) * r + 1e-9)
                    out.emplace_back(x, y);
            }
    }
    return out;
}

std::vector<std::pair<int, int>> transform_pixels(const std::vector<std::pair<int, int>>& pixels,
                                                  const TransformSpec& t) {
    double cx = 0, cy = 0;
    for (auto [x, y] : pixels) {
        cx += x;
        cy += y;
    }
    cx /= static_cast<double>(pixels.size());
    cy /= static_cast<double>(pixels.size());

    const double g = t.rot_deg * kPi / 180.0;
    const double c = std::cos(g), s = std::sin(g);
    std::vector<std::pair<int, int>> out;
    out.reserve(pixels.size());
    for (auto [x, y] : pixels) {
        const double rx = (x - cx) * c - (y - cy) * s;
        const double ry = (x - cx) * s + (y - cy) * c;
        out.emplace_back(static_cast<int>(std::lround(cx + rx)) + t.dx,
                         static_cast<int>(std::lround(cy + ry)) + t.dy);
    }
    // Rounding can alias distinct sources to one target for odd angles.
    std::sort(out.begin(), out.end(),
              [](auto a, auto b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    return out;
}

SyntheticScene generate_synthetic(const SceneSpec& spec, std::uint64_t seed) {
    if (spec.width < 1 || spec.height < 1 || spec.bands < 1)
        throw ValidationError("scene dimensions must be positive");
    if (spec.classes < 1) throw ValidationError("scene needs at least one class");
    if (static_cast<std::size_t>(spec.classes) > spec.signatures.size())
        throw ValidationError("scene declares " + std::to_string(spec.classes) +
                              " classes but only " + std::to_string(spec.signatures.size()) +
                              " signatures");
    for (const auto& sig : spec.signatures)
        if (sig.empty()) throw ValidationError("empty spectral signature");
    if (!spec.textures.empty() && spec.textures.size() < static_cast<std::size_t>(spec.classes))
        throw ValidationError("textures must be absent or given for every class");

    const int w = spec.width, h = spec.height, d = spec.bands;
    SyntheticScene scene;
    scene.cube.width = w;
    scene.cube.height = h;
    scene.cube.bands = d;
    scene.cube.data.assign(static_cast<std::size_t>(w) * h * d, 0.0);
    scene.labels.width = w;
    scene.labels.height = h;
    scene.labels.labels.assign(static_cast<std::size_t>(w) * h, 0);

    auto clean_value = [&](int cls, int x, int y, int b) {
        double v = interp_signature(spec.signatures[cls - 1], b, d);
        if (!spec.textures.empty()) {
            const ClassTexture& tex = spec.textures[cls - 1];
            if (tex.amplitude != 0.0)
                v *= 1.0 + tex.amplitude *
                                std::sin(2.0 * kPi * (tex.freq_x * x + tex.freq_y * y));
        }
        return v;
    };

    for (int b = 0; b < d; ++b) {
        double* plane = scene.cube.band(b);
        std::fill(plane, plane + scene.cube.pixels(), spec.background);
    }

    std::set<std::size_t> occupied;
    auto claim = [&](int x, int y, int cls, const char* what) -> std::size_t {
        if (x < 0 || y < 0 || x >= w || y >= h)
            throw ValidationError(std::string(what) + " exceeds image bounds at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
        const std::size_t p = static_cast<std::size_t>(y) * w + x;
        if (!occupied.insert(p).second)
            throw ValidationError(std::string(what) + " overlaps another shape at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
        scene.labels.labels[p] = cls;
        return p;
    };

    // Originals become training samples.
    std::vector<std::vector<std::pair<int, int>>> placed(spec.shapes.size());
    for (std::size_t si = 0; si < spec.shapes.size(); ++si) {
        const ShapeSpec& shape = spec.shapes[si];
        if (shape.class_id < 1 || shape.class_id > spec.classes)
            throw ValidationError("shape class id out of range");
        placed[si] = shape_pixels(shape);
        for (auto [x, y] : placed[si]) {
            const std::size_t p = claim(x, y, shape.class_id, "shape");
            scene.samples.train.emplace_back(p, shape.class_id);
            for (int b = 0; b < d; ++b)
                scene.cube.band(b)[p] = clean_value(shape.class_id, x, y, b);
        }
    }

    // Duplicates copy the source's clean content through the rigid map and
    // become test samples.
    for (const TransformSpec& t : spec.transforms) {
        if (t.shape_index < 0 || t.shape_index >= static_cast<int>(spec.shapes.size()))
            throw ValidationError("transform references unknown shape");
        const ShapeSpec& shape = spec.shapes[t.shape_index];
        const auto& src = placed[t.shape_index];
        const auto dst = transform_pixels(src, t);
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            if (!seen.insert(dst[i]).second) continue;  // rounding alias
            auto [x, y] = dst[i];
            const std::size_t p = claim(x, y, shape.class_id, "transformed shape");
            scene.samples.test.emplace_back(p, shape.class_id);
        }
        // Copy source values so 90-degree duplicates are exact rotated copies.
        double cx = 0, cy = 0;
        for (auto [x, y] : src) {
            cx += x;
            cy += y;
        }
        cx /= static_cast<double>(src.size());
        cy /= static_cast<double>(src.size());
        const double g = t.rot_deg * kPi / 180.0;
        const double c = std::cos(g), s = std::sin(g);
        for (auto [x, y] : src) {
            const int tx = static_cast<int>(std::lround(cx + (x - cx) * c - (y - cy) * s)) + t.dx;
            const int ty = static_cast<int>(std::lround(cy + (x - cx) * s + (y - cy) * c)) + t.dy;
            for (int b = 0; b < d; ++b)
                scene.cube.band(b)[static_cast<std::size_t>(ty) * w + tx] =
                    clean_value(shape.class_id, x, y, b);
        }
    }

    if (spec.noise > 0.0) {
        Rng rng(substream_seed(seed, "synth"));
        for (int b = 0; b < d; ++b) {
            double* plane = scene.cube.band(b);
            for (std::size_t p = 0; p < scene.cube.pixels(); ++p)
                plane[p] += spec.noise * rng.next_normal();
        }
    }

    // Contiguity bookkeeping: class c was authored as c.
    for (int c = 1; c <= spec.classes; ++c) scene.labels.original_ids.push_back(c);

    std::sort(scene.samples.train.begin(), scene.samples.train.end());
    std::sort(scene.samples.test.begin(), scene.samples.test.end());
    return scene;
}

}  // namespace iap
