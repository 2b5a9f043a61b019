#ifndef IAP_SYNTH_HPP
#define IAP_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "iap/types.hpp"

namespace iap {

struct ShapeSpec {
    enum class Kind { Rect, Disc };
    int class_id = 1;
    Kind kind = Kind::Rect;
    int x = 0, y = 0;  // top-left (rect) or center (disc)
    int w = 1, h = 1;  // disc uses w as radius
};

/// Rigid copy of a shape: rotate its pixel set about the shape centroid,
/// then shift. Rotations by multiples of 90 degrees are exact permutations.
struct TransformSpec {
    int shape_index = 0;
    int dx = 0, dy = 0;
    double rot_deg = 0.0;
};

/// Optional per-class multiplicative grating so classes can share spectra
/// while differing in spatial texture.
struct ClassTexture {
    double amplitude = 0.0;
    double freq_x = 0.0;  // cycles per pixel
    double freq_y = 0.0;
};

struct SceneSpec {
    int width = 0, height = 0, bands = 0;
    int classes = 0;
    double background = 0.25;
    double noise = 0.0;  // gaussian sigma added to every sample
    // Per class: spectral control points, linearly interpolated over bands.
    std::vector<std::vector<double>> signatures;
    std::vector<ClassTexture> textures;  // empty or one per class
    std::vector<ShapeSpec> shapes;
    std::vector<TransformSpec> transforms;
};

struct SyntheticScene {
    HyperCube cube;
    LabelMap labels;
    SampleSet samples;  // untransformed shapes -> train, duplicates -> test
};

/// Deterministic for a fixed (spec, seed) pair.
SyntheticScene generate_synthetic(const SceneSpec& spec, std::uint64_t seed);

/// Pixel set of a shape template, row-major order.
std::vector<std::pair<int, int>> shape_pixels(const ShapeSpec& shape);

/// Integer-coordinate rigid transform of a pixel set about its centroid.
std::vector<std::pair<int, int>> transform_pixels(const std::vector<std::pair<int, int>>& pixels,
                                                  const TransformSpec& t);

}  // namespace iap

#endif
