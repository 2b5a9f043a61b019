#ifndef IAP_TYPES_HPP
#define IAP_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iap {

// Error categories map onto CLI exit codes (1/2/3).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

/// Row-major 2-D raster. data[y*width + x].
template <typename T>
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Plane() = default;
    Plane(int w, int h, T fill = T{})
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    T& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return data.size(); }
};

using RealPlane = Plane<double>;
using ComplexPlane = Plane<Complex>;

/// W×H×D raster stored band-major: band b occupies data[b*W*H .. (b+1)*W*H).
struct HyperCube {
    int width = 0;
    int height = 0;
    int bands = 0;
    std::vector<double> data;
    std::vector<double> wavelengths;  // optional; empty or one entry per band

    std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }

    double* band(int b) { return data.data() + static_cast<std::size_t>(b) * pixels(); }
    const double* band(int b) const { return data.data() + static_cast<std::size_t>(b) * pixels(); }

    double at(int x, int y, int b) const {
        return band(b)[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int x, int y, int b) {
        return band(b)[static_cast<std::size_t>(y) * width + x];
    }

    RealPlane band_plane(int b) const {
        RealPlane p(width, height);
        const double* src = band(b);
        std::copy(src, src + pixels(), p.data.begin());
        return p;
    }

    void validate() const;
};

/// Integer class raster; 0 means unlabeled. Class ids are contiguous 1..C.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<int> labels;
    // original_ids[c-1] is the source id that was re-indexed to class c.
    std::vector<int> original_ids;

    int class_count() const { return static_cast<int>(original_ids.size()); }
    std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
};

/// Train/test split over pixel indices (row-major).
struct SampleSet {
    std::vector<std::pair<std::size_t, int>> train;
    std::vector<std::pair<std::size_t, int>> test;
};

enum class Stage { Osf, Rcf, Sif, Fif, Iap, Reduced };

std::string to_string(Stage s);
Stage stage_from_string(const std::string& s);

/// N×F row-per-pixel feature table.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major
    Stage stage = Stage::Osf;
    std::string config_hash;

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t r, std::size_t c, Stage st = Stage::Osf)
        : rows(r), cols(c), values(r * c, 0.0), stage(st) {}

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {values.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }

    bool empty() const { return rows == 0 || cols == 0; }
};

bool all_finite(std::span<const double> v);

}  // namespace iap

#endif
