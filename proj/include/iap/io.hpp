#ifndef IAP_IO_HPP
#define IAP_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "iap/types.hpp"

namespace iap {

// Raster element type codes used in the text headers (ENVI-style numbering).
// Cubes accept f32/f64/u16; label rasters are i32.
enum DataType : int {
    kInt32 = 3,
    kFloat32 = 4,
    kFloat64 = 5,
    kUint16 = 12,
};

struct RasterHeader {
    int samples = 0;   // width
    int lines = 0;     // height
    int bands = 0;
    std::string interleave;  // bsq | bil | bip
    int data_type = kFloat64;
    std::vector<double> wavelengths;
};

RasterHeader read_raster_header(const std::filesystem::path& header_path);
void write_raster_header(const RasterHeader& h, const std::filesystem::path& header_path);

/// Loads a cube from a header/raw pair into canonical band-major layout,
/// whatever the source interleave.
HyperCube load_cube(const std::filesystem::path& header_path,
                    const std::filesystem::path& raw_path);

/// Writes canonical BSQ. Round-trips bit-exactly for float64 sources.
void save_cube(const HyperCube& cube, const std::filesystem::path& header_path,
               const std::filesystem::path& raw_path, int data_type = kFloat64);

/// Loads an int32 single-band raster. 0 stays unlabeled; other ids are
/// re-indexed contiguously (mapping reported in LabelMap::original_ids).
LabelMap load_labels(const std::filesystem::path& header_path,
                     const std::filesystem::path& raw_path);

void save_labels(const LabelMap& labels, const std::filesystem::path& header_path,
                 const std::filesystem::path& raw_path);

/// Writes any int raster (e.g. superpixel ids or predictions) in the label
/// raster convention without re-indexing.
void save_int_raster(const std::vector<int>& values, int width, int height,
                     const std::filesystem::path& header_path,
                     const std::filesystem::path& raw_path);
std::vector<int> load_int_raster(const std::filesystem::path& header_path,
                                 const std::filesystem::path& raw_path,
                                 int* width = nullptr, int* height = nullptr);

/// Train/test manifest: text lines "train|test <pixel_index> <class_id>".
SampleSet load_samples(const std::filesystem::path& path);
void save_samples(const SampleSet& samples, const std::filesystem::path& path);

/// Feature matrices persist as a text sidecar (rows/cols/stage/config_hash/
/// payload) plus a raw little-endian float64 row-major payload file.
void save_features(const FeatureMatrix& fm, const std::filesystem::path& sidecar_path);
FeatureMatrix load_features(const std::filesystem::path& sidecar_path);

/// Reshape a cube into an N×D matrix, one pixel per row (stage OSF).
FeatureMatrix to_feature_matrix(const HyperCube& cube);

/// write-temp-then-rename so failed runs leave no partial outputs.
void atomic_write(const std::filesystem::path& path, const void* bytes, std::size_t n);
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace iap

#endif
