#include "iap/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace iap {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// key : value   or   key = value
bool split_kv(const std::string& line, std::string& key, std::string& value) {
    std::size_t pos = line.find_first_of(":=");
    if (pos == std::string::npos) return false;
    key = lower(trim(line.substr(0, pos)));
    value = trim(line.substr(pos + 1));
    return !key.empty();
}

std::vector<double> parse_double_list(const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::size_t element_size(int data_type) {
    switch (data_type) {
        case kInt32: return 4;
        case kFloat32: return 4;
        case kFloat64: return 8;
        case kUint16: return 2;
        default:
            throw ValidationError("unsupported data_type code " + std::to_string(data_type));
    }
}

std::vector<char> read_all_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    in.seekg(0, std::ios::end);
    std::streamoff n = in.tellg();
    in.seekg(0, std::ios::beg);
    std::vector<char> bytes(static_cast<std::size_t>(n));
    if (n > 0) in.read(bytes.data(), n);
    if (!in) throw IoError("read failed on '" + path.string() + "'");
    return bytes;
}

double element_at(const char* bytes, std::size_t i, int data_type) {
    switch (data_type) {
        case kFloat32: {
            float v;
            std::memcpy(&v, bytes + i * 4, 4);
            return static_cast<double>(v);
        }
        case kFloat64: {
            double v;
            std::memcpy(&v, bytes + i * 8, 8);
            return v;
        }
        case kUint16: {
            std::uint16_t v;
            std::memcpy(&v, bytes + i * 2, 2);
            return static_cast<double>(v);
        }
        default:
            throw ValidationError("unsupported cube data_type code " + std::to_string(data_type));
    }
}

}  // namespace

RasterHeader read_raster_header(const fs::path& header_path) {
    std::ifstream in(header_path);
    if (!in) throw IoError("cannot open header '" + header_path.string() + "'");
    RasterHeader h;
    h.interleave.clear();
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::string key, value;
        if (!split_kv(stripped, key, value)) continue;
        if (key == "samples") h.samples = std::stoi(value);
        else if (key == "lines") h.lines = std::stoi(value);
        else if (key == "bands") h.bands = std::stoi(value);
        else if (key == "interleave") h.interleave = lower(value);
        else if (key == "data_type") h.data_type = std::stoi(value);
        else if (key == "wavelengths") h.wavelengths = parse_double_list(value);
    }
    if (h.samples < 1 || h.lines < 1 || h.bands < 1)
        throw ValidationError("header '" + header_path.string() +
                              "' must declare positive samples/lines/bands");
    if (h.interleave != "bsq" && h.interleave != "bil" && h.interleave != "bip")
        throw ValidationError("header '" + header_path.string() +
                              "' has unsupported interleave '" + h.interleave + "'");
    element_size(h.data_type);
    return h;
}

void write_raster_header(const RasterHeader& h, const fs::path& header_path) {
    std::ostringstream out;
    out << "samples = " << h.samples << "\n";
    out << "lines = " << h.lines << "\n";
    out << "bands = " << h.bands << "\n";
    out << "interleave = " << h.interleave << "\n";
    out << "data_type = " << h.data_type << "\n";
    if (!h.wavelengths.empty()) {
        out << "wavelengths = ";
        for (std::size_t i = 0; i < h.wavelengths.size(); ++i) {
            if (i) out << ",";
            out << h.wavelengths[i];
        }
        out << "\n";
    }
    atomic_write_text(header_path, out.str());
}

HyperCube load_cube(const fs::path& header_path, const fs::path& raw_path) {
    RasterHeader h = read_raster_header(header_path);
    if (h.data_type == kInt32)
        throw ValidationError("cube rasters support f32/f64/u16 elements, not i32");
    const std::size_t esz = element_size(h.data_type);
    std::vector<char> bytes = read_all_bytes(raw_path);
    const std::size_t w = h.samples, ht = h.lines, d = h.bands;
    const std::size_t expected = w * ht * d * esz;
    if (bytes.size() != expected)
        throw ValidationError("raw file '" + raw_path.string() + "' holds " +
                              std::to_string(bytes.size()) + " bytes, header implies " +
                              std::to_string(expected));

    HyperCube cube;
    cube.width = h.samples;
    cube.height = h.lines;
    cube.bands = h.bands;
    cube.wavelengths = h.wavelengths;
    cube.data.resize(w * ht * d);

    // Source element index for (x, y, b) under each interleave.
    auto src_index = [&](std::size_t x, std::size_t y, std::size_t b) -> std::size_t {
        if (h.interleave == "bsq") return (b * ht + y) * w + x;
        if (h.interleave == "bil") return (y * d + b) * w + x;
        return (y * w + x) * d + b;  // bip
    };

    for (std::size_t b = 0; b < d; ++b) {
        double* plane = cube.data.data() + b * w * ht;
        for (std::size_t y = 0; y < ht; ++y)
            for (std::size_t x = 0; x < w; ++x)
                plane[y * w + x] = element_at(bytes.data(), src_index(x, y, b), h.data_type);
    }
    if (!all_finite(cube.data))
        throw NumericError("cube '" + raw_path.string() + "' contains non-finite values");
    return cube;
}

void save_cube(const HyperCube& cube, const fs::path& header_path, const fs::path& raw_path,
               int data_type) {
    cube.validate();
    RasterHeader h;
    h.samples = cube.width;
    h.lines = cube.height;
    h.bands = cube.bands;
    h.interleave = "bsq";
    h.data_type = data_type;
    h.wavelengths = cube.wavelengths;

    std::vector<char> bytes;
    if (data_type == kFloat64) {
        bytes.resize(cube.data.size() * 8);
        std::memcpy(bytes.data(), cube.data.data(), bytes.size());
    } else if (data_type == kFloat32) {
        bytes.resize(cube.data.size() * 4);
        for (std::size_t i = 0; i < cube.data.size(); ++i) {
            float v = static_cast<float>(cube.data[i]);
            std::memcpy(bytes.data() + i * 4, &v, 4);
        }
    } else if (data_type == kUint16) {
        bytes.resize(cube.data.size() * 2);
        for (std::size_t i = 0; i < cube.data.size(); ++i) {
            double clamped = std::clamp(cube.data[i], 0.0, 65535.0);
            std::uint16_t v = static_cast<std::uint16_t>(std::lround(clamped));
            std::memcpy(bytes.data() + i * 2, &v, 2);
        }
    } else {
        throw ValidationError("save_cube supports f32/f64/u16 elements");
    }
    write_raster_header(h, header_path);
    atomic_write(raw_path, bytes.data(), bytes.size());
}

LabelMap load_labels(const fs::path& header_path, const fs::path& raw_path) {
    int w = 0, h = 0;
    std::vector<int> raw = load_int_raster(header_path, raw_path, &w, &h);

    std::map<int, int> remap;  // original -> contiguous
    for (int v : raw) {
        if (v < 0) throw ValidationError("label raster contains negative id " + std::to_string(v));
        if (v > 0) remap.emplace(v, 0);
    }
    LabelMap out;
    out.width = w;
    out.height = h;
    int next = 1;
    for (auto& [orig, mapped] : remap) {
        mapped = next++;
        out.original_ids.push_back(orig);
    }
    out.labels.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        out.labels[i] = raw[i] == 0 ? 0 : remap[raw[i]];
    return out;
}

void save_labels(const LabelMap& labels, const fs::path& header_path, const fs::path& raw_path) {
    save_int_raster(labels.labels, labels.width, labels.height, header_path, raw_path);
}

void save_int_raster(const std::vector<int>& values, int width, int height,
                     const fs::path& header_path, const fs::path& raw_path) {
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw ValidationError("raster length does not match dimensions");
    RasterHeader h;
    h.samples = width;
    h.lines = height;
    h.bands = 1;
    h.interleave = "bsq";
    h.data_type = kInt32;
    write_raster_header(h, header_path);
    std::vector<char> bytes(values.size() * 4);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::int32_t v = values[i];
        std::memcpy(bytes.data() + i * 4, &v, 4);
    }
    atomic_write(raw_path, bytes.data(), bytes.size());
}

std::vector<int> load_int_raster(const fs::path& header_path, const fs::path& raw_path,
                                 int* width, int* height) {
    RasterHeader h = read_raster_header(header_path);
    if (h.bands != 1) throw ValidationError("integer rasters must have a single band");
    if (h.data_type != kInt32)
        throw ValidationError("integer rasters use data_type 3 (int32)");
    std::vector<char> bytes = read_all_bytes(raw_path);
    std::size_t n = static_cast<std::size_t>(h.samples) * h.lines;
    if (bytes.size() != n * 4)
        throw ValidationError("raw file '" + raw_path.string() + "' size does not match header");
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int32_t v;
        std::memcpy(&v, bytes.data() + i * 4, 4);
        out[i] = v;
    }
    if (width) *width = h.samples;
    if (height) *height = h.lines;
    return out;
}

SampleSet load_samples(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sample manifest '" + path.string() + "'");
    SampleSet out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::istringstream ss(stripped);
        std::string kind;
        std::size_t pixel;
        int cls;
        if (!(ss >> kind >> pixel >> cls) || (kind != "train" && kind != "test"))
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": expected 'train|test <pixel> <class>'");
        if (cls < 1)
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": class ids start at 1");
        (kind == "train" ? out.train : out.test).emplace_back(pixel, cls);
    }
    return out;
}

void save_samples(const SampleSet& samples, const fs::path& path) {
    std::ostringstream out;
    for (const auto& [pix, cls] : samples.train) out << "train " << pix << " " << cls << "\n";
    for (const auto& [pix, cls] : samples.test) out << "test " << pix << " " << cls << "\n";
    atomic_write_text(path, out.str());
}

void save_features(const FeatureMatrix& fm, const fs::path& sidecar_path) {
    fs::path payload = sidecar_path;
    payload.replace_extension(".f64");
    std::ostringstream out;
    out << "rows = " << fm.rows << "\n";
    out << "cols = " << fm.cols << "\n";
    out << "stage = " << to_string(fm.stage) << "\n";
    out << "config_hash = " << fm.config_hash << "\n";
    out << "payload = " << payload.filename().string() << "\n";
    atomic_write(payload, fm.values.data(), fm.values.size() * sizeof(double));
    atomic_write_text(sidecar_path, out.str());
}

FeatureMatrix load_features(const fs::path& sidecar_path) {
    std::ifstream in(sidecar_path);
    if (!in) throw IoError("cannot open feature sidecar '" + sidecar_path.string() + "'");
    FeatureMatrix fm;
    std::string payload_name;
    std::string line;
    while (std::getline(in, line)) {
        std::string key, value;
        if (!split_kv(trim(line), key, value)) continue;
        if (key == "rows") fm.rows = std::stoull(value);
        else if (key == "cols") fm.cols = std::stoull(value);
        else if (key == "stage") fm.stage = stage_from_string(value);
        else if (key == "config_hash") fm.config_hash = value;
        else if (key == "payload") payload_name = value;
    }
    if (payload_name.empty()) throw ValidationError("sidecar missing payload field");
    fs::path payload = sidecar_path.parent_path() / payload_name;
    std::vector<char> bytes = read_all_bytes(payload);
    if (bytes.size() != fm.rows * fm.cols * sizeof(double))
        throw ValidationError("payload '" + payload.string() + "' size does not match sidecar");
    fm.values.resize(fm.rows * fm.cols);
    std::memcpy(fm.values.data(), bytes.data(), bytes.size());
    return fm;
}

FeatureMatrix to_feature_matrix(const HyperCube& cube) {
    const std::size_t n = cube.pixels();
    const std::size_t d = cube.bands;
    FeatureMatrix fm(n, d, Stage::Osf);
    // Band-major to row-major transpose, blocked for locality.
    constexpr std::size_t kBlock = 256;
#pragma omp parallel for schedule(static)
    for (long long pb = 0; pb < static_cast<long long>((n + kBlock - 1) / kBlock); ++pb) {
        const std::size_t p0 = static_cast<std::size_t>(pb) * kBlock;
        const std::size_t p1 = std::min(n, p0 + kBlock);
        for (std::size_t b = 0; b < d; ++b) {
            const double* plane = cube.data.data() + b * n;
            for (std::size_t p = p0; p < p1; ++p) fm.values[p * d + b] = plane[p];
        }
    }
    return fm;
}

void atomic_write(const fs::path& path, const void* bytes, std::size_t n) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot create '" + tmp.string() + "'");
        if (n > 0) out.write(static_cast<const char*>(bytes), static_cast<std::streamsize>(n));
        if (!out) throw IoError("write failed on '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("rename to '" + path.string() + "' failed: " + ec.message());
}

void atomic_write_text(const fs::path& path, const std::string& text) {
    atomic_write(path, text.data(), text.size());
}

}  // namespace iap
