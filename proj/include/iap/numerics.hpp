#ifndef IAP_NUMERICS_HPP
#define IAP_NUMERICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "iap/types.hpp"

namespace iap {

struct StandardizeStats {
    std::vector<double> mean;
    std::vector<double> stddev;  // population std (divide by N)
};

/// Per-column z-scoring. Columns with std <= 1e-12 are zero-filled.
FeatureMatrix standardize(const FeatureMatrix& x, StandardizeStats* stats = nullptr);

struct PcaModel {
    std::size_t input_dim = 0;
    std::size_t output_dim = 0;
    std::vector<double> mean;        // input_dim
    std::vector<double> components;  // input_dim x output_dim, row-major; orthonormal columns
    std::vector<double> variances;   // output_dim, non-increasing

    double component(std::size_t feature, std::size_t comp) const {
        return components[feature * output_dim + comp];
    }
};

/// Covariance eigendecomposition on mean-centered rows. Components are
/// ordered by decreasing variance; the largest-magnitude entry of each
/// component is made positive; equal-variance pairs order by the index of
/// that entry.
PcaModel pca_fit(const FeatureMatrix& x, std::size_t d);

FeatureMatrix pca_transform(const PcaModel& model, const FeatureMatrix& x);

/// Back-projection (exact inverse when output_dim == input_dim).
FeatureMatrix pca_inverse(const PcaModel& model, const FeatureMatrix& y);

struct KmeansResult {
    std::vector<int> assignments;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
    std::vector<double> inertia_history;  // one entry per assignment pass
};

/// Lloyd iterations from k-means++ seeding. Stops at max_iter or when the
/// relative inertia change drops below 1e-6. Empty clusters are refilled
/// with the point farthest from its centroid.
KmeansResult kmeans(const std::vector<std::vector<double>>& points, std::size_t k,
                    std::uint64_t seed, int max_iter);

}  // namespace iap

#endif
