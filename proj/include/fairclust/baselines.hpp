#pragma once

#include <cstdint>
#include <vector>

#include "fairclust/clustering.hpp"
#include "fairclust/metric.hpp"

namespace fairclust {

// Deterministic run parameters for the randomized baselines: the same seed
// always reproduces the same clustering.
struct SeededRun {
    std::uint64_t seed = 0;
    int max_iterations = 300;
    double tol = 1e-6;  // relative objective change at which iteration stops
};

// k-means++ seeding followed by Lloyd iterations on Euclidean rows. Empty
// clusters are repaired by reseeding them with the point farthest from its
// assigned center.
Clustering kmeans_pp(const std::vector<std::vector<double>>& rows, int k, const SeededRun& run);

// Alternating k-medoids: random distinct medoids from the seed, then
// assign/medoid-update rounds until the medoid set stabilizes.
Clustering kmedoids(const MetricInstance& metric, int k, const SeededRun& run);

// Sum over clusters of (1/|C_t|) * ordered-pair distance sum. Each unordered
// pair counts twice; empty clusters contribute 0.
double objective_cost(const Clustering& clustering, const MetricInstance& metric);

// Same shape with squared distances. On Euclidean rows this equals twice the
// within-cluster sum of squared distances to the centroid.
double objective_kmeans(const Clustering& clustering, const MetricInstance& metric);

// Centroid half of the identity above: sum over clusters and points of the
// squared distance to the cluster mean.
double objective_kmeans_centroid(const Clustering& clustering,
                                 const std::vector<std::vector<double>>& rows);

// Sum over clusters of the best single-member total distance.
double objective_kmedoids(const Clustering& clustering, const MetricInstance& metric);

}  // namespace fairclust
