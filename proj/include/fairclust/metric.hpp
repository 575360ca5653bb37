#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairclust/ext_real.hpp"

namespace fairclust {

// Symmetric nonnegative distance matrix over n agents, with inf allowed for
// detached agents. Construction only checks the shape; use validate_metric
// to diagnose violations of the metric axioms.
class MetricInstance {
  public:
    MetricInstance(int n, std::vector<ExtReal> dist,
                   std::optional<std::vector<double>> positions = std::nullopt);

    static MetricInstance from_matrix(const std::vector<std::vector<ExtReal>>& rows);

    int size() const { return n_; }

    ExtReal d(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }
    double raw(int i, int j) const { return d(i, j).raw(); }

    // 1-D coordinates when the instance lives on a line. Detached agents are
    // stored as +/-inf coordinates.
    const std::optional<std::vector<double>>& positions() const { return positions_; }

    // Multiplies every finite distance (and finite position) by c > 0.
    MetricInstance scaled(double c) const;

  private:
    int n_;
    std::vector<ExtReal> dist_;
    std::optional<std::vector<double>> positions_;
};

struct MetricViolation {
    enum class Kind { kNonzeroDiagonal, kAsymmetry, kTriangle };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;

    std::string describe() const;
};

// Empty result iff the instance satisfies zero diagonal, symmetry and the
// triangle inequality (under extended-real arithmetic, so inf absorbs sums).
std::vector<MetricViolation> validate_metric(const MetricInstance& m);

// Euclidean distances between feature vectors; positions are retained when
// the vectors are 1-dimensional.
MetricInstance metric_from_points(const std::vector<std::vector<double>>& rows);

}  // namespace fairclust
