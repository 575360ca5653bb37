#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fairclust/clustering.hpp"
#include "fairclust/loss.hpp"
#include "fairclust/metric.hpp"

namespace fairclust {

// Instance files come in three forms, distinguished by the first header token:
//   "<n> <k>"            — n rows of n whitespace-separated distances ("inf" allowed)
//   "points <n> <k>"     — n rows of comma- or whitespace-separated coordinates
//   "arbitrary <n> <k>"  — rows "<agent> <mask> <value>", one per table entry
struct LoadedInstance {
    int n;
    int k;
    MetricInstance metric;
    std::optional<std::vector<std::vector<double>>> rows;  // points form only
    std::optional<LossModel> arbitrary;                    // arbitrary form only
};

LoadedInstance read_instance(std::istream& in);
LoadedInstance read_instance_file(const std::string& path);

void write_instance_matrix(std::ostream& out, const MetricInstance& metric, int k);
void write_instance_points(std::ostream& out, const std::vector<std::vector<double>>& rows, int k);
void write_instance_arbitrary(std::ostream& out, const LossModel& model, int k);

// Clustering files: exactly k lines, one per cluster slot, holding the
// space-separated agent indices of that slot (blank line for an empty slot).
Clustering read_clustering(std::istream& in, int n);
Clustering read_clustering_file(const std::string& path, int n);
void write_clustering(std::ostream& out, const Clustering& clustering);

}  // namespace fairclust
