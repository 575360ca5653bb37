#include "fairclust/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace fairclust {

MetricInstance::MetricInstance(int n, std::vector<ExtReal> dist,
                               std::optional<std::vector<double>> positions)
    : n_(n), dist_(std::move(dist)), positions_(std::move(positions)) {
    if (n_ <= 0) throw std::invalid_argument("MetricInstance: n must be positive");
    if (dist_.size() != static_cast<size_t>(n_) * n_)
        throw std::invalid_argument("MetricInstance: distance matrix has wrong size");
    if (positions_ && positions_->size() != static_cast<size_t>(n_))
        throw std::invalid_argument("MetricInstance: positions have wrong length");
}

MetricInstance MetricInstance::from_matrix(const std::vector<std::vector<ExtReal>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<ExtReal> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (row.size() != static_cast<size_t>(n))
            throw std::invalid_argument("MetricInstance: matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return MetricInstance(n, std::move(flat));
}

MetricInstance MetricInstance::scaled(double c) const {
    std::vector<ExtReal> scaled_dist;
    scaled_dist.reserve(dist_.size());
    for (ExtReal v : dist_) scaled_dist.push_back(v.scaled(c));
    std::optional<std::vector<double>> scaled_pos;
    if (positions_) {
        scaled_pos.emplace();
        scaled_pos->reserve(positions_->size());
        for (double p : *positions_) scaled_pos->push_back(p * c);
    }
    return MetricInstance(n_, std::move(scaled_dist), std::move(scaled_pos));
}

std::string MetricViolation::describe() const {
    switch (kind) {
        case Kind::kNonzeroDiagonal:
            return "nonzero diagonal at agent " + std::to_string(i);
        case Kind::kAsymmetry:
            return "asymmetry between agents (" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::kTriangle:
            return "triangle inequality violated for (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return "unknown violation";
}

std::vector<MetricViolation> validate_metric(const MetricInstance& m) {
    std::vector<MetricViolation> out;
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        if (!m.d(i, i).is_zero())
            out.push_back({MetricViolation::Kind::kNonzeroDiagonal, i, -1, -1});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (m.d(i, j) != m.d(j, i))
                out.push_back({MetricViolation::Kind::kAsymmetry, i, j, -1});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                // inf on the right absorbs, so only finite sums can fail.
                if (m.raw(i, j) > m.raw(i, k) + m.raw(k, j) + 1e-12)
                    out.push_back({MetricViolation::Kind::kTriangle, i, j, k});
            }
        }
    }
    return out;
}

MetricInstance metric_from_points(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("metric_from_points: no rows");
    const size_t dim = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != dim)
            throw std::invalid_argument("metric_from_points: rows have mixed dimensions");
    }
    std::vector<ExtReal> dist(static_cast<size_t>(n) * n, ExtReal{});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (size_t f = 0; f < dim; ++f) {
                const double diff = rows[i][f] - rows[j][f];
                s += diff * diff;
            }
            const ExtReal d = ExtReal::finite(std::sqrt(s));
            dist[static_cast<size_t>(i) * n + j] = d;
            dist[static_cast<size_t>(j) * n + i] = d;
        }
    }
    std::optional<std::vector<double>> positions;
    if (dim == 1) {
        positions.emplace();
        positions->reserve(n);
        for (const auto& row : rows) positions->push_back(row[0]);
    }
    return MetricInstance(n, std::move(dist), std::move(positions));
}

}  // namespace fairclust
