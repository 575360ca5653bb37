#include "fairclust/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fairclust/random.hpp"

namespace fairclust {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t f = 0; f < a.size(); ++f) {
        const double diff = a[f] - b[f];
        s += diff * diff;
    }
    return s;
}

void check_monotone(double prev, double next, const char* what) {
    if (next > prev * (1.0 + 1e-9) + 1e-12)
        throw std::logic_error(std::string(what) + ": objective increased across an iteration");
}

// Index of the nearest reference point; ties go to the lowest reference index.
int nearest(const std::vector<double>& point, const std::vector<std::vector<double>>& refs) {
    int best = 0;
    double best_d = sq_dist(point, refs[0]);
    for (size_t c = 1; c < refs.size(); ++c) {
        const double d = sq_dist(point, refs[c]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

}  // namespace

Clustering kmeans_pp(const std::vector<std::vector<double>>& rows, int k, const SeededRun& run) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("kmeans_pp: no rows");
    if (k < 1 || k > n) throw std::invalid_argument("kmeans_pp: need 1 <= k <= n");
    Rng rng(run.seed);

    // D^2-weighted seeding.
    std::vector<std::vector<double>> centers;
    centers.push_back(rows[static_cast<size_t>(rng.next_int(n))]);
    std::vector<double> d2(static_cast<size_t>(n));
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : centers) best = std::min(best, sq_dist(rows[static_cast<size_t>(i)], c));
            d2[static_cast<size_t>(i)] = best;
            total += best;
        }
        int chosen = -1;
        if (total > 0.0) {
            const double target = rng.next_double() * total;
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += d2[static_cast<size_t>(i)];
                if (acc > target) {
                    chosen = i;
                    break;
                }
            }
            if (chosen == -1) chosen = n - 1;
        } else {
            chosen = rng.next_int(n);  // all points coincide with some center
        }
        centers.push_back(rows[static_cast<size_t>(chosen)]);
    }

    std::vector<int> assignment(static_cast<size_t>(n), 0);
    double prev_obj = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < run.max_iterations; ++iter) {
        for (int i = 0; i < n; ++i)
            assignment[static_cast<size_t>(i)] = nearest(rows[static_cast<size_t>(i)], centers);

        // Reseed empty clusters with the point farthest from its center.
        std::vector<int> count(static_cast<size_t>(k), 0);
        for (int a : assignment) ++count[static_cast<size_t>(a)];
        for (int c = 0; c < k; ++c) {
            if (count[static_cast<size_t>(c)] > 0) continue;
            int farthest = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (count[static_cast<size_t>(assignment[static_cast<size_t>(i)])] <= 1) continue;
                const double d =
                    sq_dist(rows[static_cast<size_t>(i)], centers[static_cast<size_t>(assignment[static_cast<size_t>(i)])]);
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            if (farthest == -1) continue;  // fewer distinct points than clusters
            --count[static_cast<size_t>(assignment[static_cast<size_t>(farthest)])];
            assignment[static_cast<size_t>(farthest)] = c;
            count[static_cast<size_t>(c)] = 1;
            centers[static_cast<size_t>(c)] = rows[static_cast<size_t>(farthest)];
        }

        // Update means.
        const size_t dim = rows.front().size();
        std::vector<std::vector<double>> means(static_cast<size_t>(k),
                                               std::vector<double>(dim, 0.0));
        std::vector<int> sizes(static_cast<size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            const int c = assignment[static_cast<size_t>(i)];
            ++sizes[static_cast<size_t>(c)];
            for (size_t f = 0; f < dim; ++f) means[static_cast<size_t>(c)][f] += rows[static_cast<size_t>(i)][f];
        }
        for (int c = 0; c < k; ++c) {
            if (sizes[static_cast<size_t>(c)] == 0) {
                means[static_cast<size_t>(c)] = centers[static_cast<size_t>(c)];
                continue;
            }
            for (size_t f = 0; f < dim; ++f) means[static_cast<size_t>(c)][f] /= sizes[static_cast<size_t>(c)];
        }
        centers.swap(means);

        double obj = 0.0;
        for (int i = 0; i < n; ++i)
            obj += sq_dist(rows[static_cast<size_t>(i)], centers[static_cast<size_t>(assignment[static_cast<size_t>(i)])]);
        check_monotone(prev_obj, obj, "kmeans_pp");
        const bool converged = prev_obj - obj <= run.tol * std::max(prev_obj, 1e-300) &&
                               std::isfinite(prev_obj);
        prev_obj = obj;
        if (converged) break;
    }
    return Clustering::from_assignment(k, assignment);
}

Clustering kmedoids(const MetricInstance& metric, int k, const SeededRun& run) {
    const int n = metric.size();
    if (k < 1 || k > n) throw std::invalid_argument("kmedoids: need 1 <= k <= n");
    Rng rng(run.seed);

    // Partial Fisher-Yates draw of k distinct medoids.
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + rng.next_int(n - i);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<int> medoids(perm.begin(), perm.begin() + k);

    std::vector<int> assignment(static_cast<size_t>(n), 0);
    double prev_obj = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < run.max_iterations; ++iter) {
        // Assign to the nearest medoid (ties to the lowest slot).
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = metric.raw(i, medoids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = metric.raw(i, medoids[static_cast<size_t>(c)]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            assignment[static_cast<size_t>(i)] = best;
        }

        // Reseed empty slots (possible with duplicate points) with the point
        // farthest from its assigned medoid.
        std::vector<int> count(static_cast<size_t>(k), 0);
        for (int a : assignment) ++count[static_cast<size_t>(a)];
        for (int c = 0; c < k; ++c) {
            if (count[static_cast<size_t>(c)] > 0) continue;
            int farthest = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (count[static_cast<size_t>(assignment[static_cast<size_t>(i)])] <= 1) continue;
                const double d = metric.raw(i, medoids[static_cast<size_t>(assignment[static_cast<size_t>(i)])]);
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            if (farthest == -1) continue;
            --count[static_cast<size_t>(assignment[static_cast<size_t>(farthest)])];
            assignment[static_cast<size_t>(farthest)] = c;
            count[static_cast<size_t>(c)] = 1;
            medoids[static_cast<size_t>(c)] = farthest;
        }

        // Per-cluster exhaustive medoid update (ties to the lowest agent id).
        bool changed = false;
        for (int c = 0; c < k; ++c) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (assignment[static_cast<size_t>(i)] == c) members.push_back(i);
            if (members.empty()) continue;
            int best_m = members.front();
            double best_total = std::numeric_limits<double>::infinity();
            for (int cand : members) {
                double total = 0.0;
                for (int i : members) total += metric.raw(cand, i);
                if (total < best_total) {
                    best_total = total;
                    best_m = cand;
                }
            }
            if (best_m != medoids[static_cast<size_t>(c)]) {
                medoids[static_cast<size_t>(c)] = best_m;
                changed = true;
            }
        }

        double obj = 0.0;
        for (int i = 0; i < n; ++i) obj += metric.raw(i, medoids[static_cast<size_t>(assignment[static_cast<size_t>(i)])]);
        if (std::isfinite(obj) && std::isfinite(prev_obj)) check_monotone(prev_obj, obj, "kmedoids");
        prev_obj = obj;
        if (!changed) break;
    }

    // Final assignment against the settled medoids.
    for (int i = 0; i < n; ++i) {
        int best = 0;
        double best_d = metric.raw(i, medoids[0]);
        for (int c = 1; c < k; ++c) {
            const double d = metric.raw(i, medoids[static_cast<size_t>(c)]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        assignment[static_cast<size_t>(i)] = best;
    }
    return Clustering::from_assignment(k, assignment);
}

double objective_cost(const Clustering& clustering, const MetricInstance& metric) {
    double total = 0.0;
    for (const auto& members : clustering.clusters()) {
        if (members.empty()) continue;
        double s = 0.0;
        for (int i : members)
            for (int j : members) s += metric.raw(i, j);
        total += s / static_cast<double>(members.size());
    }
    return total;
}

double objective_kmeans(const Clustering& clustering, const MetricInstance& metric) {
    double total = 0.0;
    for (const auto& members : clustering.clusters()) {
        if (members.empty()) continue;
        double s = 0.0;
        for (int i : members)
            for (int j : members) {
                const double d = metric.raw(i, j);
                s += d * d;
            }
        total += s / static_cast<double>(members.size());
    }
    return total;
}

double objective_kmeans_centroid(const Clustering& clustering,
                                 const std::vector<std::vector<double>>& rows) {
    if (rows.size() != static_cast<size_t>(clustering.num_agents()))
        throw std::invalid_argument("objective_kmeans_centroid: row count mismatch");
    double total = 0.0;
    const size_t dim = rows.empty() ? 0 : rows.front().size();
    for (const auto& members : clustering.clusters()) {
        if (members.empty()) continue;
        std::vector<double> mean(dim, 0.0);
        for (int i : members)
            for (size_t f = 0; f < dim; ++f) mean[f] += rows[static_cast<size_t>(i)][f];
        for (size_t f = 0; f < dim; ++f) mean[f] /= static_cast<double>(members.size());
        for (int i : members) total += sq_dist(rows[static_cast<size_t>(i)], mean);
    }
    return total;
}

double objective_kmedoids(const Clustering& clustering, const MetricInstance& metric) {
    double total = 0.0;
    for (const auto& members : clustering.clusters()) {
        if (members.empty()) continue;
        double best = std::numeric_limits<double>::infinity();
        for (int cand : members) {
            double s = 0.0;
            for (int i : members) s += metric.raw(cand, i);
            best = std::min(best, s);
        }
        total += best;
    }
    return total;
}

}  // namespace fairclust
