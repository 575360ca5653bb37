#include "fairclust/fixtures.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fairclust {

namespace {

constexpr double kCoreLowerBoundLimit = 1.3660254037844386;  // (1 + sqrt(3)) / 2

// Builds a metric from group labels and a group-level distance matrix
// (intra-group distances are zero).
MetricInstance metric_from_groups(const std::vector<int>& groups,
                                  const std::vector<std::vector<ExtReal>>& group_dist,
                                  std::optional<std::vector<double>> positions = std::nullopt) {
    const int n = static_cast<int>(groups.size());
    std::vector<ExtReal> dist(static_cast<size_t>(n) * n, ExtReal{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist[static_cast<size_t>(i) * n + j] =
                group_dist[static_cast<size_t>(groups[static_cast<size_t>(i)])]
                          [static_cast<size_t>(groups[static_cast<size_t>(j)])];
    return MetricInstance(n, std::move(dist), std::move(positions));
}

}  // namespace

FixtureInstance gen_arbitrary_core_empty() {
    const int n = 4;
    LossModel::Table table(static_cast<size_t>(n));
    for (int i = 0; i < 3; ++i) {
        const std::uint32_t self = 1u << i;
        const std::uint32_t friend_mask = self | (1u << ((i + 1) % 3));
        const std::uint32_t other_pair = self | (1u << ((i + 2) % 3));
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (!(mask & self)) continue;
            ExtReal value = ExtReal::inf();
            if (mask == friend_mask)
                value = ExtReal::finite(0.0);
            else if (mask == other_pair)
                value = ExtReal::finite(1.0);
            table[static_cast<size_t>(i)][mask] = value;
        }
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << 3))) continue;
        table[3][mask] = (mask == (1u << 3)) ? ExtReal::finite(0.0) : ExtReal::inf();
    }

    MetricInstance zeros(n, std::vector<ExtReal>(static_cast<size_t>(n) * n, ExtReal{}));
    return FixtureInstance{std::move(zeros), LossModel::arbitrary(n, std::move(table)),
                           ProblemSpec(n, 2), std::nullopt,
                           "arbitrary-loss core emptiness (no finite approximation)"};
}

FixtureInstance gen_average_core_lower_bound(int k, double alpha) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("gen_average_core_lower_bound: k must be even and >= 2");
    if (!(alpha >= 1.0) || !(alpha < kCoreLowerBoundLimit))
        throw std::invalid_argument(
            "gen_average_core_lower_bound: alpha must lie in [1, (1+sqrt(3))/2)");

    const double eps = kCoreLowerBoundLimit - alpha;
    const double bound = std::max(1.0 / (2.0 * eps) + 0.5, 4.0 * alpha * alpha);
    const int per_cluster = static_cast<int>(std::ceil(bound - 1e-12));
    const int n = k * per_cluster;
    const int flank = n / k - 1;  // agents at each of L_i and R_i
    const double arm = n / (2.0 * k * alpha);

    // Group layout: group 0 is M_0; area i >= 1 contributes groups
    // (M_i, L_i, R_i) = (3i - 2, 3i - 1, 3i).
    const int areas = k / 2;
    const int g = 1 + 3 * areas;
    std::vector<std::vector<ExtReal>> gd(static_cast<size_t>(g),
                                         std::vector<ExtReal>(static_cast<size_t>(g), ExtReal::inf()));
    for (int a = 0; a < g; ++a) gd[static_cast<size_t>(a)][static_cast<size_t>(a)] = ExtReal{};
    for (int area = 1; area <= areas; ++area) {
        const int m = 3 * area - 2;
        const int l = 3 * area - 1;
        const int r = 3 * area;
        gd[static_cast<size_t>(l)][static_cast<size_t>(r)] = ExtReal::finite(1.0);
        gd[static_cast<size_t>(r)][static_cast<size_t>(l)] = ExtReal::finite(1.0);
        gd[static_cast<size_t>(l)][static_cast<size_t>(m)] = ExtReal::finite(arm);
        gd[static_cast<size_t>(m)][static_cast<size_t>(l)] = ExtReal::finite(arm);
        gd[static_cast<size_t>(r)][static_cast<size_t>(m)] = ExtReal::finite(arm);
        gd[static_cast<size_t>(m)][static_cast<size_t>(r)] = ExtReal::finite(arm);
    }

    std::vector<int> groups;
    groups.insert(groups.end(), static_cast<size_t>(k / 2), 0);
    for (int area = 1; area <= areas; ++area) {
        groups.push_back(3 * area - 2);
        groups.insert(groups.end(), static_cast<size_t>(flank), 3 * area - 1);
        groups.insert(groups.end(), static_cast<size_t>(flank), 3 * area);
    }

    MetricInstance metric = metric_from_groups(groups, gd);
    return FixtureInstance{metric, LossModel::average(metric), ProblemSpec(n, k),
                           std::move(groups), "average-loss core lower bound"};
}

FixtureInstance gen_tightness_line(int n, double eps, double big_m, TightnessVariant variant) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("gen_tightness_line: eps must lie in (0, 1)");
    if (!(big_m > 2.0)) throw std::invalid_argument("gen_tightness_line: M must exceed 2");
    if (n < 8) throw std::invalid_argument("gen_tightness_line: n must be >= 8");

    std::vector<int> counts;
    if (variant == TightnessVariant::kCoreBound) {
        if (n % 2 != 0)
            throw std::invalid_argument("gen_tightness_line: core-bound variant needs even n");
        counts = {1, 2, n / 2 - 3, 1, 1, n / 2 - 2};
    } else {
        if (n % 4 != 0)
            throw std::invalid_argument(
                "gen_tightness_line: subroutine-bound variant needs n divisible by 4");
        counts = {1, n / 4, n / 4 - 1, 1, 1, n / 2 - 2};
    }

    const double locations[6] = {-big_m, -1.0, 0.0, eps, 1.0, 2.0 - eps};
    std::vector<std::vector<double>> rows;
    std::vector<int> groups;
    for (int loc = 0; loc < 6; ++loc) {
        for (int c = 0; c < counts[static_cast<size_t>(loc)]; ++c) {
            rows.push_back({locations[loc]});
            groups.push_back(loc);
        }
    }

    MetricInstance metric = metric_from_points(rows);
    const char* provenance = variant == TightnessVariant::kCoreBound
                                 ? "line tightness instance (greedy core bound)"
                                 : "line tightness instance (ball subroutine bound)";
    return FixtureInstance{metric, LossModel::average(metric), ProblemSpec(n, 2),
                           std::move(groups), provenance};
}

FixtureInstance gen_line_average_core_empty(int n) {
    if (n <= 24 || n % 2 != 0)
        throw std::invalid_argument("gen_line_average_core_empty: n must be even and > 24");

    std::vector<int> groups;
    groups.push_back(0);
    groups.insert(groups.end(), static_cast<size_t>(n / 2 - 1), 1);
    groups.insert(groups.end(), static_cast<size_t>(n / 2 - 1), 2);
    groups.push_back(3);

    std::vector<std::vector<ExtReal>> gd = {
        {ExtReal{}, ExtReal::finite(2.0), ExtReal::finite(3.0), ExtReal::inf()},
        {ExtReal::finite(2.0), ExtReal{}, ExtReal::finite(1.0), ExtReal::inf()},
        {ExtReal::finite(3.0), ExtReal::finite(1.0), ExtReal{}, ExtReal::inf()},
        {ExtReal::inf(), ExtReal::inf(), ExtReal::inf(), ExtReal{}},
    };

    std::vector<double> positions;
    const double group_pos[4] = {0.0, 2.0, 3.0, std::numeric_limits<double>::infinity()};
    for (int label : groups) positions.push_back(group_pos[label]);

    MetricInstance metric = metric_from_groups(groups, gd, std::move(positions));
    return FixtureInstance{metric, LossModel::average(metric), ProblemSpec(n, 2),
                           std::move(groups), "line average-loss core emptiness"};
}

namespace {

std::vector<int> incompatibility_group_sizes(int n, int k) {
    if (k < 2) throw std::invalid_argument("gen_incompatibility: k must be >= 2");
    if (n < 2 * k) throw std::invalid_argument("gen_incompatibility: need n >= 2k");
    const int tau = (n + k - 1) / k;
    const int rest = n - tau;
    if (rest < k)
        throw std::invalid_argument("gen_incompatibility: not enough agents for k small groups");
    std::vector<int> sizes{tau};
    for (int j = 0; j < k; ++j) sizes.push_back(rest / k + (j < rest % k ? 1 : 0));
    return sizes;
}

}  // namespace

FixtureInstance gen_incompatibility(int n, int k) {
    const std::vector<int> sizes = incompatibility_group_sizes(n, k);
    const int g = static_cast<int>(sizes.size());

    std::vector<std::vector<ExtReal>> gd(static_cast<size_t>(g),
                                         std::vector<ExtReal>(static_cast<size_t>(g), ExtReal::inf()));
    for (int a = 0; a < g; ++a) gd[static_cast<size_t>(a)][static_cast<size_t>(a)] = ExtReal{};
    gd[0][1] = ExtReal::finite(1.0);
    gd[1][0] = ExtReal::finite(1.0);

    std::vector<int> groups;
    for (int label = 0; label < g; ++label)
        groups.insert(groups.end(), static_cast<size_t>(sizes[static_cast<size_t>(label)]), label);

    MetricInstance metric = metric_from_groups(groups, gd);
    return FixtureInstance{metric, LossModel::average(metric), ProblemSpec(n, k),
                           std::move(groups), "classical-objective incompatibility"};
}

std::vector<std::vector<double>> embed_incompatibility(int n, int k, double separation) {
    if (!(separation > 2.0))
        throw std::invalid_argument("embed_incompatibility: separation must exceed 2");
    const std::vector<int> sizes = incompatibility_group_sizes(n, k);

    // Axis 0 separates the near pair; each far group gets its own axis.
    const size_t dim = static_cast<size_t>(k);
    std::vector<std::vector<double>> rows;
    for (size_t label = 0; label < sizes.size(); ++label) {
        std::vector<double> point(dim, 0.0);
        if (label == 1) point[0] = 1.0;
        if (label >= 2) point[label - 1] = separation;
        rows.insert(rows.end(), static_cast<size_t>(sizes[label]), point);
    }
    return rows;
}

}  // namespace fairclust
