#include "fairclust/cohesive.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "subset_walker.hpp"

namespace fairclust {

namespace {

std::vector<int> sorted_copy(std::span<const int> pool) {
    std::vector<int> out(pool.begin(), pool.end());
    std::sort(out.begin(), out.end());
    return out;
}

// (distance, agent) pairs from `center` to every pool member, ascending by
// distance with index tie-break.
std::vector<std::pair<double, int>> distances_from(int center, std::span<const int> pool,
                                                   const MetricInstance& metric) {
    std::vector<std::pair<double, int>> by_dist;
    by_dist.reserve(pool.size());
    for (int agent : pool) by_dist.emplace_back(metric.raw(center, agent), agent);
    std::sort(by_dist.begin(), by_dist.end());
    return by_dist;
}

}  // namespace

std::string to_string(CohesiveSubroutine sub) {
    switch (sub) {
        case CohesiveSubroutine::kSmallestAgentBall: return "smallest-agent-ball";
        case CohesiveSubroutine::kSmallestDiameter: return "smallest-diameter";
        case CohesiveSubroutine::kExactOracle: return "exact-oracle";
    }
    return "?";
}

CohesiveSubroutine parse_subroutine(const std::string& name) {
    if (name == "smallest-agent-ball") return CohesiveSubroutine::kSmallestAgentBall;
    if (name == "smallest-diameter") return CohesiveSubroutine::kSmallestDiameter;
    if (name == "exact-oracle") return CohesiveSubroutine::kExactOracle;
    throw std::invalid_argument("unknown cohesive subroutine '" + name + "'");
}

std::vector<int> smallest_agent_ball(std::span<const int> pool, const MetricInstance& metric,
                                     int tau) {
    if (pool.empty()) throw std::invalid_argument("smallest_agent_ball: empty pool");
    if (tau < 1) throw std::invalid_argument("smallest_agent_ball: tau must be >= 1");
    std::vector<int> agents = sorted_copy(pool);
    if (static_cast<int>(agents.size()) <= tau) return agents;

    int best_center = -1;
    double best_radius = 0.0;
    for (int center : agents) {
        auto by_dist = distances_from(center, agents, metric);
        const double radius = by_dist[static_cast<size_t>(tau - 1)].first;
        if (best_center == -1 || radius < best_radius) {
            best_center = center;
            best_radius = radius;
        }
    }

    auto by_dist = distances_from(best_center, agents, metric);
    std::vector<int> ball;
    ball.reserve(static_cast<size_t>(tau));
    for (int idx = 0; idx < tau; ++idx) ball.push_back(by_dist[static_cast<size_t>(idx)].second);
    std::sort(ball.begin(), ball.end());
    return ball;
}

std::vector<int> smallest_diameter(std::span<const int> pool, const MetricInstance& metric,
                                   int tau) {
    if (pool.empty()) throw std::invalid_argument("smallest_diameter: empty pool");
    if (tau < 1) throw std::invalid_argument("smallest_diameter: tau must be >= 1");
    if (!metric.positions())
        throw std::invalid_argument("smallest_diameter: instance has no line positions");
    std::vector<int> agents = sorted_copy(pool);
    if (static_cast<int>(agents.size()) <= tau) return agents;

    const auto& pos = *metric.positions();
    std::vector<std::pair<double, int>> ordered;
    ordered.reserve(agents.size());
    for (int agent : agents) ordered.emplace_back(pos[static_cast<size_t>(agent)], agent);
    std::sort(ordered.begin(), ordered.end());

    int best_start = 0;
    double best_width = 0.0;
    const int last_start = static_cast<int>(ordered.size()) - tau;
    for (int start = 0; start <= last_start; ++start) {
        const double width = metric.raw(ordered[static_cast<size_t>(start)].second,
                                        ordered[static_cast<size_t>(start + tau - 1)].second);
        if (start == 0 || width < best_width) {
            best_start = start;
            best_width = width;
        }
    }

    std::vector<int> window;
    window.reserve(static_cast<size_t>(tau));
    for (int idx = best_start; idx < best_start + tau; ++idx)
        window.push_back(ordered[static_cast<size_t>(idx)].second);
    std::sort(window.begin(), window.end());
    return window;
}

ExtReal cohesive_objective(std::span<const int> members, const LossModel& model) {
    ExtReal worst = ExtReal{};
    for (int i : members) worst = max(worst, model.loss(i, members));
    return worst;
}

std::vector<int> most_cohesive_cluster_exact(std::span<const int> pool, const LossModel& model,
                                             int tau) {
    if (pool.empty()) throw std::invalid_argument("most_cohesive_cluster_exact: empty pool");
    if (tau < 1) throw std::invalid_argument("most_cohesive_cluster_exact: tau must be >= 1");
    if (pool.size() > static_cast<size_t>(kSubsetEnumerationCap))
        throw std::invalid_argument("most_cohesive_cluster_exact: pool exceeds enumeration cap");
    std::vector<int> agents = sorted_copy(pool);
    const int p = static_cast<int>(agents.size());
    const int tau_eff = std::min(tau, p);
    if (tau_eff == p) return agents;

    double best_obj = 0.0;
    std::uint32_t best_mask = 0;
    bool have_best = false;
    auto consider = [&](double obj, std::uint32_t mask) {
        if (!have_best || obj < best_obj || (obj == best_obj && mask < best_mask)) {
            have_best = true;
            best_obj = obj;
            best_mask = mask;
        }
    };

    if (model.kind() == LossKind::kArbitrary) {
        std::vector<std::uint32_t> bit(agents.size());
        for (size_t i = 0; i < agents.size(); ++i) bit[i] = 1u << agents[i];
        const std::uint32_t full = (p == 32) ? ~0u : ((1u << p) - 1);
        for (std::uint32_t local = 1; local <= full; ++local) {
            if (std::popcount(local) < tau_eff) continue;
            std::uint32_t global = 0;
            for (int i = 0; i < p; ++i)
                if (local & (1u << i)) global |= bit[static_cast<size_t>(i)];
            double obj = 0.0;
            for (int i = 0; i < p; ++i) {
                if (!(local & (1u << i))) continue;
                obj = std::max(obj, model.loss_mask(agents[static_cast<size_t>(i)], global).raw());
            }
            consider(obj, local);
        }
    } else {
        detail::SubsetWalker walker(model.metric(), agents);
        const bool maximum = model.kind() == LossKind::kMaximum;
        const int max_size = maximum ? tau_eff : p;
        walker.walk(tau_eff, max_size,
                    [&](const std::vector<int>& members, const std::vector<double>& sums,
                        const std::vector<double>& maxs, std::uint32_t mask) {
                        const int size = static_cast<int>(members.size());
                        double obj = 0.0;
                        if (maximum) {
                            for (int idx = 0; idx < size; ++idx)
                                obj = std::max(obj, maxs[static_cast<size_t>(idx)]);
                        } else {
                            for (int idx = 0; idx < size; ++idx)
                                obj = std::max(obj, sums[static_cast<size_t>(idx)]);
                            obj /= static_cast<double>(size);
                        }
                        consider(obj, mask);
                        return true;
                    });
    }

    std::vector<int> best;
    for (int i = 0; i < p; ++i)
        if (best_mask & (1u << i)) best.push_back(agents[static_cast<size_t>(i)]);
    return best;
}

std::vector<int> run_cohesive_subroutine(CohesiveSubroutine sub, std::span<const int> pool,
                                         const LossModel& model, int tau) {
    switch (sub) {
        case CohesiveSubroutine::kSmallestAgentBall:
            return smallest_agent_ball(pool, model.metric(), tau);
        case CohesiveSubroutine::kSmallestDiameter:
            return smallest_diameter(pool, model.metric(), tau);
        case CohesiveSubroutine::kExactOracle:
            return most_cohesive_cluster_exact(pool, model, tau);
    }
    throw std::logic_error("run_cohesive_subroutine: bad subroutine");
}

namespace {

Clustering run_greedy(int n, const ProblemSpec& spec,
                      const std::function<std::vector<int>(std::span<const int>)>& extract) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::vector<int>> clusters;
    while (!pool.empty()) {
        std::vector<int> next = extract(pool);
        if (next.empty())
            throw std::logic_error("greedy_cohesive_clustering: subroutine returned empty set");
        std::vector<int> remaining;
        remaining.reserve(pool.size());
        std::set_difference(pool.begin(), pool.end(), next.begin(), next.end(),
                            std::back_inserter(remaining));
        if (remaining.size() + next.size() != pool.size())
            throw std::logic_error("greedy_cohesive_clustering: subroutine left the pool");
        pool.swap(remaining);
        clusters.push_back(std::move(next));
    }
    return Clustering::from_clusters(n, spec.k, std::move(clusters));
}

}  // namespace

Clustering greedy_cohesive_clustering(CohesiveSubroutine sub, const ProblemSpec& spec,
                                      const LossModel& model) {
    if (model.size() != spec.n)
        throw std::invalid_argument("greedy_cohesive_clustering: spec/model size mismatch");
    return run_greedy(spec.n, spec, [&](std::span<const int> pool) {
        return run_cohesive_subroutine(sub, pool, model, spec.tau);
    });
}

Clustering greedy_capture(const ProblemSpec& spec, const MetricInstance& metric) {
    if (metric.size() != spec.n)
        throw std::invalid_argument("greedy_capture: spec/metric size mismatch");
    return run_greedy(spec.n, spec, [&](std::span<const int> pool) {
        return smallest_agent_ball(pool, metric, spec.tau);
    });
}

}  // namespace fairclust
