#pragma once

#include <span>
#include <string>
#include <vector>

#include "fairclust/clustering.hpp"
#include "fairclust/loss.hpp"
#include "fairclust/metric.hpp"

namespace fairclust {

// Procedures that extract one cohesive cluster from a pool of agents.
// The smallest-* variants read only the metric and return exactly
// min(tau, |pool|) agents; the exact oracle minimizes the worst member loss
// over all subsets of size >= tau and may return more than tau agents.
enum class CohesiveSubroutine { kSmallestAgentBall, kSmallestDiameter, kExactOracle };

std::string to_string(CohesiveSubroutine sub);
CohesiveSubroutine parse_subroutine(const std::string& name);

// Enumeration cap for the exact oracle and the exact auditors.
inline constexpr int kSubsetEnumerationCap = 22;

// Smallest agent-centered ball capturing at least tau agents of the pool;
// returns the tau agents closest to the best center. The center counts as its
// own closest agent. Ties (center choice and membership) go to the lowest
// agent index. Pools of size <= tau are returned whole.
std::vector<int> smallest_agent_ball(std::span<const int> pool, const MetricInstance& metric,
                                     int tau);

// Narrowest window of exactly tau consecutive agents on the line (requires
// 1-D positions); ties go to the leftmost window. Pools of size <= tau are
// returned whole.
std::vector<int> smallest_diameter(std::span<const int> pool, const MetricInstance& metric,
                                   int tau);

// Exact minimizer of max_{i in S} loss_i(S) over subsets S of the pool with
// |S| >= min(tau, |pool|). For the maximum loss only size-tau subsets are
// enumerated (supersets cannot improve the objective); for average and
// arbitrary losses all sizes are enumerated. Ties resolve to the numerically
// smallest membership bitmask. Pool size is capped at kSubsetEnumerationCap.
std::vector<int> most_cohesive_cluster_exact(std::span<const int> pool, const LossModel& model,
                                             int tau);

// Worst member loss of a candidate cluster, the objective the subroutines
// above approximate or minimize.
ExtReal cohesive_objective(std::span<const int> members, const LossModel& model);

std::vector<int> run_cohesive_subroutine(CohesiveSubroutine sub, std::span<const int> pool,
                                         const LossModel& model, int tau);

// Repeatedly extracts the subroutine's cluster from the remaining agents
// (threshold tau = ceil(n/k)) until none remain; later slots stay empty.
Clustering greedy_cohesive_clustering(CohesiveSubroutine sub, const ProblemSpec& spec,
                                      const LossModel& model);

// Greedy cohesive clustering with the smallest agent ball. Reads only the
// metric, so one run serves the average and maximum losses alike.
Clustering greedy_capture(const ProblemSpec& spec, const MetricInstance& metric);

}  // namespace fairclust
