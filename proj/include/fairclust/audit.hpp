#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fairclust/clustering.hpp"
#include "fairclust/cohesive.hpp"
#include "fairclust/loss.hpp"

namespace fairclust {

enum class WitnessKind { kCore, kFjr };

std::string to_string(WitnessKind kind);

// A coalition together with the improvement ratio it demonstrates against a
// clustering. Witnesses are only reported for ratios strictly above 1.
struct DeviationWitness {
    std::vector<int> coalition;
    ExtReal ratio;
    WitnessKind kind;
};

struct AuditTraceRow {
    int iteration;
    std::vector<int> coalition;
    ExtReal ratio;
    int removed_agent;
};

struct AuditReport {
    ExtReal theta;
    std::optional<DeviationWitness> best_witness;
    std::vector<AuditTraceRow> trace;
};

// Ratio conventions shared by all fairness measures, chosen so that "no
// strict improvement is possible" maps to 1 and escaping a positive loss at
// zero (or infinite) cost maps to inf:
//   0/0 -> 1,  inf/inf -> 1,  x/0 -> inf,  x/inf -> 0,  else plain division.
ExtReal improvement_ratio(ExtReal before, ExtReal after);

// min_{j in S} loss_j(C(j)) / max_{i in S} loss_i(S) under the conventions
// above. A coalition violates alpha-FJR exactly when this exceeds alpha.
ExtReal fjr_ratio(const Clustering& clustering, std::span<const int> coalition,
                  const LossModel& model);

// min over i in S of loss_i(C(i)) / loss_i(S), per-agent conventions as
// above. A coalition violates the alpha-core exactly when this exceeds alpha.
ExtReal core_ratio(const Clustering& clustering, std::span<const int> coalition,
                   const LossModel& model);

// Iterative FJR audit: probe the subroutine's cohesive cluster, record its
// FJR violation, drop the probed agent with the smallest clustering loss, and
// repeat while at least tau agents remain. If the subroutine solves the
// cohesive-cluster problem within factor lambda, the clustering's exact FJR
// approximation lies in [theta, lambda * theta].
AuditReport audit_fjr(CohesiveSubroutine sub, const Clustering& clustering,
                      const ProblemSpec& spec, const LossModel& model);

// Exhaustive FJR approximation over all coalitions of size >= tau, floored at
// 1. For the maximum loss only size-tau coalitions (plus whole clusters) are
// enumerated; shrinking a coalition to size tau can only raise its ratio.
std::pair<ExtReal, std::optional<DeviationWitness>> exact_fjr_approximation(
    const Clustering& clustering, const ProblemSpec& spec, const LossModel& model);

// Exhaustive core approximation over all coalitions of size >= tau, floored
// at 1. No size restriction is sound here, for any loss.
std::pair<ExtReal, std::optional<DeviationWitness>> exact_core_approximation(
    const Clustering& clustering, const ProblemSpec& spec, const LossModel& model);

// Searches for a coalition of size >= delta * n / k whose members all improve
// by a factor > alpha. Returns the smallest-bitmask witness, or nothing when
// the clustering is in the (alpha, delta)-core.
std::optional<DeviationWitness> bicriteria_core_check(const Clustering& clustering,
                                                      const ProblemSpec& spec,
                                                      const LossModel& model, double alpha,
                                                      double delta);

// Core-emptiness certificate for instances made of colocated groups: true iff
// every k-clustering (enumerated up to exchanging colocated agents, i.e. by
// per-group counts) admits a coalition of size >= tau improving every member
// by a factor > alpha. Losses depend only on group counts, which keeps the
// search tractable far beyond the subset-enumeration cap.
bool symmetry_reduced_core_emptiness(const MetricInstance& metric, std::span<const int> groups,
                                     LossKind kind, const ProblemSpec& spec, ExtReal alpha);

// Plain-text serialization: a header line, one summary row
// (theta,witness_members,kind,iterations), then one row per trace entry
// (iteration,coalition,ratio,removed_agent).
void write_audit_report(std::ostream& out, const AuditReport& report, WitnessKind kind);

}  // namespace fairclust
