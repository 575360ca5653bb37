#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairclust/clustering.hpp"
#include "fairclust/loss.hpp"
#include "fairclust/metric.hpp"

namespace fairclust {

// A generated instance: metric, loss model, sizing, optional colocation-group
// labels, and a short description of the phenomenon it exhibits.
struct FixtureInstance {
    MetricInstance metric;
    LossModel model;
    ProblemSpec spec;
    std::optional<std::vector<int>> groups;
    std::string provenance;
};

// Four agents, two clusters, arbitrary losses under which no clustering
// approximates the core by any finite factor. Agents 0..2 each want exactly
// one two-agent cluster (0 with 1, 1 with 2, 2 with 0, at loss 0), tolerate
// the other two-agent cluster without agent 3 (loss 1), and assign infinite
// loss to everything else. Agent 3 has loss 0 alone and inf otherwise.
FixtureInstance gen_arbitrary_core_empty();

// Average-loss instance without an alpha-core clustering, for any
// alpha < (1 + sqrt(3)) / 2. Half the areas hold a middle location flanked by
// left/right locations at distance n/(2*k*alpha); distinct areas sit at
// infinite distance. Requires even k and alpha in [1, (1+sqrt(3))/2).
FixtureInstance gen_average_core_lower_bound(int k, double alpha);

// Line instance with locations A=-M, B=-1, C=0, D=eps, E=1, F=2-eps and k=2.
// The two variants differ only in the location multiplicities; both make the
// greedy ball pick {D, E, F...} and leave {B, C, D...} as the cohesive
// coalition that exposes the worst case.
enum class TightnessVariant {
    kCoreBound,        // counts 1, 2, n/2-3, 1, 1, n/2-2 (n even, n >= 8)
    kSubroutineBound,  // counts 1, n/4, n/4-1, 1, 1, n/2-2 (n divisible by 4)
};
FixtureInstance gen_tightness_line(int n, double eps, double big_m, TightnessVariant variant);

// Line instance (even n > 24, k=2, average loss) whose core is empty: one
// agent at 0, n/2-1 at 2, n/2-1 at 3, and one detached agent at +inf.
FixtureInstance gen_line_average_core_empty(int n);

// Instance on which algorithms driven by classical objectives merge a
// colocated group of tau agents with a nearby small group, letting that group
// deviate to zero loss, while greedy capture keeps it intact. Layout: one
// group of tau agents, one small group at distance 1 from it, and k-1 far
// groups at infinite distance from everything else.
FixtureInstance gen_incompatibility(int n, int k);

// Euclidean rows realizing gen_incompatibility with inf replaced by a large
// finite separation, so coordinate-based baselines can run on it.
std::vector<std::vector<double>> embed_incompatibility(int n, int k, double separation = 1e6);

}  // namespace fairclust
