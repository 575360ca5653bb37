#pragma once

#include <vector>

#include "fairclust/ext_real.hpp"

namespace fairclust {

// Problem sizing: n agents, at most k clusters, and the coalition threshold
// tau = ceil(n/k), the smallest group size entitled to a cluster of its own.
struct ProblemSpec {
    int n;
    int k;
    int tau;

    ProblemSpec(int n_agents, int k_clusters);
};

// Exact partition of agents {0..n-1} into k slots, some possibly empty.
class Clustering {
  public:
    static Clustering from_clusters(int n, int k, std::vector<std::vector<int>> clusters);
    static Clustering from_assignment(int k, const std::vector<int>& assignment);

    int num_agents() const { return n_; }
    int num_slots() const { return k_; }
    int num_nonempty() const;

    int cluster_of(int agent) const { return assignment_[agent]; }
    const std::vector<int>& cluster(int slot) const { return clusters_[slot]; }
    const std::vector<std::vector<int>>& clusters() const { return clusters_; }
    const std::vector<int>& assignment() const { return assignment_; }

  private:
    Clustering(int n, int k, std::vector<std::vector<int>> clusters, std::vector<int> assignment)
        : n_(n), k_(k), clusters_(std::move(clusters)), assignment_(std::move(assignment)) {}

    int n_;
    int k_;
    std::vector<std::vector<int>> clusters_;
    std::vector<int> assignment_;
};

}  // namespace fairclust
