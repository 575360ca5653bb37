#include "fairclust/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fairclust {

ProblemSpec::ProblemSpec(int n_agents, int k_clusters) : n(n_agents), k(k_clusters) {
    if (n < 1) throw std::invalid_argument("ProblemSpec: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("ProblemSpec: need 1 <= k <= n");
    tau = (n + k - 1) / k;
}

Clustering Clustering::from_clusters(int n, int k, std::vector<std::vector<int>> clusters) {
    if (static_cast<int>(clusters.size()) > k)
        throw std::invalid_argument("Clustering: more cluster slots than k");
    clusters.resize(static_cast<size_t>(k));
    std::vector<int> assignment(static_cast<size_t>(n), -1);
    for (int slot = 0; slot < k; ++slot) {
        auto& members = clusters[static_cast<size_t>(slot)];
        std::sort(members.begin(), members.end());
        for (int agent : members) {
            if (agent < 0 || agent >= n)
                throw std::invalid_argument("Clustering: agent index out of range");
            if (assignment[static_cast<size_t>(agent)] != -1)
                throw std::invalid_argument("Clustering: agent " + std::to_string(agent) +
                                            " appears in two clusters");
            assignment[static_cast<size_t>(agent)] = slot;
        }
    }
    for (int agent = 0; agent < n; ++agent) {
        if (assignment[static_cast<size_t>(agent)] == -1)
            throw std::invalid_argument("Clustering: agent " + std::to_string(agent) +
                                        " is unassigned");
    }
    return Clustering(n, k, std::move(clusters), std::move(assignment));
}

Clustering Clustering::from_assignment(int k, const std::vector<int>& assignment) {
    const int n = static_cast<int>(assignment.size());
    std::vector<std::vector<int>> clusters(static_cast<size_t>(k));
    for (int agent = 0; agent < n; ++agent) {
        const int slot = assignment[static_cast<size_t>(agent)];
        if (slot < 0 || slot >= k)
            throw std::invalid_argument("Clustering: slot index out of range");
        clusters[static_cast<size_t>(slot)].push_back(agent);
    }
    return Clustering(n, k, std::move(clusters), assignment);
}

int Clustering::num_nonempty() const {
    int count = 0;
    for (const auto& c : clusters_)
        if (!c.empty()) ++count;
    return count;
}

}  // namespace fairclust
