#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairclust/ext_real.hpp"
#include "fairclust/metric.hpp"

namespace fairclust {

enum class LossKind { kAverage, kMaximum, kArbitrary };

std::string to_string(LossKind kind);
LossKind parse_loss_kind(const std::string& name);

// Maximum number of agents supported by bitmask-keyed arbitrary loss tables.
inline constexpr int kArbitraryLossMaxAgents = 24;

// Agent loss functions. Average and maximum losses are derived from a metric;
// arbitrary losses are a per-agent table keyed by the coalition bitmask.
class LossModel {
  public:
    using Table = std::vector<std::unordered_map<std::uint32_t, ExtReal>>;

    static LossModel average(MetricInstance metric);
    static LossModel maximum(MetricInstance metric);
    static LossModel with_kind(LossKind kind, MetricInstance metric);
    static LossModel arbitrary(int n, Table table);

    LossKind kind() const { return kind_; }
    int size() const { return n_; }

    bool has_metric() const { return metric_.has_value(); }
    const MetricInstance& metric() const;

    // Loss of agent i for being in the cluster `members` (which must contain
    // i and be nonempty). Average divides by |members|, self-distance included.
    ExtReal loss(int i, std::span<const int> members) const;

    // Bitmask variant; valid for any kind when size() <= 32 (required for
    // arbitrary tables, convenient for enumeration code).
    ExtReal loss_mask(int i, std::uint32_t members_mask) const;

    // Rebuilds the model with every finite distance scaled by c > 0
    // (metric-backed kinds only).
    LossModel scaled(double c) const;

  private:
    LossModel(LossKind kind, std::optional<MetricInstance> metric, Table table, int n)
        : kind_(kind), metric_(std::move(metric)), table_(std::move(table)), n_(n) {}

    LossKind kind_;
    std::optional<MetricInstance> metric_;
    Table table_;
    int n_;
};

}  // namespace fairclust
