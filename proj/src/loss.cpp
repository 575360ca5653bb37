#include "fairclust/loss.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairclust {

std::string to_string(LossKind kind) {
    switch (kind) {
        case LossKind::kAverage: return "average";
        case LossKind::kMaximum: return "maximum";
        case LossKind::kArbitrary: return "arbitrary";
    }
    return "?";
}

LossKind parse_loss_kind(const std::string& name) {
    if (name == "average") return LossKind::kAverage;
    if (name == "maximum") return LossKind::kMaximum;
    if (name == "arbitrary") return LossKind::kArbitrary;
    throw std::invalid_argument("unknown loss kind '" + name + "'");
}

LossModel LossModel::average(MetricInstance metric) {
    const int n = metric.size();
    return LossModel(LossKind::kAverage, std::move(metric), {}, n);
}

LossModel LossModel::maximum(MetricInstance metric) {
    const int n = metric.size();
    return LossModel(LossKind::kMaximum, std::move(metric), {}, n);
}

LossModel LossModel::with_kind(LossKind kind, MetricInstance metric) {
    if (kind == LossKind::kArbitrary)
        throw std::invalid_argument("LossModel::with_kind: arbitrary losses need a table");
    return kind == LossKind::kAverage ? average(std::move(metric)) : maximum(std::move(metric));
}

LossModel LossModel::arbitrary(int n, Table table) {
    if (n <= 0 || n > kArbitraryLossMaxAgents)
        throw std::invalid_argument("LossModel::arbitrary: n must be in [1, 24]");
    if (table.size() != static_cast<size_t>(n))
        throw std::invalid_argument("LossModel::arbitrary: table must have one map per agent");
    return LossModel(LossKind::kArbitrary, std::nullopt, std::move(table), n);
}

const MetricInstance& LossModel::metric() const {
    if (!metric_) throw std::logic_error("LossModel::metric: arbitrary model has no metric");
    return *metric_;
}

ExtReal LossModel::loss(int i, std::span<const int> members) const {
    if (members.empty()) throw std::invalid_argument("LossModel::loss: empty cluster");
    bool found = false;
    for (int m : members) {
        if (m == i) {
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("LossModel::loss: agent not in cluster");

    switch (kind_) {
        case LossKind::kAverage: {
            double s = 0.0;
            for (int m : members) s += metric_->raw(i, m);
            return ExtReal::from_raw(s / static_cast<double>(members.size()));
        }
        case LossKind::kMaximum: {
            double mx = 0.0;
            for (int m : members) mx = std::max(mx, metric_->raw(i, m));
            return ExtReal::from_raw(mx);
        }
        case LossKind::kArbitrary: {
            std::uint32_t mask = 0;
            for (int m : members) mask |= (1u << m);
            return loss_mask(i, mask);
        }
    }
    throw std::logic_error("LossModel::loss: bad kind");
}

ExtReal LossModel::loss_mask(int i, std::uint32_t members_mask) const {
    if (members_mask == 0 || !(members_mask & (1u << i)))
        throw std::invalid_argument("LossModel::loss_mask: agent not in cluster");
    if (kind_ == LossKind::kArbitrary) {
        const auto& row = table_[static_cast<size_t>(i)];
        auto it = row.find(members_mask);
        if (it == row.end())
            throw std::runtime_error("LossModel: arbitrary table is incomplete for agent " +
                                     std::to_string(i));
        return it->second;
    }
    double acc = 0.0;
    int count = 0;
    for (int m = 0; m < n_; ++m) {
        if (!(members_mask & (1u << m))) continue;
        ++count;
        if (kind_ == LossKind::kAverage)
            acc += metric_->raw(i, m);
        else
            acc = std::max(acc, metric_->raw(i, m));
    }
    if (kind_ == LossKind::kAverage) acc /= static_cast<double>(count);
    return ExtReal::from_raw(acc);
}

LossModel LossModel::scaled(double c) const {
    if (!metric_) throw std::logic_error("LossModel::scaled: arbitrary model has no metric");
    return LossModel(kind_, metric_->scaled(c), {}, n_);
}

}  // namespace fairclust
