#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairclust/metric.hpp"

namespace fairclust::detail {

// Incremental subset enumeration over a pool of agents. Visits every subset
// with min_size <= |S| <= max_size exactly once, maintaining for each member
// the sum and the max of its distances to the other members. Sums and maxes
// are restored by copy on backtrack, so inf distances are safe (no inf - inf).
//
// The visitor sees local member slots; local index i corresponds to pool[i],
// and the bitmask is over local indices (pool is ascending, so local mask
// order equals global mask order).
class SubsetWalker {
  public:
    SubsetWalker(const MetricInstance& metric, std::span<const int> pool)
        : p_(static_cast<int>(pool.size())) {
        local_.resize(static_cast<size_t>(p_) * p_);
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < p_; ++j)
                local_[static_cast<size_t>(i) * p_ + j] = metric.raw(pool[i], pool[j]);
        members_.reserve(static_cast<size_t>(p_));
        sums_.resize(static_cast<size_t>(p_));
        maxs_.resize(static_cast<size_t>(p_));
        saved_sums_.assign(static_cast<size_t>(p_), std::vector<double>(static_cast<size_t>(p_)));
        saved_maxs_.assign(static_cast<size_t>(p_), std::vector<double>(static_cast<size_t>(p_)));
    }

    int pool_size() const { return p_; }

    // visit(members, sums, maxs, mask):
    //   members — local indices of S in ascending order
    //   sums[i] — sum of distances from members[i] to all of S
    //   maxs[i] — max distance from members[i] to any of S
    //   mask    — local membership bitmask
    // If visit returns false the subtree below the current subset is skipped.
    template <class Visit>
    void walk(int min_size, int max_size, Visit&& visit) {
        min_size_ = min_size;
        max_size_ = max_size;
        if (max_size_ <= 0 || min_size_ > p_) return;
        rec(0, visit);
    }

  private:
    template <class Visit>
    void rec(int start, Visit& visit) {
        const int size = static_cast<int>(members_.size());
        for (int a = start; a < p_; ++a) {
            if (size + (p_ - a) < min_size_) break;

            auto& save_s = saved_sums_[static_cast<size_t>(size)];
            auto& save_m = saved_maxs_[static_cast<size_t>(size)];
            const double* row_a = &local_[static_cast<size_t>(a) * p_];
            double sum_a = 0.0;
            double max_a = 0.0;
            for (int idx = 0; idx < size; ++idx) {
                const double d = row_a[members_[static_cast<size_t>(idx)]];
                save_s[static_cast<size_t>(idx)] = sums_[static_cast<size_t>(idx)];
                save_m[static_cast<size_t>(idx)] = maxs_[static_cast<size_t>(idx)];
                sums_[static_cast<size_t>(idx)] += d;
                if (d > maxs_[static_cast<size_t>(idx)]) maxs_[static_cast<size_t>(idx)] = d;
                sum_a += d;
                if (d > max_a) max_a = d;
            }
            members_.push_back(a);
            sums_[static_cast<size_t>(size)] = sum_a;
            maxs_[static_cast<size_t>(size)] = max_a;
            mask_ |= (1u << a);

            bool descend = true;
            if (size + 1 >= min_size_) descend = visit(members_, sums_, maxs_, mask_);
            if (descend && size + 1 < max_size_) rec(a + 1, visit);

            mask_ &= ~(1u << a);
            members_.pop_back();
            for (int idx = 0; idx < size; ++idx) {
                sums_[static_cast<size_t>(idx)] = save_s[static_cast<size_t>(idx)];
                maxs_[static_cast<size_t>(idx)] = save_m[static_cast<size_t>(idx)];
            }
        }
    }

    int p_;
    int min_size_ = 1;
    int max_size_ = 1;
    std::vector<double> local_;
    std::vector<int> members_;
    std::vector<double> sums_;
    std::vector<double> maxs_;
    std::vector<std::vector<double>> saved_sums_;
    std::vector<std::vector<double>> saved_maxs_;
    std::uint32_t mask_ = 0;
};

}  // namespace fairclust::detail
