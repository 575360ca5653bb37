#include "fairclust/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "subset_walker.hpp"

namespace fairclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double raw_improvement_ratio(double before, double after) {
    if (after == 0.0) return before == 0.0 ? 1.0 : kInf;
    if (std::isinf(after)) return std::isinf(before) ? 1.0 : 0.0;
    return before / after;
}

std::vector<double> clustering_losses(const Clustering& clustering, const LossModel& model) {
    std::vector<double> closs(static_cast<size_t>(clustering.num_agents()));
    for (int slot = 0; slot < clustering.num_slots(); ++slot) {
        const auto& members = clustering.cluster(slot);
        for (int agent : members)
            closs[static_cast<size_t>(agent)] = model.loss(agent, members).raw();
    }
    return closs;
}

// Maximizer tracking with deterministic ties: strictly larger ratio wins,
// equal ratio goes to the smaller membership bitmask.
struct BestCoalition {
    bool have = false;
    double ratio = 0.0;
    std::uint32_t mask = 0;

    void consider(double r, std::uint32_t m) {
        if (!have || r > ratio || (r == ratio && m < mask)) {
            have = true;
            ratio = r;
            mask = m;
        }
    }
};

std::vector<int> mask_to_agents(std::uint32_t mask) {
    std::vector<int> agents;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) agents.push_back(i);
    return agents;
}

std::uint32_t agents_to_mask(std::span<const int> agents) {
    std::uint32_t mask = 0;
    for (int a : agents) mask |= (1u << a);
    return mask;
}

std::pair<ExtReal, std::optional<DeviationWitness>> finish_search(const BestCoalition& best,
                                                                  WitnessKind kind) {
    const double value = best.have ? std::max(best.ratio, 1.0) : 1.0;
    std::optional<DeviationWitness> witness;
    if (best.have && best.ratio > 1.0)
        witness = DeviationWitness{mask_to_agents(best.mask), ExtReal::from_raw(best.ratio), kind};
    return {ExtReal::from_raw(value), witness};
}

void require_enumeration_size(int n, const char* where) {
    if (n > kSubsetEnumerationCap)
        throw std::invalid_argument(std::string(where) + ": instance exceeds enumeration cap");
}

std::vector<int> full_pool(int n) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    return pool;
}

// Exhaustive search over arbitrary-loss coalitions; ratio_of computes the
// violation ratio for one membership mask.
template <class RatioOf>
void scan_masks(int n, int min_size, BestCoalition& best, RatioOf&& ratio_of) {
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < min_size) continue;
        best.consider(ratio_of(mask), mask);
    }
}

}  // namespace

std::string to_string(WitnessKind kind) {
    return kind == WitnessKind::kCore ? "CORE" : "FJR";
}

ExtReal improvement_ratio(ExtReal before, ExtReal after) {
    return ExtReal::from_raw(raw_improvement_ratio(before.raw(), after.raw()));
}

ExtReal fjr_ratio(const Clustering& clustering, std::span<const int> coalition,
                  const LossModel& model) {
    if (coalition.empty()) throw std::invalid_argument("fjr_ratio: empty coalition");
    double before = kInf;
    double after = 0.0;
    for (int agent : coalition) {
        const auto& home = clustering.cluster(clustering.cluster_of(agent));
        before = std::min(before, model.loss(agent, home).raw());
        after = std::max(after, model.loss(agent, coalition).raw());
    }
    return ExtReal::from_raw(raw_improvement_ratio(before, after));
}

ExtReal core_ratio(const Clustering& clustering, std::span<const int> coalition,
                   const LossModel& model) {
    if (coalition.empty()) throw std::invalid_argument("core_ratio: empty coalition");
    double worst = kInf;
    for (int agent : coalition) {
        const auto& home = clustering.cluster(clustering.cluster_of(agent));
        const double before = model.loss(agent, home).raw();
        const double after = model.loss(agent, coalition).raw();
        worst = std::min(worst, raw_improvement_ratio(before, after));
    }
    return ExtReal::from_raw(worst);
}

AuditReport audit_fjr(CohesiveSubroutine sub, const Clustering& clustering,
                      const ProblemSpec& spec, const LossModel& model) {
    if (clustering.num_agents() != spec.n || model.size() != spec.n)
        throw std::invalid_argument("audit_fjr: size mismatch");

    const std::vector<double> closs = clustering_losses(clustering, model);
    std::vector<int> pool = full_pool(spec.n);

    AuditReport report;
    double theta_raw = 0.0;
    std::vector<int> best_coalition;
    int iteration = 0;
    while (static_cast<int>(pool.size()) >= spec.tau) {
        ++iteration;
        std::vector<int> probe = run_cohesive_subroutine(sub, pool, model, spec.tau);
        const ExtReal ratio = fjr_ratio(clustering, probe, model);
        if (ratio.raw() > theta_raw) {
            theta_raw = ratio.raw();
            best_coalition = probe;
        }
        int removed = probe.front();
        for (int agent : probe) {
            if (closs[static_cast<size_t>(agent)] < closs[static_cast<size_t>(removed)])
                removed = agent;
        }
        report.trace.push_back({iteration, probe, ratio, removed});
        pool.erase(std::find(pool.begin(), pool.end(), removed));
    }

    report.theta = ExtReal::from_raw(std::max(theta_raw, 1.0));
    if (theta_raw > 1.0)
        report.best_witness =
            DeviationWitness{best_coalition, ExtReal::from_raw(theta_raw), WitnessKind::kFjr};
    return report;
}

std::pair<ExtReal, std::optional<DeviationWitness>> exact_fjr_approximation(
    const Clustering& clustering, const ProblemSpec& spec, const LossModel& model) {
    if (clustering.num_agents() != spec.n || model.size() != spec.n)
        throw std::invalid_argument("exact_fjr_approximation: size mismatch");
    require_enumeration_size(spec.n, "exact_fjr_approximation");

    const std::vector<double> closs = clustering_losses(clustering, model);
    BestCoalition best;

    if (model.kind() == LossKind::kArbitrary) {
        scan_masks(spec.n, spec.tau, best, [&](std::uint32_t mask) {
            double before = kInf;
            double after = 0.0;
            for (int a = 0; a < spec.n; ++a) {
                if (!(mask & (1u << a))) continue;
                before = std::min(before, closs[static_cast<size_t>(a)]);
                after = std::max(after, model.loss_mask(a, mask).raw());
            }
            return raw_improvement_ratio(before, after);
        });
        return finish_search(best, WitnessKind::kFjr);
    }

    const bool maximum = model.kind() == LossKind::kMaximum;
    const std::vector<int> pool = full_pool(spec.n);
    detail::SubsetWalker walker(model.metric(), pool);
    const int max_size = maximum ? spec.tau : spec.n;
    walker.walk(spec.tau, max_size,
                [&](const std::vector<int>& members, const std::vector<double>& sums,
                    const std::vector<double>& maxs, std::uint32_t mask) {
                    const int size = static_cast<int>(members.size());
                    double before = kInf;
                    double after = 0.0;
                    for (int idx = 0; idx < size; ++idx) {
                        before = std::min(before, closs[static_cast<size_t>(members[idx])]);
                        after = std::max(after, maximum ? maxs[static_cast<size_t>(idx)]
                                                        : sums[static_cast<size_t>(idx)]);
                    }
                    if (!maximum) after /= static_cast<double>(size);
                    best.consider(raw_improvement_ratio(before, after), mask);
                    // Once a member with zero clustering loss is in, every
                    // superset scores exactly 1; skip them.
                    return before != 0.0;
                });

    if (maximum) {
        // Whole clusters of size >= tau are probed as well; shrinking below a
        // cluster never changes its members' clustering losses.
        for (int slot = 0; slot < clustering.num_slots(); ++slot) {
            const auto& members = clustering.cluster(slot);
            if (static_cast<int>(members.size()) < spec.tau) continue;
            best.consider(fjr_ratio(clustering, members, model).raw(), agents_to_mask(members));
        }
    }
    return finish_search(best, WitnessKind::kFjr);
}

std::pair<ExtReal, std::optional<DeviationWitness>> exact_core_approximation(
    const Clustering& clustering, const ProblemSpec& spec, const LossModel& model) {
    if (clustering.num_agents() != spec.n || model.size() != spec.n)
        throw std::invalid_argument("exact_core_approximation: size mismatch");
    require_enumeration_size(spec.n, "exact_core_approximation");

    const std::vector<double> closs = clustering_losses(clustering, model);
    BestCoalition best;

    if (model.kind() == LossKind::kArbitrary) {
        scan_masks(spec.n, spec.tau, best, [&](std::uint32_t mask) {
            double worst = kInf;
            for (int a = 0; a < spec.n; ++a) {
                if (!(mask & (1u << a))) continue;
                worst = std::min(worst, raw_improvement_ratio(closs[static_cast<size_t>(a)],
                                                              model.loss_mask(a, mask).raw()));
            }
            return worst;
        });
        return finish_search(best, WitnessKind::kCore);
    }

    const bool maximum = model.kind() == LossKind::kMaximum;
    const std::vector<int> pool = full_pool(spec.n);
    detail::SubsetWalker walker(model.metric(), pool);
    walker.walk(spec.tau, spec.n,
                [&](const std::vector<int>& members, const std::vector<double>& sums,
                    const std::vector<double>& maxs, std::uint32_t mask) {
                    const int size = static_cast<int>(members.size());
                    double worst = kInf;
                    bool zero_before = false;
                    for (int idx = 0; idx < size; ++idx) {
                        const double before = closs[static_cast<size_t>(members[idx])];
                        const double after = maximum
                                                 ? maxs[static_cast<size_t>(idx)]
                                                 : sums[static_cast<size_t>(idx)] / size;
                        worst = std::min(worst, raw_improvement_ratio(before, after));
                        zero_before = zero_before || before == 0.0;
                    }
                    best.consider(worst, mask);
                    // Maximum-loss ratios only fall as coalitions grow, and a
                    // zero-loss member caps every superset at 1.
                    return !maximum && !zero_before;
                });
    return finish_search(best, WitnessKind::kCore);
}

std::optional<DeviationWitness> bicriteria_core_check(const Clustering& clustering,
                                                      const ProblemSpec& spec,
                                                      const LossModel& model, double alpha,
                                                      double delta) {
    if (delta < 1.0) throw std::invalid_argument("bicriteria_core_check: delta must be >= 1");
    if (clustering.num_agents() != spec.n || model.size() != spec.n)
        throw std::invalid_argument("bicriteria_core_check: size mismatch");
    require_enumeration_size(spec.n, "bicriteria_core_check");

    const int min_size = std::max(
        1, static_cast<int>(std::ceil(delta * spec.n / static_cast<double>(spec.k) - 1e-9)));
    if (min_size > spec.n) return std::nullopt;

    const std::vector<double> closs = clustering_losses(clustering, model);
    bool have = false;
    double best_ratio = 0.0;
    std::uint32_t best_mask = 0;
    auto consider = [&](double worst, std::uint32_t mask) {
        if (worst > alpha && (!have || mask < best_mask)) {
            have = true;
            best_ratio = worst;
            best_mask = mask;
        }
    };

    if (model.kind() == LossKind::kArbitrary) {
        const std::uint32_t full = (1u << spec.n) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) < min_size) continue;
            double worst = kInf;
            for (int a = 0; a < spec.n; ++a) {
                if (!(mask & (1u << a))) continue;
                worst = std::min(worst, raw_improvement_ratio(closs[static_cast<size_t>(a)],
                                                              model.loss_mask(a, mask).raw()));
            }
            consider(worst, mask);
        }
    } else {
        const bool maximum = model.kind() == LossKind::kMaximum;
        const std::vector<int> pool = full_pool(spec.n);
        detail::SubsetWalker walker(model.metric(), pool);
        walker.walk(min_size, spec.n,
                    [&](const std::vector<int>& members, const std::vector<double>& sums,
                        const std::vector<double>& maxs, std::uint32_t mask) {
                        const int size = static_cast<int>(members.size());
                        double worst = kInf;
                        for (int idx = 0; idx < size; ++idx) {
                            const double before = closs[static_cast<size_t>(members[idx])];
                            const double after = maximum
                                                     ? maxs[static_cast<size_t>(idx)]
                                                     : sums[static_cast<size_t>(idx)] / size;
                            worst = std::min(worst, raw_improvement_ratio(before, after));
                        }
                        consider(worst, mask);
                        return true;
                    });
    }

    if (!have) return std::nullopt;
    return DeviationWitness{mask_to_agents(best_mask), ExtReal::from_raw(best_ratio),
                            WitnessKind::kCore};
}

bool symmetry_reduced_core_emptiness(const MetricInstance& metric, std::span<const int> groups,
                                     LossKind kind, const ProblemSpec& spec, ExtReal alpha) {
    if (kind == LossKind::kArbitrary)
        throw std::invalid_argument("symmetry_reduced_core_emptiness: needs a metric loss");
    const int n = metric.size();
    if (static_cast<int>(groups.size()) != n || spec.n != n)
        throw std::invalid_argument("symmetry_reduced_core_emptiness: size mismatch");

    int g = 0;
    for (int label : groups) {
        if (label < 0) throw std::invalid_argument("symmetry_reduced_core_emptiness: bad label");
        g = std::max(g, label + 1);
    }
    std::vector<int> group_size(static_cast<size_t>(g), 0);
    std::vector<int> representative(static_cast<size_t>(g), -1);
    for (int agent = 0; agent < n; ++agent) {
        const int label = groups[static_cast<size_t>(agent)];
        ++group_size[static_cast<size_t>(label)];
        if (representative[static_cast<size_t>(label)] == -1)
            representative[static_cast<size_t>(label)] = agent;
    }
    for (int j = 0; j < g; ++j) {
        if (group_size[static_cast<size_t>(j)] == 0)
            throw std::invalid_argument("symmetry_reduced_core_emptiness: empty group label");
    }
    // Colocation must be genuine: zero inside a group, uniform across groups.
    std::vector<double> gd(static_cast<size_t>(g) * g, 0.0);
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
            gd[static_cast<size_t>(a) * g + b] = metric.raw(representative[static_cast<size_t>(a)],
                                                            representative[static_cast<size_t>(b)]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double expected = gd[static_cast<size_t>(groups[static_cast<size_t>(i)]) * g +
                                       groups[static_cast<size_t>(j)]];
            if (metric.raw(i, j) != expected)
                throw std::invalid_argument(
                    "symmetry_reduced_core_emptiness: instance lacks colocated group structure");
        }
    }

    const bool maximum = kind == LossKind::kMaximum;
    const double alpha_raw = alpha.raw();

    // Loss of a group-j agent inside a set described by per-group counts.
    auto counted_loss = [&](int j, const std::vector<int>& counts, int total) {
        if (maximum) {
            double mx = 0.0;
            for (int j2 = 0; j2 < g; ++j2)
                if (counts[static_cast<size_t>(j2)] > 0)
                    mx = std::max(mx, gd[static_cast<size_t>(j) * g + j2]);
            return mx;
        }
        double s = 0.0;
        for (int j2 = 0; j2 < g; ++j2) {
            const int c2 = counts[static_cast<size_t>(j2)];
            if (c2 > 0) s += c2 * gd[static_cast<size_t>(j) * g + j2];  // 0 * inf is nan
        }
        return s / static_cast<double>(total);
    };

    // Candidate coalitions, one per count profile with at least tau members.
    struct Profile {
        std::vector<int> counts;
        std::vector<double> loss;  // per group
    };
    std::vector<Profile> profiles;
    {
        std::vector<int> counts(static_cast<size_t>(g), 0);
        auto rec = [&](auto&& self, int j, int total) -> void {
            if (j == g) {
                if (total < spec.tau) return;
                Profile p;
                p.counts = counts;
                p.loss.resize(static_cast<size_t>(g));
                for (int j2 = 0; j2 < g; ++j2)
                    p.loss[static_cast<size_t>(j2)] = counted_loss(j2, counts, total);
                profiles.push_back(std::move(p));
                return;
            }
            for (int c = 0; c <= group_size[static_cast<size_t>(j)]; ++c) {
                counts[static_cast<size_t>(j)] = c;
                self(self, j + 1, total + c);
            }
            counts[static_cast<size_t>(j)] = 0;
        };
        rec(rec, 0, 0);
    }

    // Walk every clustering (a g x k count matrix); each must admit a
    // deviating profile, otherwise the core is nonempty at this alpha.
    std::vector<int> cell(static_cast<size_t>(g) * spec.k, 0);
    std::vector<int> cluster_total(static_cast<size_t>(spec.k), 0);
    std::vector<double> cluster_loss(static_cast<size_t>(g) * spec.k, 0.0);

    auto clustering_defeated = [&]() {
        for (int t = 0; t < spec.k; ++t) {
            cluster_total[static_cast<size_t>(t)] = 0;
            for (int j = 0; j < g; ++j)
                cluster_total[static_cast<size_t>(t)] += cell[static_cast<size_t>(j) * spec.k + t];
        }
        std::vector<int> slot_counts(static_cast<size_t>(g));
        for (int t = 0; t < spec.k; ++t) {
            if (cluster_total[static_cast<size_t>(t)] == 0) continue;
            for (int j = 0; j < g; ++j)
                slot_counts[static_cast<size_t>(j)] = cell[static_cast<size_t>(j) * spec.k + t];
            for (int j = 0; j < g; ++j)
                cluster_loss[static_cast<size_t>(j) * spec.k + t] =
                    counted_loss(j, slot_counts, cluster_total[static_cast<size_t>(t)]);
        }
        for (const Profile& p : profiles) {
            bool feasible = true;
            for (int j = 0; j < g && feasible; ++j) {
                const int wanted = p.counts[static_cast<size_t>(j)];
                if (wanted == 0) continue;
                int eligible = 0;
                for (int t = 0; t < spec.k; ++t) {
                    const int have_agents = cell[static_cast<size_t>(j) * spec.k + t];
                    if (have_agents == 0) continue;
                    const double before = cluster_loss[static_cast<size_t>(j) * spec.k + t];
                    if (raw_improvement_ratio(before, p.loss[static_cast<size_t>(j)]) > alpha_raw)
                        eligible += have_agents;
                }
                feasible = eligible >= wanted;
            }
            if (feasible) return true;
        }
        return false;
    };

    bool all_defeated = true;
    auto rec = [&](auto&& self, int j) -> void {
        if (!all_defeated) return;
        if (j == g) {
            if (!clustering_defeated()) all_defeated = false;
            return;
        }
        // Distribute group j's agents over the k cluster slots.
        auto fill = [&](auto&& fill_self, int t, int remaining) -> void {
            if (!all_defeated) return;
            if (t == spec.k - 1) {
                cell[static_cast<size_t>(j) * spec.k + t] = remaining;
                self(self, j + 1);
                return;
            }
            for (int c = 0; c <= remaining; ++c) {
                cell[static_cast<size_t>(j) * spec.k + t] = c;
                fill_self(fill_self, t + 1, remaining - c);
            }
        };
        fill(fill, 0, group_size[static_cast<size_t>(j)]);
    };
    rec(rec, 0);
    return all_defeated;
}

namespace {

void write_members(std::ostream& out, std::span<const int> members) {
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out << ' ';
        out << members[i];
    }
}

}  // namespace

void write_audit_report(std::ostream& out, const AuditReport& report, WitnessKind kind) {
    out << "theta,witness_members,kind,iterations\n";
    out << report.theta.to_string() << ',';
    if (report.best_witness) write_members(out, report.best_witness->coalition);
    out << ',' << to_string(kind) << ',' << report.trace.size() << '\n';
    for (const auto& row : report.trace) {
        out << row.iteration << ',';
        write_members(out, row.coalition);
        out << ',' << row.ratio.to_string() << ',' << row.removed_agent << '\n';
    }
}

}  // namespace fairclust
