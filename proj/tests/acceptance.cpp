// Acceptance suite: runs every top-level guarantee end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fairclust/audit.hpp"
#include "fairclust/baselines.hpp"
#include "fairclust/cohesive.hpp"
#include "fairclust/dataset.hpp"
#include "fairclust/experiment.hpp"
#include "fairclust/fixtures.hpp"
#include "fairclust/random.hpp"

using namespace fairclust;

namespace {

int g_failures = 0;

class Criterion {
  public:
    explicit Criterion(std::string name) : name_(std::move(name)) {
        start_ = std::chrono::steady_clock::now();
    }

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            details_.push_back(detail);
        }
    }

    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("%s criterion %s (%.1fs)\n", ok_ ? "PASS" : "FAIL", name_.c_str(),
                    static_cast<double>(elapsed) / 1000.0);
        for (const auto& n : notes_) std::printf("       note: %s\n", n.c_str());
        for (const auto& d : details_) std::printf("       detail: %s\n", d.c_str());
        if (!ok_) ++g_failures;
    }

  private:
    std::string name_;
    bool ok_ = true;
    std::vector<std::string> details_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::vector<double>> random_rows(Rng& rng, int n, int dim, double lo, double hi) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(dim)));
    for (auto& row : rows)
        for (auto& v : row) v = lo + (hi - lo) * rng.next_double();
    return rows;
}

// ---------------------------------------------------------------------------

void criterion_1_core_emptiness_certificates() {
    Criterion c("1 (core emptiness certificates)");

    // (a) Arbitrary losses: every 2-clustering of the 4-agent instance has an
    // infinite exact core approximation.
    const FixtureInstance arb = gen_arbitrary_core_empty();
    for (int code = 0; code < 16; ++code) {
        std::vector<int> assignment(4);
        for (int i = 0; i < 4; ++i) assignment[static_cast<size_t>(i)] = (code >> i) & 1;
        const Clustering clustering = Clustering::from_assignment(2, assignment);
        const ExtReal value = exact_core_approximation(clustering, arb.spec, arb.model).first;
        c.expect(value == ExtReal::inf(),
                 "arbitrary-loss clustering code " + std::to_string(code) +
                     " has finite core approximation " + value.to_string());
    }

    // (b) Average loss: no 1.2-core clustering exists at n = 12. The
    // construction parameterized by alpha only reaches improvement factors
    // >= alpha (equality is attained by splitting both middle agents off),
    // so the instance is built at parameter 1.22 -- still n = 12 -- and
    // audited at the strict 1.2 threshold.
    const FixtureInstance avg_lb = gen_average_core_lower_bound(2, 1.22);
    c.expect(avg_lb.spec.n == 12, "average-loss lower bound instance should have n = 12");
    c.expect(symmetry_reduced_core_emptiness(avg_lb.metric, *avg_lb.groups, avg_lb.model.kind(),
                                             avg_lb.spec, ExtReal::finite(1.2)),
             "no 1.2-core clustering should exist for the average-loss construction");
    c.note("lower-bound instance built at parameter 1.22; at parameter 1.2 the clustering "
           "separating the two middle agents sits exactly on the 1.2 boundary");

    // (c) Line, average loss: no core clustering exists at n = 26.
    const FixtureInstance line = gen_line_average_core_empty(26);
    c.expect(symmetry_reduced_core_emptiness(line.metric, *line.groups, line.model.kind(),
                                             line.spec, ExtReal::finite(1.0)),
             "no exact-core clustering should exist for the 26-agent line construction");
}

void criterion_2_greedy_capture_core_bounds() {
    Criterion c("2 (greedy capture core bounds)");
    Rng rng(20250801);
    int checked = 0;
    double worst_max = 0.0;
    double worst_avg_slack = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 9 + rng.next_int(7);  // 9..15
        const int k = 2 + rng.next_int(2);  // 2..3
        const ProblemSpec spec(n, k);
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 2, 0.0, 10.0));
        const Clustering clustering = greedy_capture(spec, metric);

        const double vmax =
            exact_core_approximation(clustering, spec, LossModel::maximum(metric)).first.raw();
        const double vavg =
            exact_core_approximation(clustering, spec, LossModel::average(metric)).first.raw();
        const double avg_bound = 2.0 * spec.tau - 3.0;
        worst_max = std::max(worst_max, vmax);
        worst_avg_slack = std::max(worst_avg_slack, vavg / avg_bound);
        if (vmax > 2.0 * (1 + 1e-9))
            c.expect(false, "maximum-loss core " + fmt(vmax) + " exceeds 2 (n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
        if (vavg > avg_bound * (1 + 1e-9))
            c.expect(false, "average-loss core " + fmt(vavg) + " exceeds " + fmt(avg_bound));
        ++checked;
    }
    c.note(std::to_string(checked) + " instances; worst maximum-loss core " + fmt(worst_max) +
           ", worst average-loss core/bound " + fmt(worst_avg_slack));
}

void criterion_3_core_bound_tightness() {
    Criterion c("3 (greedy core bound tightness)");
    const int n = 16;
    const double eps = 1e-3;
    const FixtureInstance fx = gen_tightness_line(n, eps, 1e6, TightnessVariant::kCoreBound);
    const Clustering clustering = greedy_capture(fx.spec, fx.metric);

    // Witness coalition: both agents at -1, the pack at 0, and the agent at
    // eps (ids 1..8); the agent at eps realizes the worst-case factors.
    const std::vector<int> coalition = {1, 2, 3, 4, 5, 6, 7, 8};
    const int probe = 8;

    const LossModel mx = LossModel::maximum(fx.metric);
    const auto& home = clustering.cluster(clustering.cluster_of(probe));
    const double factor_max = mx.loss(probe, home).raw() / mx.loss(probe, coalition).raw();
    c.expect(std::abs(factor_max - 2.0) <= 0.05 * 2.0,
             "maximum-loss improvement factor " + fmt(factor_max) + " not within 5% of 2");

    const LossModel avg = LossModel::average(fx.metric);
    const double target = n / 2.0 - 1.5;
    const double factor_avg = avg.loss(probe, home).raw() / avg.loss(probe, coalition).raw();
    c.expect(std::abs(factor_avg - target) <= 0.05 * target,
             "average-loss improvement factor " + fmt(factor_avg) + " not within 5% of " +
                 fmt(target));
    c.note("observed factors: maximum " + fmt(factor_max) + ", average " + fmt(factor_avg));
}

void criterion_4_subroutine_approximation() {
    Criterion c("4 (ball subroutine approximation and tightness)");
    Rng rng(20250802);
    std::vector<int> pool;
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 6 + rng.next_int(9);  // 6..14
        const int k = 2 + rng.next_int(3);  // 2..4
        const int tau = ProblemSpec(n, k).tau;
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 2, 0.0, 10.0));
        pool.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
        const std::vector<int> ball = smallest_agent_ball(pool, metric, tau);

        for (LossKind kind : {LossKind::kAverage, LossKind::kMaximum}) {
            const LossModel model = LossModel::with_kind(kind, metric);
            const double lambda = kind == LossKind::kMaximum ? 2.0 : 4.0;
            const double ball_obj = cohesive_objective(ball, model).raw();
            const double best_obj =
                cohesive_objective(most_cohesive_cluster_exact(pool, model, tau), model).raw();
            if (ball_obj > lambda * best_obj * (1 + 1e-9))
                c.expect(false, to_string(kind) + " ball objective " + fmt(ball_obj) +
                                    " exceeds " + fmt(lambda) + " x " + fmt(best_obj));
        }
    }

    // Tightness on the dedicated line instance at eps = 1e-3.
    const FixtureInstance fx =
        gen_tightness_line(16, 1e-3, 1e6, TightnessVariant::kSubroutineBound);
    pool.resize(16);
    for (int i = 0; i < 16; ++i) pool[static_cast<size_t>(i)] = i;
    const std::vector<int> ball = smallest_agent_ball(pool, fx.metric, 8);

    const LossModel mx = LossModel::maximum(fx.metric);
    const double ratio_max =
        cohesive_objective(ball, mx).raw() /
        cohesive_objective(most_cohesive_cluster_exact(pool, mx, 8), mx).raw();
    c.expect(ratio_max > 1.9, "maximum-loss tightness ratio " + fmt(ratio_max) + " <= 1.9");

    const LossModel avg = LossModel::average(fx.metric);
    const double ratio_avg =
        cohesive_objective(ball, avg).raw() /
        cohesive_objective(most_cohesive_cluster_exact(pool, avg, 8), avg).raw();
    c.expect(ratio_avg > 3.5, "average-loss tightness ratio " + fmt(ratio_avg) + " <= 3.5");
    c.note("observed tightness ratios at n=16: maximum " + fmt(ratio_max) + ", average " +
           fmt(ratio_avg) + " (the average ratio approaches 4 only as n grows; at n=16 its " +
           "exact value is 13(1-eps)/(4+7eps) ~= 3.24, so the 3.5 threshold is unreachable)");
}

void criterion_5_fjr_guarantees() {
    Criterion c("5 (FJR guarantees)");
    Rng rng(20250803);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 9 + rng.next_int(7);  // 9..15
        const int k = 2 + rng.next_int(2);
        const ProblemSpec spec(n, k);
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 2, 0.0, 10.0));
        const Clustering clustering = greedy_capture(spec, metric);

        const double vmax =
            exact_fjr_approximation(clustering, spec, LossModel::maximum(metric)).first.raw();
        const double vavg =
            exact_fjr_approximation(clustering, spec, LossModel::average(metric)).first.raw();
        if (vmax > 2.0 * (1 + 1e-9))
            c.expect(false, "maximum-loss FJR " + fmt(vmax) + " exceeds 2");
        if (vavg > 4.0 * (1 + 1e-9))
            c.expect(false, "average-loss FJR " + fmt(vavg) + " exceeds 4");
    }

    // The exact-oracle variant is exactly FJR.
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 6 + rng.next_int(7);  // 6..12
        const int k = 2 + rng.next_int(2);
        const ProblemSpec spec(n, k);
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 2, 0.0, 10.0));
        for (LossKind kind : {LossKind::kAverage, LossKind::kMaximum}) {
            const LossModel model = LossModel::with_kind(kind, metric);
            const Clustering clustering =
                greedy_cohesive_clustering(CohesiveSubroutine::kExactOracle, spec, model);
            const double value = exact_fjr_approximation(clustering, spec, model).first.raw();
            if (std::abs(value - 1.0) > 1e-9)
                c.expect(false, "exact-oracle clustering has FJR " + fmt(value) + " != 1 (" +
                                    to_string(kind) + ", n=" + std::to_string(n) + ")");
        }
    }
}

void criterion_6_auditing_sandwich() {
    Criterion c("6 (FJR auditing sandwich)");
    Rng rng(20250804);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 8 + rng.next_int(7);  // 8..14
        const int k = 2 + rng.next_int(2);
        const ProblemSpec spec(n, k);
        const auto rows = random_rows(rng, n, 2, 0.0, 10.0);
        const MetricInstance metric = metric_from_points(rows);

        Clustering clustering = [&]() {
            switch (rep % 3) {
                case 0: return kmeans_pp(rows, k, SeededRun{rng.next_u64()});
                case 1: return kmedoids(metric, k, SeededRun{rng.next_u64()});
                default: {
                    std::vector<int> assignment(static_cast<size_t>(n));
                    for (auto& a : assignment) a = rng.next_int(k);
                    return Clustering::from_assignment(k, assignment);
                }
            }
        }();

        for (LossKind kind : {LossKind::kAverage, LossKind::kMaximum}) {
            const LossModel model = LossModel::with_kind(kind, metric);
            const double lambda = kind == LossKind::kMaximum ? 2.0 : 4.0;
            const double exact = exact_fjr_approximation(clustering, spec, model).first.raw();
            const double theta =
                audit_fjr(CohesiveSubroutine::kSmallestAgentBall, clustering, spec, model)
                    .theta.raw();
            if (!(theta <= exact * (1 + 1e-9)))
                c.expect(false, "theta " + fmt(theta) + " above exact " + fmt(exact));
            if (!(exact <= lambda * theta * (1 + 1e-9)))
                c.expect(false, "exact " + fmt(exact) + " above lambda*theta " +
                                    fmt(lambda * theta));
            const double theta_oracle =
                audit_fjr(CohesiveSubroutine::kExactOracle, clustering, spec, model).theta.raw();
            const bool equal = (std::isinf(theta_oracle) && std::isinf(exact)) ||
                               std::abs(theta_oracle - exact) <= 1e-9 * std::max(1.0, exact);
            if (!equal)
                c.expect(false, "exact-oracle audit " + fmt(theta_oracle) +
                                    " != exact approximation " + fmt(exact));
        }
    }
}

void criterion_7_bicriteria() {
    Criterion c("7 (bicriteria core guarantee)");
    Rng rng(20250805);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 9 + rng.next_int(7);
        const int k = 2 + rng.next_int(2);
        const ProblemSpec spec(n, k);
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 2, 0.0, 10.0));
        const Clustering clustering = greedy_capture(spec, metric);
        const LossModel model = LossModel::average(metric);
        for (double delta : {1.5, 2.0, 3.0}) {
            const double alpha = 2.0 * delta / (delta - 1.0);
            const auto witness = bicriteria_core_check(clustering, spec, model, alpha, delta);
            if (witness)
                c.expect(false, "unexpected (alpha, delta) = (" + fmt(alpha) + ", " + fmt(delta) +
                                    ") witness on n=" + std::to_string(n));
        }
    }
}

void criterion_8_line_core() {
    Criterion c("8 (line core via smallest diameter)");
    Rng rng(20250806);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 6 + rng.next_int(11);  // 6..16
        const int k = 2 + rng.next_int(3);
        const ProblemSpec spec(n, k);
        const MetricInstance metric = metric_from_points(random_rows(rng, n, 1, 0.0, 100.0));
        const LossModel model = LossModel::maximum(metric);
        const Clustering clustering =
            greedy_cohesive_clustering(CohesiveSubroutine::kSmallestDiameter, spec, model);
        const double value = exact_core_approximation(clustering, spec, model).first.raw();
        if (std::abs(value - 1.0) > 1e-9)
            c.expect(false, "line clustering has core approximation " + fmt(value) +
                                " != 1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ")");
    }
}

void criterion_9_incompatibility() {
    Criterion c("9 (classical objectives vs fairness)");
    const auto rows = embed_incompatibility(12, 2, 1e6);
    const MetricInstance metric = metric_from_points(rows);
    const ProblemSpec spec(12, 2);

    auto fairness_values = [&](const Clustering& clustering) {
        std::vector<double> values;
        for (LossKind kind : {LossKind::kAverage, LossKind::kMaximum}) {
            const LossModel model = LossModel::with_kind(kind, metric);
            values.push_back(exact_core_approximation(clustering, spec, model).first.raw());
            values.push_back(exact_fjr_approximation(clustering, spec, model).first.raw());
        }
        return values;
    };

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (const char* algo : {"kmeans-pp", "kmedoids"}) {
            const Clustering clustering = std::string(algo) == "kmeans-pp"
                                              ? kmeans_pp(rows, 2, SeededRun{seed})
                                              : kmedoids(metric, 2, SeededRun{seed});
            for (double v : fairness_values(clustering)) {
                if (!(v > 1e3))
                    c.expect(false, std::string(algo) + " seed " + std::to_string(seed) +
                                        " fairness value " + fmt(v) + " not above 1e3");
            }
        }
    }

    const Clustering gc = greedy_capture(spec, metric);
    for (double v : fairness_values(gc)) {
        if (v != 1.0)
            c.expect(false, "greedy capture fairness value " + fmt(v) + " != 1");
    }
}

void criterion_10_experiment_harness(const std::string& data_dir) {
    Criterion c("10 (experiment harness on the bundled sample)");
    const Dataset ds = load_csv_file(data_dir + "/census16.csv", {}, "fnlwgt");

    ExperimentConfig config;
    config.algorithms = {"greedy-capture", "kmeans-pp", "kmedoids"};
    config.k_values = {2, 3, 4};
    config.losses = {LossKind::kAverage, LossKind::kMaximum};
    config.sample_size = 16;
    config.num_trials = 40;
    config.seed = 20250807;
    config.audit_mode = AuditMode::kExact;

    // The waive log lines are counted rather than echoed; the CSV flag rows
    // below are the canonical record.
    std::stringstream captured_log;
    std::streambuf* old_cerr = std::cerr.rdbuf(captured_log.rdbuf());

    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_experiment(config, ds);
    const double seconds = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count() /
                           1000.0;

    // Byte determinism.
    std::stringstream first;
    emit_results(first, rows);
    std::stringstream second;
    emit_results(second, run_experiment(config, ds));
    std::cerr.rdbuf(old_cerr);

    c.note("experiment wall time " + fmt(seconds) + "s");
    c.expect(seconds < 300.0, "experiment exceeded the five-minute budget");
    c.expect(first.str() == second.str(), "repeated runs emitted different bytes");
    int logged_waivers = 0;
    for (std::string line; std::getline(captured_log, line);)
        if (line.find("waived") != std::string::npos) ++logged_waivers;

    // Per-trial qualitative ordering: greedy capture is weakly fairest, and
    // the within-2x accuracy flags are present (waivable, so only counted).
    std::map<std::tuple<std::string, int, std::string, std::string, std::string>, double> value;
    for (const auto& row : rows)
        value[{row.algorithm, row.k, row.trial, row.loss, row.measure}] = row.value;

    int waived = 0;
    for (int k : config.k_values) {
        for (int trial = 0; trial < config.num_trials; ++trial) {
            const std::string t = std::to_string(trial);
            for (const std::string loss : {"average", "maximum"}) {
                for (const std::string measure : {"core", "fjr"}) {
                    const double gc = value.at({"greedy-capture", k, t, loss, measure});
                    for (const std::string base : {"kmeans-pp", "kmedoids"}) {
                        const double bv = value.at({base, k, t, loss, measure});
                        if (!(gc <= bv * (1 + 1e-12)))
                            c.expect(false, "trial " + t + " k=" + std::to_string(k) + " " +
                                                loss + " " + measure + ": greedy-capture " +
                                                fmt(gc) + " > " + base + " " + fmt(bv));
                    }
                }
            }
            for (const std::string flag :
                 {"within2x_cost", "within2x_kmeans_obj", "within2x_kmedoids_obj"}) {
                const auto it = value.find({"greedy-capture", k, t, "-", flag});
                if (it == value.end()) {
                    c.expect(false, "missing accuracy flag " + flag);
                } else if (it->second == 0.0) {
                    ++waived;
                }
            }
        }
    }
    c.note("accuracy factor-2 flags waived on " + std::to_string(waived) + " of " +
           std::to_string(3 * 3 * config.num_trials) + " trial checks");
    c.expect(logged_waivers == 2 * waived,  // the experiment ran twice
             "waive log lines should match the flag rows");
}

void criterion_11_kmeans_identity() {
    Criterion c("11 (k-means pairwise/centroid identity)");
    Rng rng(20250808);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 3 + rng.next_int(12);
        const int k = 1 + rng.next_int(std::min(n, 5));
        const auto rows = random_rows(rng, n, 1 + rng.next_int(3), -5.0, 5.0);
        const MetricInstance metric = metric_from_points(rows);
        std::vector<int> assignment(static_cast<size_t>(n));
        for (auto& a : assignment) a = rng.next_int(k);
        const Clustering clustering = Clustering::from_assignment(k, assignment);
        const double pairwise = objective_kmeans(clustering, metric);
        const double centroid = objective_kmeans_centroid(clustering, rows);
        if (std::abs(pairwise - 2.0 * centroid) > 1e-9 * std::max(1.0, std::abs(pairwise)))
            c.expect(false, "identity violated: pairwise " + fmt(pairwise) + " vs 2x centroid " +
                                fmt(2.0 * centroid));
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : "data";

    criterion_1_core_emptiness_certificates();
    criterion_2_greedy_capture_core_bounds();
    criterion_3_core_bound_tightness();
    criterion_4_subroutine_approximation();
    criterion_5_fjr_guarantees();
    criterion_6_auditing_sandwich();
    criterion_7_bicriteria();
    criterion_8_line_core();
    criterion_9_incompatibility();
    criterion_10_experiment_harness(data_dir);
    criterion_11_kmeans_identity();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
