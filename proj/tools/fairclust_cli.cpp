// Command-line front end: cluster one instance, audit a clustering, run the
// experiment harness, or export a generated fixture instance.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fairclust/audit.hpp"
#include "fairclust/baselines.hpp"
#include "fairclust/cohesive.hpp"
#include "fairclust/dataset.hpp"
#include "fairclust/experiment.hpp"
#include "fairclust/fixtures.hpp"
#include "fairclust/instance_io.hpp"
#include "fairclust/loss.hpp"

namespace {

using namespace fairclust;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct InputData {
    LoadedInstance instance;
    std::optional<std::vector<std::vector<double>>> rows;
};

InputData load_input(const std::string& path, const std::vector<std::string>& features,
                     const std::string& weight_column, int k_flag) {
    if (ends_with(path, ".csv")) {
        Dataset ds = load_csv_file(path, features, weight_column);
        MetricInstance metric = metric_from_points(ds.rows);
        const int n = ds.size();
        const int k = k_flag > 0 ? k_flag : 1;
        return InputData{LoadedInstance{n, k, std::move(metric), ds.rows, std::nullopt}, ds.rows};
    }
    LoadedInstance inst = read_instance_file(path);
    if (k_flag > 0) inst.k = k_flag;
    auto rows = inst.rows;
    return InputData{std::move(inst), std::move(rows)};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

int run_cluster(const std::string& algo, const std::string& input, const std::string& output,
                int k_flag, const std::string& loss_name, std::uint64_t seed,
                const std::vector<std::string>& features, const std::string& weight_column) {
    InputData data = load_input(input, features, weight_column, k_flag);
    const ProblemSpec spec(data.instance.n, data.instance.k);

    Clustering clustering = [&]() {
        if (algo == "greedy-capture") return greedy_capture(spec, data.instance.metric);
        if (algo == "gcc-exact") {
            LossModel model = data.instance.arbitrary
                                  ? *data.instance.arbitrary
                                  : LossModel::with_kind(parse_loss_kind(loss_name),
                                                         data.instance.metric);
            return greedy_cohesive_clustering(CohesiveSubroutine::kExactOracle, spec, model);
        }
        if (algo == "smallest-diameter") {
            LossModel model = LossModel::average(data.instance.metric);
            return greedy_cohesive_clustering(CohesiveSubroutine::kSmallestDiameter, spec, model);
        }
        if (algo == "kmeans-pp") {
            if (!data.rows)
                throw std::runtime_error("kmeans-pp needs point coordinates (points or CSV input)");
            return kmeans_pp(*data.rows, spec.k, SeededRun{seed});
        }
        if (algo == "kmedoids") return kmedoids(data.instance.metric, spec.k, SeededRun{seed});
        throw std::runtime_error("unknown algorithm '" + algo + "'");
    }();

    std::ofstream file;
    write_clustering(open_output(file, output), clustering);
    return 0;
}

int run_audit(const std::string& input, const std::string& clustering_path,
              const std::string& fairness, const std::string& loss_name,
              const std::string& audit_mode_name, const std::string& output) {
    InputData data = load_input(input, {}, "", 0);
    const ProblemSpec spec(data.instance.n, data.instance.k);
    const LossModel model = data.instance.arbitrary
                                ? *data.instance.arbitrary
                                : LossModel::with_kind(parse_loss_kind(loss_name),
                                                       data.instance.metric);
    const Clustering clustering = read_clustering_file(clustering_path, data.instance.n);
    const AuditMode mode = parse_audit_mode(audit_mode_name);

    std::ofstream file;
    std::ostream& out = open_output(file, output);

    if (mode == AuditMode::kExact) {
        const auto [value, witness] = fairness == "core"
                                          ? exact_core_approximation(clustering, spec, model)
                                          : exact_fjr_approximation(clustering, spec, model);
        AuditReport report;
        report.theta = value;
        report.best_witness = witness;
        write_audit_report(out, report,
                           fairness == "core" ? WitnessKind::kCore : WitnessKind::kFjr);
        return 0;
    }
    if (fairness == "core")
        throw std::runtime_error("core auditing is exact-only; use --audit-mode exact");
    const AuditReport report =
        audit_fjr(CohesiveSubroutine::kSmallestAgentBall, clustering, spec, model);
    write_audit_report(out, report, WitnessKind::kFjr);
    if (mode == AuditMode::kInterval) {
        const double lambda = parse_loss_kind(loss_name) == LossKind::kMaximum ? 2.0 : 4.0;
        out << "interval," << report.theta.to_string() << ','
            << report.theta.scaled(lambda).to_string() << '\n';
    }
    return 0;
}

int run_fixture(const std::string& name, const std::string& output, int n, int k, double alpha,
                double eps, double big_m, const std::string& variant, double separation) {
    std::ofstream file;
    std::ostream& out = open_output(file, output);

    if (name == "arb-core-empty") {
        const FixtureInstance fx = gen_arbitrary_core_empty();
        write_instance_arbitrary(out, fx.model, fx.spec.k);
    } else if (name == "avg-core-lb") {
        const FixtureInstance fx = gen_average_core_lower_bound(k > 0 ? k : 2, alpha);
        write_instance_matrix(out, fx.metric, fx.spec.k);
    } else if (name == "tightness-line") {
        const TightnessVariant v = variant == "subroutine" ? TightnessVariant::kSubroutineBound
                                                           : TightnessVariant::kCoreBound;
        const FixtureInstance fx = gen_tightness_line(n > 0 ? n : 16, eps, big_m, v);
        std::vector<std::vector<double>> rows;
        for (double p : *fx.metric.positions()) rows.push_back({p});
        write_instance_points(out, rows, fx.spec.k);
    } else if (name == "line-avg-core-empty") {
        const FixtureInstance fx = gen_line_average_core_empty(n > 0 ? n : 26);
        std::vector<std::vector<double>> rows;
        for (double p : *fx.metric.positions()) rows.push_back({p});
        write_instance_points(out, rows, fx.spec.k);
    } else if (name == "incompatibility") {
        const FixtureInstance fx = gen_incompatibility(n > 0 ? n : 12, k > 0 ? k : 2);
        write_instance_matrix(out, fx.metric, fx.spec.k);
    } else if (name == "incompatibility-embedded") {
        const auto rows = embed_incompatibility(n > 0 ? n : 12, k > 0 ? k : 2, separation);
        write_instance_points(out, rows, k > 0 ? k : 2);
    } else {
        throw std::runtime_error("unknown fixture '" + name + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proportionally fair non-centroid clustering toolkit"};
    app.require_subcommand(1);

    std::string algo = "greedy-capture";
    std::string input;
    std::string output;
    std::string loss_name = "average";
    std::string fairness = "fjr";
    std::string audit_mode = "exact";
    std::string clustering_path;
    std::string config_path;
    std::string weight_column;
    std::string fixture_name;
    std::string variant = "core";
    std::vector<std::string> features;
    std::uint64_t seed = 0;
    int k = 0;
    int n = 0;
    int sample_size = 0;
    int trials = -1;
    double alpha = 1.2;
    double eps = 1e-3;
    double big_m = 1e6;
    double separation = 1e6;

    auto* cluster = app.add_subcommand("cluster", "Cluster one instance and print the clustering");
    cluster->add_option("--algo", algo,
                        "greedy-capture | gcc-exact | smallest-diameter | kmeans-pp | kmedoids");
    cluster->add_option("--input", input, "instance file or CSV")->required();
    cluster->add_option("--k", k, "number of clusters (overrides the instance header)");
    cluster->add_option("--loss", loss_name, "average | maximum (for gcc-exact)");
    cluster->add_option("--seed", seed, "seed for randomized algorithms");
    cluster->add_option("--output", output, "clustering file (default stdout)");
    cluster->add_option("--features", features, "CSV feature columns (default: all)");
    cluster->add_option("--weight-col", weight_column, "CSV weight column");

    auto* audit = app.add_subcommand("audit", "Audit a clustering's fairness");
    audit->add_option("--input", input, "instance file")->required();
    audit->add_option("--clustering", clustering_path, "clustering file")->required();
    audit->add_option("--fairness", fairness, "fjr | core");
    audit->add_option("--loss", loss_name, "average | maximum");
    audit->add_option("--audit-mode", audit_mode, "exact | approximate | interval");
    audit->add_option("--output", output, "report file (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "Run the benchmark protocol on a CSV");
    experiment->add_option("--config", config_path, "key=value config file");
    experiment->add_option("--input", input, "CSV dataset")->required();
    experiment->add_option("--output", output, "results CSV (default stdout)");
    experiment->add_option("--seed", seed, "base seed (overrides config)");
    experiment->add_option("--trials", trials, "number of trials (overrides config)");
    experiment->add_option("--sample-size", sample_size, "sample size (overrides config)");
    experiment->add_option("--audit-mode", audit_mode, "exact | approximate | interval");
    experiment->add_option("--features", features, "CSV feature columns (default: all)");
    experiment->add_option("--weight-col", weight_column, "CSV weight column");

    auto* fixture = app.add_subcommand("fixture", "Export a generated instance");
    fixture->add_option("--name", fixture_name,
                        "arb-core-empty | avg-core-lb | tightness-line | line-avg-core-empty | "
                        "incompatibility | incompatibility-embedded")
        ->required();
    fixture->add_option("--output", output, "instance file (default stdout)");
    fixture->add_option("--n", n, "agent count");
    fixture->add_option("--k", k, "cluster count");
    fixture->add_option("--alpha", alpha, "target approximation factor");
    fixture->add_option("--eps", eps, "location offset");
    fixture->add_option("--big-m", big_m, "far-left coordinate magnitude");
    fixture->add_option("--variant", variant, "core | subroutine (tightness-line)");
    fixture->add_option("--separation", separation, "embedded distance for inf");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cluster->parsed())
            return run_cluster(algo, input, output, k, loss_name, seed, features, weight_column);
        if (audit->parsed())
            return run_audit(input, clustering_path, fairness, loss_name, audit_mode, output);
        if (experiment->parsed()) {
            ExperimentConfig config =
                config_path.empty() ? ExperimentConfig{} : parse_config_file(config_path);
            if (experiment->count("--seed")) config.seed = seed;
            if (trials >= 0) config.num_trials = trials;
            if (sample_size > 0) config.sample_size = sample_size;
            if (experiment->count("--audit-mode")) config.audit_mode = parse_audit_mode(audit_mode);
            const Dataset ds = load_csv_file(input, features, weight_column);
            const auto rows = run_experiment(config, ds);
            std::ofstream file;
            emit_results(open_output(file, output), rows);
            return 0;
        }
        if (fixture->parsed())
            return run_fixture(fixture_name, output, n, k, alpha, eps, big_m, variant, separation);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
