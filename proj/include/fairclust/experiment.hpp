#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairclust/dataset.hpp"
#include "fairclust/loss.hpp"

namespace fairclust {

enum class AuditMode { kExact, kApproximate, kInterval };

std::string to_string(AuditMode mode);
AuditMode parse_audit_mode(const std::string& name);

inline constexpr int kBaselineRunsPerTrial = 20;

// Experiment protocol: per trial draw a weighted sample, cluster it with each
// algorithm for each k, and measure accuracy objectives plus fairness.
// Greedy capture is deterministic and runs once per sample; randomized
// baselines are averaged over kBaselineRunsPerTrial seeded runs.
struct ExperimentConfig {
    std::vector<std::string> algorithms = {"greedy-capture", "kmeans-pp", "kmedoids"};
    std::vector<int> k_values = {2, 3, 4, 5, 6, 7, 8};
    std::vector<LossKind> losses = {LossKind::kAverage, LossKind::kMaximum};
    int sample_size = 16;
    int num_trials = 40;
    std::uint64_t seed = 0;
    AuditMode audit_mode = AuditMode::kExact;
};

// One measurement. `trial` is a 0-based number, or "mean"/"std" for
// aggregates; `loss` is "average"/"maximum" for fairness measures and "-"
// for loss-independent ones.
struct ResultRow {
    std::string algorithm;
    int k;
    std::string trial;
    std::string loss;
    std::string measure;
    double value;
};

std::vector<ResultRow> run_experiment(const ExperimentConfig& config, const Dataset& dataset);

// CSV with header "algorithm,k,trial,loss,measure,value"; values print as
// %.12g with "inf" for infinities, so emission is byte-deterministic.
void emit_results(std::ostream& out, const std::vector<ResultRow>& rows);
void emit_results_file(const std::string& path, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results(std::istream& in);

// Flat key=value configuration, one pair per line, '#' comments. Keys:
// algorithms, k_values, losses, sample_size, num_trials, seed, audit_mode
// (lists are comma-separated).
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace fairclust
