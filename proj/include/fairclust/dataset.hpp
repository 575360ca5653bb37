#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fairclust {

// Feature rows with optional per-row sampling weights.
struct Dataset {
    std::vector<std::vector<double>> rows;
    std::optional<std::vector<double>> weights;
    std::vector<std::string> feature_names;

    int size() const { return static_cast<int>(rows.size()); }
};

// Reads a CSV with a header row. `features` selects columns by name (empty
// means every column except the weight column). Non-numeric columns with at
// most two distinct values are encoded as 0/1 in lexicographic value order.
// Every feature is z-score standardized; zero-variance features become all
// zeros. The weight column, when named, is extracted untouched.
Dataset load_csv(std::istream& in, const std::vector<std::string>& features = {},
                 const std::string& weight_column = "");
Dataset load_csv_file(const std::string& path, const std::vector<std::string>& features = {},
                      const std::string& weight_column = "");

// Draws m distinct rows without replacement, each draw proportional to the
// remaining rows' weights (uniform when weights are absent or exhausted).
// Deterministic for a fixed seed.
Dataset weighted_sample(const Dataset& dataset, int m, std::uint64_t seed);

}  // namespace fairclust
