#include "fairclust/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fairclust/random.hpp"

namespace fairclust {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // Trim surrounding whitespace.
        const auto begin = cell.find_first_not_of(" \t\r");
        const auto end = cell.find_last_not_of(" \t\r");
        cells.push_back(begin == std::string::npos ? "" : cell.substr(begin, end - begin + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_numeric(const std::string& cell, double* out) {
    if (cell.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0' || std::isnan(v) || std::isinf(v)) return false;
    *out = v;
    return true;
}

}  // namespace

Dataset load_csv(std::istream& in, const std::vector<std::string>& features,
                 const std::string& weight_column) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_csv: empty file");
    const std::vector<std::string> header = split_csv_line(line);

    std::vector<std::vector<std::string>> cells;
    int row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto row = split_csv_line(line);
        if (row.size() != header.size())
            throw std::runtime_error("load_csv: row " + std::to_string(row_number) + " has " +
                                     std::to_string(row.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        cells.push_back(std::move(row));
    }
    if (cells.empty()) throw std::runtime_error("load_csv: no data rows");

    auto column_index = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::runtime_error("load_csv: missing column '" + name + "'");
        return static_cast<size_t>(it - header.begin());
    };

    std::vector<std::string> selected = features;
    if (selected.empty()) {
        for (const auto& name : header)
            if (name != weight_column) selected.push_back(name);
    }

    Dataset ds;
    ds.feature_names = selected;
    ds.rows.assign(cells.size(), std::vector<double>(selected.size(), 0.0));

    for (size_t f = 0; f < selected.size(); ++f) {
        const size_t col = column_index(selected[f]);
        // First pass: numeric or a binary-encodable pair of strings?
        bool numeric = true;
        for (const auto& row : cells) {
            double v;
            if (!parse_numeric(row[col], &v)) {
                numeric = false;
                break;
            }
        }
        if (numeric) {
            for (size_t r = 0; r < cells.size(); ++r) parse_numeric(cells[r][col], &ds.rows[r][f]);
        } else {
            std::set<std::string> values;
            for (const auto& row : cells) values.insert(row[col]);
            if (values.size() > 2) {
                for (size_t r = 0; r < cells.size(); ++r) {
                    double v;
                    if (!parse_numeric(cells[r][col], &v))
                        throw std::runtime_error("load_csv: non-numeric cell at row " +
                                                 std::to_string(r + 2) + ", column '" +
                                                 selected[f] + "'");
                }
            }
            // 0/1 by lexicographic value order.
            std::map<std::string, double> code;
            double next = 0.0;
            for (const auto& v : values) code[v] = next++;
            for (size_t r = 0; r < cells.size(); ++r) ds.rows[r][f] = code[cells[r][col]];
        }
    }

    // Per-feature z-score; constant features become all zeros.
    const size_t nrows = ds.rows.size();
    for (size_t f = 0; f < selected.size(); ++f) {
        double mean = 0.0;
        for (const auto& row : ds.rows) mean += row[f];
        mean /= static_cast<double>(nrows);
        double var = 0.0;
        for (const auto& row : ds.rows) var += (row[f] - mean) * (row[f] - mean);
        var /= static_cast<double>(nrows);
        const double sd = std::sqrt(var);
        for (auto& row : ds.rows) row[f] = sd < 1e-12 ? 0.0 : (row[f] - mean) / sd;
    }

    if (!weight_column.empty()) {
        const size_t col = column_index(weight_column);
        std::vector<double> weights;
        weights.reserve(nrows);
        double total = 0.0;
        for (size_t r = 0; r < cells.size(); ++r) {
            double v;
            if (!parse_numeric(cells[r][col], &v) || v < 0.0)
                throw std::runtime_error("load_csv: bad weight at row " + std::to_string(r + 2));
            weights.push_back(v);
            total += v;
        }
        if (!(total > 0.0)) throw std::runtime_error("load_csv: weights sum to zero");
        ds.weights = std::move(weights);
    }
    return ds;
}

Dataset load_csv_file(const std::string& path, const std::vector<std::string>& features,
                      const std::string& weight_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file '" + path + "'");
    return load_csv(in, features, weight_column);
}

Dataset weighted_sample(const Dataset& dataset, int m, std::uint64_t seed) {
    const int n = dataset.size();
    if (m < 0 || m > n) throw std::invalid_argument("weighted_sample: need 0 <= m <= n");
    if (dataset.weights && static_cast<int>(dataset.weights->size()) != n)
        throw std::invalid_argument("weighted_sample: weight length mismatch");

    Rng rng(seed);
    std::vector<int> remaining(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) remaining[static_cast<size_t>(i)] = i;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(m));

    for (int draw = 0; draw < m; ++draw) {
        double total = 0.0;
        for (int idx : remaining)
            total += dataset.weights ? (*dataset.weights)[static_cast<size_t>(idx)] : 1.0;
        size_t pick = 0;
        if (total > 0.0) {
            const double target = rng.next_double() * total;
            double acc = 0.0;
            pick = remaining.size() - 1;
            for (size_t pos = 0; pos < remaining.size(); ++pos) {
                acc += dataset.weights ? (*dataset.weights)[static_cast<size_t>(remaining[pos])]
                                       : 1.0;
                if (acc > target) {
                    pick = pos;
                    break;
                }
            }
        } else {
            pick = static_cast<size_t>(rng.next_int(static_cast<int>(remaining.size())));
        }
        chosen.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    Dataset out;
    out.feature_names = dataset.feature_names;
    for (int idx : chosen) {
        out.rows.push_back(dataset.rows[static_cast<size_t>(idx)]);
        if (dataset.weights) {
            if (!out.weights) out.weights.emplace();
            out.weights->push_back((*dataset.weights)[static_cast<size_t>(idx)]);
        }
    }
    return out;
}

}  // namespace fairclust
