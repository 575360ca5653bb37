#include "fairclust/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fairclust {

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_coordinate(const std::string& token) {
    if (token == "inf") return std::numeric_limits<double>::infinity();
    if (token == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        throw std::runtime_error("bad coordinate token '" + token + "'");
    return v;
}

std::vector<std::string> split_row(const std::string& line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ss(normalized);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos && line[0] != '#') return line;
    }
    throw std::runtime_error("instance file ended early");
}

LoadedInstance read_matrix_body(std::istream& in, int n, int k) {
    std::vector<ExtReal> dist;
    dist.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto tokens = split_row(next_content_line(in));
        if (static_cast<int>(tokens.size()) != n)
            throw std::runtime_error("matrix row " + std::to_string(i) + " has " +
                                     std::to_string(tokens.size()) + " entries, expected " +
                                     std::to_string(n));
        for (const auto& tok : tokens) dist.push_back(ExtReal::parse(tok));
    }
    return LoadedInstance{n, k, MetricInstance(n, std::move(dist)), std::nullopt, std::nullopt};
}

LoadedInstance read_points_body(std::istream& in, int n, int k) {
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto tokens = split_row(next_content_line(in));
        if (tokens.empty()) throw std::runtime_error("empty point row");
        std::vector<double> row;
        row.reserve(tokens.size());
        for (const auto& tok : tokens) row.push_back(parse_coordinate(tok));
        rows.push_back(std::move(row));
    }

    // Detached agents (inf coordinates) are meaningful on the line only:
    // their distance to everyone else is inf.
    bool any_inf = false;
    for (const auto& row : rows)
        for (double v : row) any_inf = any_inf || std::isinf(v);
    if (!any_inf) {
        MetricInstance metric = metric_from_points(rows);
        return LoadedInstance{n, k, std::move(metric), std::move(rows), std::nullopt};
    }
    for (const auto& row : rows)
        if (row.size() != 1)
            throw std::runtime_error("inf coordinates are only supported for 1-D points");
    std::vector<ExtReal> dist(static_cast<size_t>(n) * n, ExtReal{});
    std::vector<double> positions;
    for (const auto& row : rows) positions.push_back(row[0]);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ExtReal d = (std::isinf(positions[static_cast<size_t>(i)]) ||
                         std::isinf(positions[static_cast<size_t>(j)]))
                            ? ExtReal::inf()
                            : ExtReal::finite(std::abs(positions[static_cast<size_t>(i)] -
                                                       positions[static_cast<size_t>(j)]));
            dist[static_cast<size_t>(i) * n + j] = d;
            dist[static_cast<size_t>(j) * n + i] = d;
        }
    }
    MetricInstance metric(n, std::move(dist), std::move(positions));
    return LoadedInstance{n, k, std::move(metric), std::move(rows), std::nullopt};
}

LoadedInstance read_arbitrary_body(std::istream& in, int n, int k) {
    if (n > kArbitraryLossMaxAgents)
        throw std::runtime_error("arbitrary instances support at most 24 agents");
    LossModel::Table table(static_cast<size_t>(n));
    std::string line;
    while (std::getline(in, line)) {
        const auto tokens = split_row(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3)
            throw std::runtime_error("arbitrary rows must be '<agent> <mask> <value>'");
        const int agent = std::stoi(tokens[0]);
        const std::uint32_t mask = static_cast<std::uint32_t>(std::stoul(tokens[1]));
        if (agent < 0 || agent >= n || !(mask & (1u << agent)) || mask >= (1u << n))
            throw std::runtime_error("arbitrary row references a bad agent/mask pair");
        table[static_cast<size_t>(agent)][mask] = ExtReal::parse(tokens[2]);
    }
    MetricInstance zeros(n, std::vector<ExtReal>(static_cast<size_t>(n) * n, ExtReal{}));
    return LoadedInstance{n, k, std::move(zeros), std::nullopt,
                          LossModel::arbitrary(n, std::move(table))};
}

}  // namespace

LoadedInstance read_instance(std::istream& in) {
    const auto header = split_row(next_content_line(in));
    if (header.size() == 2) {
        const int n = std::stoi(header[0]);
        const int k = std::stoi(header[1]);
        return read_matrix_body(in, n, k);
    }
    if (header.size() == 3 && (header[0] == "points" || header[0] == "arbitrary")) {
        const int n = std::stoi(header[1]);
        const int k = std::stoi(header[2]);
        return header[0] == "points" ? read_points_body(in, n, k) : read_arbitrary_body(in, n, k);
    }
    throw std::runtime_error("bad instance header; expected 'n k', 'points n k' or 'arbitrary n k'");
}

LoadedInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
    return read_instance(in);
}

void write_instance_matrix(std::ostream& out, const MetricInstance& metric, int k) {
    const int n = metric.size();
    out << n << ' ' << k << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << metric.d(i, j).to_string();
        }
        out << '\n';
    }
}

void write_instance_points(std::ostream& out, const std::vector<std::vector<double>>& rows,
                           int k) {
    out << "points " << rows.size() << ' ' << k << '\n';
    for (const auto& row : rows) {
        for (size_t f = 0; f < row.size(); ++f) {
            if (f) out << ',';
            out << format_double(row[f]);
        }
        out << '\n';
    }
}

void write_instance_arbitrary(std::ostream& out, const LossModel& model, int k) {
    if (model.kind() != LossKind::kArbitrary)
        throw std::invalid_argument("write_instance_arbitrary: model is not arbitrary");
    const int n = model.size();
    out << "arbitrary " << n << ' ' << k << '\n';
    for (int agent = 0; agent < n; ++agent) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (!(mask & (1u << agent))) continue;
            out << agent << ' ' << mask << ' ' << model.loss_mask(agent, mask).to_string() << '\n';
        }
    }
}

Clustering read_clustering(std::istream& in, int n) {
    std::vector<std::vector<int>> clusters;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> members;
        for (const auto& tok : split_row(line)) members.push_back(std::stoi(tok));
        clusters.push_back(std::move(members));
    }
    if (clusters.empty()) throw std::runtime_error("clustering file is empty");
    const int k = static_cast<int>(clusters.size());
    return Clustering::from_clusters(n, k, std::move(clusters));
}

Clustering read_clustering_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open clustering file '" + path + "'");
    return read_clustering(in, n);
}

void write_clustering(std::ostream& out, const Clustering& clustering) {
    for (int slot = 0; slot < clustering.num_slots(); ++slot) {
        const auto& members = clustering.cluster(slot);
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out << ' ';
            out << members[i];
        }
        out << '\n';
    }
}

}  // namespace fairclust
