#include "d2dsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>

#include "d2dsim/json_io.hpp"

namespace d2dsim {

namespace {

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace

RunReport build_report(const SimOutput& output) {
    const Topology& topo = output.topology;
    const std::vector<int>& assignments = output.clustering.assignments;
    const int n = static_cast<int>(topo.pairs.size());

    RunReport report;
    for (const D2DPair& pair : topo.pairs) {
        const int shard = assignments[static_cast<std::size_t>(pair.pair_index)];
        report.shard_table.push_back({pair.client.id, pair.client.address, 0, shard});
        report.shard_table.push_back({pair.server.id, pair.server.address, 0, shard});
    }
    for (std::size_t j = 0; j < topo.cus.size(); ++j) {
        const int shard = assignments[static_cast<std::size_t>(n) + j];
        report.shard_table.push_back({topo.cus[j].id, topo.cus[j].address, 1, shard});
    }

    for (const SinrSample& sample : output.samples) {
        const D2DPair& pair = topo.pairs[static_cast<std::size_t>(sample.pair_index)];
        const int shard = assignments[static_cast<std::size_t>(sample.pair_index)];
        report.sinr_rows.push_back(
            {sample.time_s, sample.pair_index, pair.client.id, pair.server.id, shard,
             sample.sinr_db});
    }

    const int k = static_cast<int>(output.clustering.centroids.size());
    report.shard_summaries.resize(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        report.shard_summaries[static_cast<std::size_t>(s)].shard = s;
    }
    for (std::size_t i = 0; i < topo.points.size(); ++i) {
        auto& summary = report.shard_summaries[static_cast<std::size_t>(assignments[i])];
        if (topo.points[i].node_type == NodeType::CU) {
            summary.cu_count += 1;
        } else {
            summary.pair_count += 1;
        }
    }

    std::map<int, std::pair<double, int>> per_pair;  // pair_index -> (sum, count)
    for (const SinrSample& sample : output.samples) {
        auto& [sum, count] = per_pair[sample.pair_index];
        sum += sample.sinr_db;
        count += 1;
    }
    for (const auto& [pair_index, acc] : per_pair) {
        report.pair_summaries.push_back({pair_index, acc.first / acc.second});
    }
    return report;
}

void verify_report(const RunReport& report, const SimOutput& output) {
    const int n = static_cast<int>(output.topology.pairs.size());
    const int k = static_cast<int>(output.topology.cus.size());

    std::map<NodeId, int> shard_of;
    for (const ShardRow& row : report.shard_table) {
        if (!shard_of.emplace(row.node_id, row.shard).second) {
            throw std::runtime_error("duplicate node in shard table");
        }
    }
    if (static_cast<int>(shard_of.size()) != 2 * n + k) {
        throw std::runtime_error("shard table must list every UE exactly once");
    }
    for (const D2DPair& pair : output.topology.pairs) {
        if (shard_of.at(pair.client.id) != shard_of.at(pair.server.id)) {
            throw std::runtime_error("pair " + std::to_string(pair.pair_index) +
                                     " split across shards");
        }
    }

    std::map<int, int> cu_rows_per_shard;
    for (const ShardRow& row : report.shard_table) {
        if (row.node_type == 1) {
            cu_rows_per_shard[row.shard] += 1;
        }
    }
    int pair_total = 0;
    int cu_total = 0;
    for (const ShardSummary& summary : report.shard_summaries) {
        if (cu_rows_per_shard[summary.shard] < 1) {
            throw std::runtime_error("shard " + std::to_string(summary.shard) + " has no CU");
        }
        pair_total += summary.pair_count;
        cu_total += summary.cu_count;
    }
    if (pair_total != n || cu_total != k) {
        throw std::runtime_error("per-shard counts do not sum to the node census");
    }
}

std::string shards_csv(const RunReport& report) {
    std::string out = "node_id,address,node_type,shard\n";
    for (const ShardRow& row : report.shard_table) {
        out += std::to_string(row.node_id) + "," + row.address.str() + "," +
               std::to_string(row.node_type) + "," + std::to_string(row.shard) + "\n";
    }
    return out;
}

std::string sinr_csv(const RunReport& report) {
    std::string out = "time_s,pair_index,client_id,server_id,shard,sinr_db\n";
    for (const SinrRow& row : report.sinr_rows) {
        out += fixed6(row.time_s) + "," + std::to_string(row.pair_index) + "," +
               std::to_string(row.client_id) + "," + std::to_string(row.server_id) + "," +
               std::to_string(row.shard) + "," + fixed6(row.sinr_db) + "\n";
    }
    return out;
}

void emit_reports(const SimOutput& output, const std::filesystem::path& out_dir,
                  std::ostream& console) {
    const RunReport report = build_report(output);
    verify_report(report, output);

    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "shards.csv", shards_csv(report));
    write_file(out_dir / "sinr.csv", sinr_csv(report));
    write_file(out_dir / "run.json", to_json_string(output, 2) + "\n");

    console << std::setw(8) << "node_id" << std::setw(12) << "address" << std::setw(10)
            << "node_type" << std::setw(7) << "shard" << "\n";
    for (const ShardRow& row : report.shard_table) {
        console << std::setw(8) << row.node_id << std::setw(12) << row.address.str()
                << std::setw(10) << row.node_type << std::setw(7) << row.shard << "\n";
    }
    for (const ShardSummary& summary : report.shard_summaries) {
        console << "shard " << summary.shard << ": pairs=" << summary.pair_count
                << " cus=" << summary.cu_count << "\n";
    }
}

}  // namespace d2dsim
