#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "d2dsim/simulation.hpp"

namespace d2dsim {

struct ShardRow {
    NodeId node_id = 0;
    Address address;
    int node_type = 0;  // 0 = D2D user, 1 = cellular user
    int shard = 0;
};

struct SinrRow {
    double time_s = 0.0;
    int pair_index = 0;
    NodeId client_id = 0;
    NodeId server_id = 0;
    int shard = 0;
    double sinr_db = 0.0;
};

struct ShardSummary {
    int shard = 0;
    int pair_count = 0;
    int cu_count = 0;
};

struct PairSummary {
    int pair_index = 0;
    double mean_sinr_db = 0.0;
};

/// Flattened view of a run: one shard-table row per UE (both pair members
/// and every CU, eNB excluded, ascending node id), one SINR row per sample,
/// per-shard counts and per-pair mean SINR.
struct RunReport {
    std::vector<ShardRow> shard_table;
    std::vector<SinrRow> sinr_rows;
    std::vector<ShardSummary> shard_summaries;
    std::vector<PairSummary> pair_summaries;
};

RunReport build_report(const SimOutput& output);

/// Checks the report invariants: both members of every pair share a shard,
/// every shard has a CU row, and the per-shard counts sum to n pairs and k
/// CUs. Throws std::runtime_error on violation.
void verify_report(const RunReport& report, const SimOutput& output);

/// Writes shards.csv, sinr.csv and run.json into out_dir (created if absent)
/// and prints the shard table plus the per-shard summary to console. CSVs
/// use '.' decimals, LF line endings and 6 decimal places for time_s and
/// sinr_db. Throws std::runtime_error on I/O failure, std::runtime_error on
/// violated report invariants.
void emit_reports(const SimOutput& output, const std::filesystem::path& out_dir,
                  std::ostream& console);

std::string shards_csv(const RunReport& report);
std::string sinr_csv(const RunReport& report);

}  // namespace d2dsim
