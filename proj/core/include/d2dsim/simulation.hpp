#pragma once

#include <cstdint>
#include <vector>

#include "d2dsim/channel.hpp"
#include "d2dsim/clustering.hpp"
#include "d2dsim/topology.hpp"

namespace d2dsim {

/// Full run configuration: topology parameters, channel model and the
/// sampling window. Mirrored one-to-one by the JSON config file.
struct SimConfig {
    int n = 10;                  // D2D pair count
    int k = 3;                   // CU count == shard count
    std::uint64_t seed = 1;
    double region = 50.0;
    double pair_offset = 10.0;
    double start_s = 2.5;
    double end_s = 6.0;
    double interval_s = 1.0;
    ChannelModel channel;
    bool same_shard_interference = false;  // restrict interferers to the pair's shard

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const SimConfig&) const = default;
};

/// One SINR reading: emitted once per pair per tick.
struct SinrSample {
    double time_s = 0.0;
    int pair_index = 0;
    double sinr_db = 0.0;

    bool operator==(const SinrSample&) const = default;
};

struct SimOutput {
    Topology topology;
    Clustering clustering;
    std::vector<SinrSample> samples;  // ordered by (time_s, pair_index)

    bool operator==(const SimOutput&) const = default;
};

/// start_s, start_s + interval_s, ... up to and including the last value
/// <= end_s. Each tick is computed as start_s + j * interval_s so no error
/// accumulates. Throws std::invalid_argument on an invalid window.
std::vector<double> schedule_ticks(double start_s, double end_s, double interval_s);

/// End-to-end pipeline: generate the topology, assign addresses, shard via
/// K-means, repair CU coverage, then sample every pair's SINR at every tick.
/// Interferers are the other pairs' clients (all of them, or only same-shard
/// ones when same_shard_interference is set). The model is static, so a
/// pair's SINR repeats across ticks; the schedule is emitted anyway to keep
/// the periodic-report shape.
SimOutput run(const SimConfig& config);

}  // namespace d2dsim
