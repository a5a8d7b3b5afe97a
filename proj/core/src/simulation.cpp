#include "d2dsim/simulation.hpp"

#include <stdexcept>
#include <string>

namespace d2dsim {

void SimConfig::validate() const {
    if (n < 1) {
        throw std::invalid_argument("n: pair count must be >= 1");
    }
    if (k < 1) {
        throw std::invalid_argument("k: CU count must be >= 1");
    }
    if (!(region > 0.0)) {
        throw std::invalid_argument("region: must be > 0");
    }
    if (!(pair_offset >= 0.0)) {
        throw std::invalid_argument("pair_offset: must be >= 0");
    }
    if (!(start_s >= 0.0)) {
        throw std::invalid_argument("start_s: must be >= 0");
    }
    if (!(start_s <= end_s)) {
        throw std::invalid_argument("start_s: must not exceed end_s");
    }
    if (!(interval_s > 0.0)) {
        throw std::invalid_argument("interval_s: must be > 0");
    }
    if (!(channel.exponent > 0.0)) {
        throw std::invalid_argument("channel.exponent: must be > 0");
    }
    if (!(channel.d0_m > 0.0)) {
        throw std::invalid_argument("channel.d0_m: must be > 0");
    }
    if (!(channel.min_distance_m > 0.0)) {
        throw std::invalid_argument("channel.min_distance_m: must be > 0");
    }
}

std::vector<double> schedule_ticks(double start_s, double end_s, double interval_s) {
    if (!(start_s >= 0.0) || !(start_s <= end_s) || !(interval_s > 0.0)) {
        throw std::invalid_argument("invalid schedule: need 0 <= start <= end and interval > 0");
    }
    std::vector<double> ticks;
    for (long long j = 0;; ++j) {
        const double t = start_s + static_cast<double>(j) * interval_s;
        if (t > end_s) {
            break;
        }
        ticks.push_back(t);
    }
    return ticks;
}

SimOutput run(const SimConfig& config) {
    config.validate();

    SimOutput out;
    out.topology = generate_topology(config.n, config.k, config.seed, config.region,
                                     config.pair_offset);
    assign_addresses(out.topology);
    out.clustering = kmeans(out.topology.points, config.k);
    out.clustering = enforce_cu_coverage(std::move(out.clustering), out.topology.points);

    const std::vector<double> ticks = schedule_ticks(config.start_s, config.end_s,
                                                     config.interval_s);
    out.samples.reserve(ticks.size() * out.topology.pairs.size());

    std::vector<Position> interferers;
    for (const double t : ticks) {
        for (const D2DPair& pair : out.topology.pairs) {
            interferers.clear();
            const int shard = out.clustering.assignments[static_cast<std::size_t>(pair.pair_index)];
            for (const D2DPair& other : out.topology.pairs) {
                if (other.pair_index == pair.pair_index) {
                    continue;
                }
                if (config.same_shard_interference &&
                    out.clustering.assignments[static_cast<std::size_t>(other.pair_index)] !=
                        shard) {
                    continue;
                }
                interferers.push_back(other.client.position);
            }
            const SinrResult sinr = compute_sinr(pair.pair_index, out.topology, interferers,
                                                 config.channel);
            out.samples.push_back({t, pair.pair_index, sinr.sinr_db});
        }
    }
    return out;
}

}  // namespace d2dsim
