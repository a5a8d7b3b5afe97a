#pragma once

#include <span>

#include "d2dsim/topology.hpp"

namespace d2dsim {

/// Log-distance path-loss channel with a flat noise floor. No fading or
/// shadowing: received power is a deterministic function of geometry, so
/// whole runs reproduce exactly.
struct ChannelModel {
    double tx_power_dbm = 23.0;
    double pl0_db = 40.0;        // path loss at the reference distance
    double d0_m = 1.0;           // reference distance
    double exponent = 3.5;       // path-loss exponent
    double noise_dbm = -104.0;   // thermal noise floor
    double min_distance_m = 1.0; // distances are clamped up to this

    bool operator==(const ChannelModel&) const = default;
};

struct SinrResult {
    int pair_index = 0;
    double sinr_db = 0.0;
    double signal_dbm = 0.0;
    double interference_mw = 0.0;
    double noise_mw = 0.0;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// pl0 + 10 * exponent * log10(max(d, min_distance) / d0). Non-decreasing
/// in distance; the clamp keeps colocated nodes finite.
double path_loss_db(double distance_m, const ChannelModel& model);

/// Transmit power minus the path loss over the tx-rx distance.
double received_power_dbm(const Position& tx, const Position& rx, const ChannelModel& model);

/// SINR of one pair's client->server link. signal is the received power from
/// the pair's client at its server; interference is the linear-domain sum of
/// the received powers from every transmitter in active_tx (which must not
/// include this pair's client). With no interferers the result reduces to
/// signal_dbm - noise_dbm exactly. Throws std::out_of_range for a bad
/// pair_index.
SinrResult compute_sinr(int pair_index, const Topology& topology,
                        std::span<const Position> active_tx, const ChannelModel& model);

}  // namespace d2dsim
