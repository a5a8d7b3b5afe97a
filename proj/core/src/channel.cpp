#include "d2dsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace d2dsim {

double dbm_to_mw(double dbm) {
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) {
    return 10.0 * std::log10(mw);
}

double path_loss_db(double distance_m, const ChannelModel& model) {
    const double d = std::max(distance_m, model.min_distance_m);
    return model.pl0_db + 10.0 * model.exponent * std::log10(d / model.d0_m);
}

double received_power_dbm(const Position& tx, const Position& rx, const ChannelModel& model) {
    return model.tx_power_dbm - path_loss_db(distance(tx, rx), model);
}

SinrResult compute_sinr(int pair_index, const Topology& topology,
                        std::span<const Position> active_tx, const ChannelModel& model) {
    if (pair_index < 0 || pair_index >= static_cast<int>(topology.pairs.size())) {
        throw std::out_of_range("pair index " + std::to_string(pair_index) + " out of range");
    }
    const D2DPair& pair = topology.pairs[static_cast<std::size_t>(pair_index)];
    const Position& rx = pair.server.position;

    SinrResult result;
    result.pair_index = pair_index;
    result.signal_dbm = received_power_dbm(pair.client.position, rx, model);
    result.noise_mw = dbm_to_mw(model.noise_dbm);

    result.interference_mw = 0.0;
    for (const Position& tx : active_tx) {
        result.interference_mw += dbm_to_mw(received_power_dbm(tx, rx, model));
    }

    if (result.interference_mw == 0.0) {
        // Zero-interference case stays in the dB domain: exact SNR.
        result.sinr_db = result.signal_dbm - model.noise_dbm;
    } else {
        const double signal_mw = dbm_to_mw(result.signal_dbm);
        result.sinr_db = mw_to_dbm(signal_mw / (result.interference_mw + result.noise_mw));
    }
    return result;
}

}  // namespace d2dsim
