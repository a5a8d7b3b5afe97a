#include "d2dsim/cli_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "d2dsim/json_io.hpp"

namespace d2dsim {

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("--config: cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

CliOptions parse_config(const std::vector<std::string>& args) {
    CLI::App app{"d2dsim: shards D2D pairs and CUs by distance and samples per-pair SINR",
                 "d2dsim"};

    const SimConfig defaults;
    int pairs = defaults.n;
    int cus = defaults.k;
    std::uint64_t seed = defaults.seed;
    double region = defaults.region;
    double pair_offset = defaults.pair_offset;
    double sim_start = defaults.start_s;
    double sim_end = defaults.end_s;
    double interval = defaults.interval_s;
    double tx_power = defaults.channel.tx_power_dbm;
    double pl_exponent = defaults.channel.exponent;
    double noise = defaults.channel.noise_dbm;
    bool same_shard = false;
    std::string out_dir;
    std::string config_path;

    auto* opt_pairs = app.add_option("--pairs", pairs, "number of D2D pairs")
                          ->check(CLI::Range(1, 1 << 30))
                          ->capture_default_str();
    auto* opt_cus = app.add_option("--cus", cus, "number of cellular users (= shards)")
                        ->check(CLI::Range(1, 1 << 30))
                        ->capture_default_str();
    auto* opt_seed = app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    auto* opt_region = app.add_option("--region", region, "placement square side, meters")
                           ->check(CLI::PositiveNumber)
                           ->capture_default_str();
    auto* opt_offset = app.add_option("--pair-offset", pair_offset,
                                      "server offset from client on both axes, meters")
                           ->check(CLI::NonNegativeNumber)
                           ->capture_default_str();
    auto* opt_start = app.add_option("--sim-start", sim_start, "first sample time, seconds")
                          ->check(CLI::NonNegativeNumber)
                          ->capture_default_str();
    auto* opt_end = app.add_option("--sim-end", sim_end, "simulation end time, seconds")
                        ->capture_default_str();
    auto* opt_interval = app.add_option("--interval", interval, "sampling interval, seconds")
                             ->check(CLI::PositiveNumber)
                             ->capture_default_str();
    auto* opt_tx =
        app.add_option("--tx-power", tx_power, "transmit power, dBm")->capture_default_str();
    auto* opt_exp = app.add_option("--pl-exponent", pl_exponent, "path-loss exponent")
                        ->check(CLI::PositiveNumber)
                        ->capture_default_str();
    auto* opt_noise =
        app.add_option("--noise", noise, "noise floor, dBm")->capture_default_str();
    auto* opt_same_shard = app.add_flag("--same-shard-interference", same_shard,
                                        "only same-shard clients interfere");
    auto* opt_out = app.add_option("--out", out_dir, "output directory");
    auto* opt_config = app.add_option("--config", config_path,
                                      "JSON config file (flags take precedence)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliOptions options;
    if (opt_config->count() > 0) {
        try {
            options.config = config_from_json(read_text_file(config_path), options.config);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--config: ") + e.what());
        }
    }

    if (opt_pairs->count() > 0) options.config.n = pairs;
    if (opt_cus->count() > 0) options.config.k = cus;
    if (opt_seed->count() > 0) options.config.seed = seed;
    if (opt_region->count() > 0) options.config.region = region;
    if (opt_offset->count() > 0) options.config.pair_offset = pair_offset;
    if (opt_start->count() > 0) options.config.start_s = sim_start;
    if (opt_end->count() > 0) options.config.end_s = sim_end;
    if (opt_interval->count() > 0) options.config.interval_s = interval;
    if (opt_tx->count() > 0) options.config.channel.tx_power_dbm = tx_power;
    if (opt_exp->count() > 0) options.config.channel.exponent = pl_exponent;
    if (opt_noise->count() > 0) options.config.channel.noise_dbm = noise;
    if (opt_same_shard->count() > 0) options.config.same_shard_interference = same_shard;

    try {
        options.config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (opt_out->count() > 0) {
        options.out_dir = out_dir;
    } else if (const char* env = std::getenv("D2DSIM_OUT"); env != nullptr && *env != '\0') {
        options.out_dir = env;
    } else {
        options.out_dir = "out";
    }
    return options;
}

CliOptions parse_config(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return parse_config(args);
}

}  // namespace d2dsim
