// Acceptance suite: one end-to-end check per release criterion, tolerances
// pinned in code. Prints one PASS/FAIL line per criterion; exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "d2dsim/channel.hpp"
#include "d2dsim/clustering.hpp"
#include "d2dsim/json_io.hpp"
#include "d2dsim/report.hpp"
#include "d2dsim/rng.hpp"
#include "d2dsim/simulation.hpp"
#include "../support/oracles.hpp"

namespace fs = std::filesystem;
using namespace d2dsim;

namespace {

struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no runtime requirement
    std::function<bool(std::string&)> check;
};

std::vector<int> cu_counts_per_shard(const std::vector<Point>& points,
                                     const std::vector<int>& assignments, int k) {
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].node_type == NodeType::CU) {
            counts[static_cast<std::size_t>(assignments[i])] += 1;
        }
    }
    return counts;
}

// 1. Reference-instance structure: n=10, k=3 yields 3 shards, one CU each, all
//    10 pairs assigned, pair members co-sharded.
bool reference_instance_structure(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SimConfig config;
        config.n = 10;
        config.k = 3;
        config.seed = seed;
        const SimOutput out = run(config);

        if (out.clustering.centroids.size() != 3) {
            detail = "expected 3 shards";
            return false;
        }
        if (out.clustering.assignments.size() != 13) {
            detail = "expected 13 assigned points";
            return false;
        }
        const auto counts = cu_counts_per_shard(out.topology.points,
                                                out.clustering.assignments, 3);
        for (int c : counts) {
            if (c != 1) {
                detail = "seed " + std::to_string(seed) + ": shard without exactly one CU";
                return false;
            }
        }
        const RunReport report = build_report(out);
        std::map<NodeId, int> shard_of;
        for (const ShardRow& row : report.shard_table) {
            shard_of[row.node_id] = row.shard;
        }
        for (const D2DPair& pair : out.topology.pairs) {
            if (shard_of.at(pair.client.id) != shard_of.at(pair.server.id)) {
                detail = "pair split across shards";
                return false;
            }
        }
    }
    return true;
}

// 2. Coverage fuzzing: >= 1000 random configs, post-repair clustering always
//    keeps >= 1 CU per shard.
bool coverage_fuzzing(std::string& detail) {
    Xoshiro256PlusPlus rng(0xC0FFEE);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 50);
        const int k = 1 + static_cast<int>(rng.next() % 8);
        Topology topo = generate_topology(n, k, rng.next());
        Clustering clustering = kmeans(topo.points, k);
        clustering = enforce_cu_coverage(std::move(clustering), topo.points);

        const auto counts = cu_counts_per_shard(topo.points, clustering.assignments, k);
        for (int c : counts) {
            if (c < 1) {
                detail = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + "): CU-less shard";
                return false;
            }
        }
    }
    return true;
}

// 3. K-means correctness: objective matches the brute-force optimum in
//    >= 60% of small instances and is never below it; the assignment step
//    always matches the exhaustive nearest-centroid oracle, ties included.
bool kmeans_correctness(std::string& detail) {
    Xoshiro256PlusPlus rng(0xBEEF);
    int optimal_hits = 0;
    const int trials = 150;

    for (int trial = 0; trial < trials; ++trial) {
        const int k = 2 + static_cast<int>(rng.next() % 2);  // 2 or 3
        const int total = k + static_cast<int>(rng.next() % static_cast<std::uint64_t>(9 - k));
        std::vector<Point> points;
        NodeId id = 0;
        for (int j = 0; j < k; ++j) {
            Point p;
            p.x = rng.uniform(0, 50);
            p.y = rng.uniform(0, 50);
            p.node_type = NodeType::CU;
            p.node_id_1 = id++;
            points.push_back(p);
        }
        for (int i = k; i < total; ++i) {
            Point p;
            p.x = rng.uniform(0, 50);
            p.y = rng.uniform(0, 50);
            p.node_type = NodeType::D2D;
            p.node_id_1 = id++;
            p.node_id_2 = id++;
            points.push_back(p);
        }

        std::vector<oracle::XY> xy;
        for (const Point& p : points) {
            xy.push_back({p.x, p.y});
        }

        const Clustering clustering = kmeans(points, k);
        const double optimum = oracle::optimal_partition_objective(xy, k);
        const double tolerance = 1e-9 * std::max(1.0, optimum);
        if (clustering.objective < optimum - tolerance) {
            detail = "objective below brute-force optimum";
            return false;
        }
        if (clustering.objective <= optimum + tolerance) {
            ++optimal_hits;
        }

        // Assignment step vs the exhaustive nearest-centroid oracle (final
        // assignments are one assign_points sweep over the final centroids).
        std::vector<oracle::XY> centroid_xy;
        for (const Centroid& c : clustering.centroids) {
            centroid_xy.push_back({c.x, c.y});
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (static_cast<std::size_t>(clustering.assignments[i]) !=
                oracle::nearest_centroid(xy[i], centroid_xy)) {
                detail = "assignment differs from nearest-centroid oracle";
                return false;
            }
        }
    }

    const double hit_rate = static_cast<double>(optimal_hits) / trials;
    if (hit_rate < 0.60) {
        detail = "optimal partition found in only " +
                 std::to_string(static_cast<int>(hit_rate * 100)) + "% of instances";
        return false;
    }
    detail = "optimum matched in " + std::to_string(optimal_hits) + "/" +
             std::to_string(trials) + " instances";
    return true;
}

// 4. Objective monotonicity across all fuzz runs (1e-9 relative tolerance).
bool objective_monotonicity(std::string& detail) {
    Xoshiro256PlusPlus rng(0xF00D);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 40);
        const int k = 1 + static_cast<int>(rng.next() % 8);
        Topology topo = generate_topology(n, k, rng.next());
        const Clustering clustering = kmeans(topo.points, k);
        for (std::size_t t = 1; t < clustering.objective_trace.size(); ++t) {
            const double prev = clustering.objective_trace[t - 1];
            if (clustering.objective_trace[t] > prev + 1e-9 * std::max(1.0, prev)) {
                detail = "objective increased at iteration " + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

// 5. SINR oracle equivalence within 1e-6 dB on random 5-pair topologies.
bool sinr_oracle_equivalence(std::string& detail) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Topology topo = generate_topology(5, 2, seed * 7919 + 1);
        for (const D2DPair& pair : topo.pairs) {
            std::vector<Position> active;
            std::vector<oracle::XY> active_xy;
            for (const D2DPair& other : topo.pairs) {
                if (other.pair_index != pair.pair_index) {
                    active.push_back(other.client.position);
                    active_xy.push_back({other.client.position.x, other.client.position.y});
                }
            }
            const SinrResult result = compute_sinr(pair.pair_index, topo, active, ChannelModel{});
            const long double expected = oracle::sinr_db_extended(
                {pair.client.position.x, pair.client.position.y},
                {pair.server.position.x, pair.server.position.y}, active_xy);
            const double error = std::abs(result.sinr_db - static_cast<double>(expected));
            worst = std::max(worst, error);
            if (error >= 1e-6) {
                detail = "error " + std::to_string(error) + " dB";
                return false;
            }
        }
    }
    std::ostringstream summary;
    summary << "worst error " << worst << " dB";
    detail = summary.str();
    return true;
}

// 6. Closed-form checks: exact SNR with no interference, 75 dB path loss at
//    10 m under defaults.
bool closed_form_checks(std::string& detail) {
    const ChannelModel model;
    if (path_loss_db(10.0, model) != 75.0) {
        detail = "path loss at 10 m != 75 dB";
        return false;
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Topology topo = generate_topology(3, 1, seed);
        for (const D2DPair& pair : topo.pairs) {
            const SinrResult result = compute_sinr(pair.pair_index, topo, {}, model);
            if (result.sinr_db != result.signal_dbm - model.noise_dbm) {
                detail = "zero-interference SINR is not exactly signal - noise";
                return false;
            }
        }
    }
    return true;
}

// 7. Schedule fidelity: default window ticks {2.5, 3.5, 4.5, 5.5} and 4*n
//    samples.
bool schedule_fidelity(std::string& detail) {
    const std::vector<double> expected{2.5, 3.5, 4.5, 5.5};
    if (schedule_ticks(2.5, 6.0, 1.0) != expected) {
        detail = "default window ticks differ";
        return false;
    }
    for (const int n : {1, 4, 10, 25}) {
        SimConfig config;
        config.n = n;
        config.k = 3;
        config.seed = 42;
        const SimOutput out = run(config);
        if (out.samples.size() != static_cast<std::size_t>(4 * n)) {
            detail = "expected 4*n samples for n=" + std::to_string(n);
            return false;
        }
        std::set<double> times;
        for (const SinrSample& s : out.samples) {
            times.insert(s.time_s);
        }
        if (times != std::set<double>(expected.begin(), expected.end())) {
            detail = "sample times differ from the default schedule";
            return false;
        }
    }
    return true;
}

// 8. Determinism: identical configs produce byte-identical shards.csv,
//    sinr.csv and run.json.
bool determinism(std::string& detail) {
    const auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };

    SimConfig config;
    config.n = 10;
    config.k = 3;
    config.seed = 20240101;

    const fs::path base = fs::temp_directory_path() / "d2dsim_acceptance";
    fs::remove_all(base);
    const fs::path dir_a = base / "a";
    const fs::path dir_b = base / "b";
    std::ostringstream sink;
    emit_reports(run(config), dir_a, sink);
    emit_reports(run(config), dir_b, sink);

    for (const char* name : {"shards.csv", "sinr.csv", "run.json"}) {
        const std::string a = slurp(dir_a / name);
        if (a.empty() || a != slurp(dir_b / name)) {
            detail = std::string(name) + " differs between identical runs";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "reference instance (n=10, k=3: 3 shards, one CU each)", 1.0,
         reference_instance_structure},
        {2, "coverage fuzzing (1000 random configs, >= 1 CU per shard)", 30.0, coverage_fuzzing},
        {3, "k-means vs brute-force optimum and nearest-centroid oracle", 60.0,
         kmeans_correctness},
        {4, "objective monotonicity across fuzz runs", 0.0, objective_monotonicity},
        {5, "SINR matches extended-precision oracle within 1e-6 dB", 0.0,
         sinr_oracle_equivalence},
        {6, "closed-form SINR and path-loss checks", 0.0, closed_form_checks},
        {7, "schedule fidelity (ticks 2.5..5.5, 4*n samples)", 0.0, schedule_fidelity},
        {8, "byte-identical outputs for identical configs", 0.0, determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.budget_s > 0.0 && elapsed >= criterion.budget_s) {
            ok = false;
            detail = "runtime budget exceeded";
        }
        std::printf("[%s] %d. %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, elapsed, detail.empty() ? "" : "; ",
                    detail.c_str());
        if (!ok) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
