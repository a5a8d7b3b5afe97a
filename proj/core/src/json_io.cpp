#include "d2dsim/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace d2dsim {

namespace {

using nlohmann::json;

json position_to_json(const Position& p) {
    return json{{"x", p.x}, {"y", p.y}, {"z", p.z}};
}

Position position_from_json(const json& j) {
    return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

json node_to_json(const UserNode& node) {
    return json{{"id", node.id},
                {"position", position_to_json(node.position)},
                {"address", node.address.str()}};
}

UserNode node_from_json(const json& j) {
    UserNode node;
    node.id = j.at("id").get<NodeId>();
    node.position = position_from_json(j.at("position"));
    node.address = Address::parse(j.at("address").get<std::string>());
    return node;
}

int node_type_to_int(NodeType type) {
    switch (type) {
        case NodeType::D2D: return 0;
        case NodeType::CU: return 1;
        case NodeType::ENB: break;
    }
    throw std::invalid_argument("eNB has no report encoding");
}

NodeType node_type_from_int(int value) {
    if (value == 0) {
        return NodeType::D2D;
    }
    if (value == 1) {
        return NodeType::CU;
    }
    throw std::invalid_argument("unknown node_type " + std::to_string(value));
}

json point_to_json(const Point& p) {
    json j{{"x", p.x},
           {"y", p.y},
           {"cluster", p.cluster},
           {"node_id_1", p.node_id_1},
           {"node_type", node_type_to_int(p.node_type)},
           {"min_dist", p.min_dist}};
    j["node_id_2"] = p.node_id_2 ? json(*p.node_id_2) : json(nullptr);
    return j;
}

Point point_from_json(const json& j) {
    Point p;
    p.x = j.at("x").get<double>();
    p.y = j.at("y").get<double>();
    p.cluster = j.at("cluster").get<int>();
    p.node_id_1 = j.at("node_id_1").get<NodeId>();
    if (!j.at("node_id_2").is_null()) {
        p.node_id_2 = j.at("node_id_2").get<NodeId>();
    }
    p.node_type = node_type_from_int(j.at("node_type").get<int>());
    p.min_dist = j.at("min_dist").get<double>();
    return p;
}

json topology_to_json(const Topology& topo) {
    json pairs = json::array();
    for (const D2DPair& pair : topo.pairs) {
        pairs.push_back(json{{"pair_index", pair.pair_index},
                             {"client", node_to_json(pair.client)},
                             {"server", node_to_json(pair.server)}});
    }
    json cus = json::array();
    for (const UserNode& cu : topo.cus) {
        cus.push_back(node_to_json(cu));
    }
    json points = json::array();
    for (const Point& p : topo.points) {
        points.push_back(point_to_json(p));
    }
    return json{{"enb", node_to_json(topo.enb)},
                {"pairs", std::move(pairs)},
                {"cus", std::move(cus)},
                {"points", std::move(points)},
                {"seed", topo.seed},
                {"region", topo.region},
                {"pair_offset", topo.pair_offset}};
}

Topology topology_from_json_obj(const json& j) {
    Topology topo;
    topo.enb = node_from_json(j.at("enb"));
    for (const json& jp : j.at("pairs")) {
        D2DPair pair;
        pair.pair_index = jp.at("pair_index").get<int>();
        pair.client = node_from_json(jp.at("client"));
        pair.server = node_from_json(jp.at("server"));
        topo.pairs.push_back(std::move(pair));
    }
    for (const json& jc : j.at("cus")) {
        topo.cus.push_back(node_from_json(jc));
    }
    for (const json& jp : j.at("points")) {
        topo.points.push_back(point_from_json(jp));
    }
    topo.seed = j.at("seed").get<std::uint64_t>();
    topo.region = j.at("region").get<double>();
    topo.pair_offset = j.at("pair_offset").get<double>();
    return topo;
}

json clustering_to_json(const Clustering& clustering, std::span<const Point> points) {
    if (clustering.assignments.size() != points.size()) {
        throw std::invalid_argument("clustering serialization: assignments/points size mismatch");
    }
    json centroids = json::array();
    for (const Centroid& c : clustering.centroids) {
        centroids.push_back(json{{"x", c.x}, {"y", c.y}, {"shard_id", c.shard_id}});
    }
    json assignments = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        json entry{{"node_id_1", points[i].node_id_1},
                   {"node_type", node_type_to_int(points[i].node_type)},
                   {"shard", clustering.assignments[i]}};
        entry["node_id_2"] = points[i].node_id_2 ? json(*points[i].node_id_2) : json(nullptr);
        assignments.push_back(std::move(entry));
    }
    return json{{"centroids", std::move(centroids)},
                {"assignments", std::move(assignments)},
                {"iterations_run", clustering.iterations_run},
                {"objective", clustering.objective}};
}

Clustering clustering_from_json_obj(const json& j) {
    Clustering clustering;
    for (const json& jc : j.at("centroids")) {
        clustering.centroids.push_back(
            {jc.at("x").get<double>(), jc.at("y").get<double>(), jc.at("shard_id").get<int>()});
    }
    for (const json& ja : j.at("assignments")) {
        clustering.assignments.push_back(ja.at("shard").get<int>());
    }
    clustering.iterations_run = j.at("iterations_run").get<int>();
    clustering.objective = j.at("objective").get<double>();
    return clustering;
}

json channel_to_json(const ChannelModel& m) {
    return json{{"tx_power_dbm", m.tx_power_dbm}, {"pl0_db", m.pl0_db},
                {"d0_m", m.d0_m},                 {"exponent", m.exponent},
                {"noise_dbm", m.noise_dbm},       {"min_distance_m", m.min_distance_m}};
}

json config_to_json(const SimConfig& c) {
    return json{{"n", c.n},
                {"k", c.k},
                {"seed", c.seed},
                {"region", c.region},
                {"pair_offset", c.pair_offset},
                {"start_s", c.start_s},
                {"end_s", c.end_s},
                {"interval_s", c.interval_s},
                {"channel", channel_to_json(c.channel)},
                {"same_shard_interference", c.same_shard_interference}};
}

template <typename T>
void read_if_present(const json& j, const char* key, T& into) {
    if (auto it = j.find(key); it != j.end()) {
        into = it->get<T>();
    }
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw std::invalid_argument("unknown key \"" + key + "\" in " + where);
        }
    }
}

}  // namespace

std::string to_json_string(const Topology& topology, int indent) {
    return topology_to_json(topology).dump(indent);
}

std::string to_json_string(const Clustering& clustering, std::span<const Point> points,
                           int indent) {
    return clustering_to_json(clustering, points).dump(indent);
}

std::string to_json_string(const SimConfig& config, int indent) {
    return config_to_json(config).dump(indent);
}

std::string to_json_string(const SimOutput& output, int indent) {
    json samples = json::array();
    for (const SinrSample& s : output.samples) {
        samples.push_back(
            json{{"time_s", s.time_s}, {"pair_index", s.pair_index}, {"sinr_db", s.sinr_db}});
    }
    json j{{"topology", topology_to_json(output.topology)},
           {"clustering", clustering_to_json(output.clustering, output.topology.points)},
           {"samples", std::move(samples)}};
    return j.dump(indent);
}

Topology topology_from_json(const std::string& text) {
    return topology_from_json_obj(json::parse(text));
}

SimOutput output_from_json(const std::string& text) {
    const json j = json::parse(text);
    SimOutput out;
    out.topology = topology_from_json_obj(j.at("topology"));
    out.clustering = clustering_from_json_obj(j.at("clustering"));
    for (const json& js : j.at("samples")) {
        out.samples.push_back({js.at("time_s").get<double>(), js.at("pair_index").get<int>(),
                               js.at("sinr_db").get<double>()});
    }
    return out;
}

SimConfig config_from_json(const std::string& text, SimConfig base) {
    const json j = json::parse(text);
    if (!j.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object");
    }
    reject_unknown_keys(j,
                        {"n", "k", "seed", "region", "pair_offset", "start_s", "end_s",
                         "interval_s", "channel", "same_shard_interference"},
                        "config");
    read_if_present(j, "n", base.n);
    read_if_present(j, "k", base.k);
    read_if_present(j, "seed", base.seed);
    read_if_present(j, "region", base.region);
    read_if_present(j, "pair_offset", base.pair_offset);
    read_if_present(j, "start_s", base.start_s);
    read_if_present(j, "end_s", base.end_s);
    read_if_present(j, "interval_s", base.interval_s);
    read_if_present(j, "same_shard_interference", base.same_shard_interference);
    if (auto it = j.find("channel"); it != j.end()) {
        reject_unknown_keys(
            *it, {"tx_power_dbm", "pl0_db", "d0_m", "exponent", "noise_dbm", "min_distance_m"},
            "config channel");
        read_if_present(*it, "tx_power_dbm", base.channel.tx_power_dbm);
        read_if_present(*it, "pl0_db", base.channel.pl0_db);
        read_if_present(*it, "d0_m", base.channel.d0_m);
        read_if_present(*it, "exponent", base.channel.exponent);
        read_if_present(*it, "noise_dbm", base.channel.noise_dbm);
        read_if_present(*it, "min_distance_m", base.channel.min_distance_m);
    }
    return base;
}

}  // namespace d2dsim
