#include "d2dsim/topology.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "d2dsim/rng.hpp"

namespace d2dsim {

double distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::string Address::str() const {
    return std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(c) + "." +
           std::to_string(d);
}

Address Address::parse(const std::string& dotted) {
    Address out;
    unsigned a = 0, b = 0, c = 0, d = 0;
    char tail = 0;
    if (std::sscanf(dotted.c_str(), "%u.%u.%u.%u%c", &a, &b, &c, &d, &tail) != 4 || a > 255 ||
        b > 255 || c > 255 || d > 255) {
        throw std::invalid_argument("malformed address: " + dotted);
    }
    out.a = static_cast<std::uint8_t>(a);
    out.b = static_cast<std::uint8_t>(b);
    out.c = static_cast<std::uint8_t>(c);
    out.d = static_cast<std::uint8_t>(d);
    return out;
}

std::pair<double, double> pair_midpoint(const Position& client, const Position& server) {
    return {(client.x + server.x) / 2.0, (client.y + server.y) / 2.0};
}

Topology generate_topology(int n, int k, std::uint64_t seed, double region, double pair_offset) {
    if (n < 1) {
        throw std::invalid_argument("pair count must be >= 1");
    }
    if (k < 1) {
        throw std::invalid_argument("CU count must be >= 1");
    }
    if (!(region > 0.0)) {
        throw std::invalid_argument("region must be > 0");
    }
    if (!(pair_offset >= 0.0)) {
        throw std::invalid_argument("pair offset must be >= 0");
    }

    Topology topo;
    topo.seed = seed;
    topo.region = region;
    topo.pair_offset = pair_offset;
    topo.pairs.reserve(static_cast<std::size_t>(n));
    topo.cus.reserve(static_cast<std::size_t>(k));
    topo.points.reserve(static_cast<std::size_t>(n + k));

    Xoshiro256PlusPlus rng(seed);
    NodeId next_id = 0;

    for (int i = 0; i < n; ++i) {
        D2DPair pair;
        pair.pair_index = i;
        pair.client.id = next_id++;
        pair.client.position = {rng.uniform(0.0, region), rng.uniform(0.0, region), 0.0};
        pair.server.id = next_id++;
        pair.server.position = {pair.client.position.x + pair_offset,
                                pair.client.position.y + pair_offset, 0.0};

        const auto [mx, my] = pair_midpoint(pair.client.position, pair.server.position);
        Point point;
        point.x = mx;
        point.y = my;
        point.node_id_1 = pair.client.id;
        point.node_id_2 = pair.server.id;
        point.node_type = NodeType::D2D;
        topo.points.push_back(point);

        topo.pairs.push_back(pair);
    }

    for (int j = 0; j < k; ++j) {
        UserNode cu;
        cu.id = next_id++;
        cu.position = {rng.uniform(0.0, region), rng.uniform(0.0, region), 0.0};

        Point point;
        point.x = cu.position.x;
        point.y = cu.position.y;
        point.node_id_1 = cu.id;
        point.node_type = NodeType::CU;
        topo.points.push_back(point);

        topo.cus.push_back(cu);
    }

    topo.enb.id = next_id;
    topo.enb.position = {0.0, 0.0, 0.0};
    return topo;
}

void assign_addresses(Topology& topology) {
    const auto user_octet = [](NodeId id, const char* kind) {
        const std::uint32_t octet = id + 1;
        if (octet > 254) {
            throw std::invalid_argument(std::string(kind) +
                                        " address capacity exceeded: final octet " +
                                        std::to_string(octet) + " > 254");
        }
        return static_cast<std::uint8_t>(octet);
    };

    for (auto& pair : topology.pairs) {
        pair.client.address = {10, 1, 0, user_octet(pair.client.id, "D2D")};
        pair.server.address = {10, 1, 0, user_octet(pair.server.id, "D2D")};
    }
    for (std::size_t j = 0; j < topology.cus.size(); ++j) {
        topology.cus[j].address = {10, 2, 0, user_octet(static_cast<NodeId>(j), "CU")};
    }
    topology.enb.address = {10, 0, 0, 1};
}

}  // namespace d2dsim
