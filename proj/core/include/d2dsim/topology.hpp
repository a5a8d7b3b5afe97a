#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace d2dsim {

using NodeId = std::uint32_t;

/// Node kinds. D2D and CU are the values that appear in reports (0/1);
/// the eNB never enters clustering or report output.
enum class NodeType : int {
    D2D = 0,
    CU = 1,
    ENB = 2,
};

struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position&) const = default;
};

/// Euclidean distance between two positions.
double distance(const Position& a, const Position& b);

/// Synthetic dotted-quad identifier. Deterministic function of the node id,
/// stands in for the addresses a real network stack would hand out.
struct Address {
    std::uint8_t a = 0;
    std::uint8_t b = 0;
    std::uint8_t c = 0;
    std::uint8_t d = 0;

    std::string str() const;
    static Address parse(const std::string& dotted);

    bool operator==(const Address&) const = default;
};

struct UserNode {
    NodeId id = 0;
    Position position;
    Address address;

    bool operator==(const UserNode&) const = default;
};

/// One D2D pair. The client transmits to the server; the server sits at a
/// fixed (pair_offset, pair_offset) displacement from the client.
struct D2DPair {
    int pair_index = 0;
    UserNode client;
    UserNode server;

    bool operator==(const D2DPair&) const = default;
};

inline constexpr int kUnassigned = -1;
inline constexpr double kMaxDistance = std::numeric_limits<double>::max();

/// Clustering-space representative of a node or pair. A D2D pair collapses
/// to the midpoint of its two members, so both members always shard together;
/// a CU is represented by its own position.
struct Point {
    double x = 0.0;
    double y = 0.0;
    int cluster = kUnassigned;
    NodeId node_id_1 = 0;
    std::optional<NodeId> node_id_2;  // server id for pairs, empty for CUs
    NodeType node_type = NodeType::D2D;
    double min_dist = kMaxDistance;  // working value: squared distance to assigned centroid

    bool operator==(const Point&) const = default;
};

/// The fully placed network. points holds one entry per pair followed by one
/// per CU, in creation order; the eNB sits at the origin and is excluded.
struct Topology {
    UserNode enb;
    std::vector<D2DPair> pairs;
    std::vector<UserNode> cus;
    std::vector<Point> points;
    std::uint64_t seed = 0;
    double region = 0.0;
    double pair_offset = 0.0;

    bool operator==(const Topology&) const = default;
};

/// Midpoint of the two member positions (arithmetic mean of x and y).
std::pair<double, double> pair_midpoint(const Position& client, const Position& server);

/// Generates n D2D pairs and k CUs placed uniformly at random in
/// [0, region)^2, plus the eNB at the origin.
///
/// Node ids are dense in creation order: client0, server0, client1, ...,
/// then the k CUs, then the eNB. The generator draws exactly two values
/// (x then y) per pair client and per CU, in that order, from a
/// xoshiro256++ stream seeded with `seed` — identical inputs reproduce the
/// topology bit for bit. Server positions are client + (pair_offset,
/// pair_offset) and may land outside the region.
///
/// Throws std::invalid_argument unless n >= 1, k >= 1, region > 0 and
/// pair_offset >= 0. Addresses are left empty; see assign_addresses.
Topology generate_topology(int n, int k, std::uint64_t seed, double region = 50.0,
                           double pair_offset = 10.0);

/// Fills in the synthetic addresses: D2D node m -> 10.1.0.(m+1), j-th CU ->
/// 10.2.0.(j+1), eNB -> 10.0.0.1. Throws std::invalid_argument when a final
/// octet would exceed 254.
void assign_addresses(Topology& topology);

}  // namespace d2dsim
