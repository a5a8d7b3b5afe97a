#pragma once

#include <span>
#include <vector>

#include "d2dsim/topology.hpp"

namespace d2dsim {

struct Centroid {
    double x = 0.0;
    double y = 0.0;
    int shard_id = 0;

    bool operator==(const Centroid&) const = default;
};

/// Result of sharding a point set: k centroids plus a shard index per point.
/// objective is the sum over points of the squared distance to the assigned
/// centroid; objective_trace records that sum after every assignment sweep
/// (kept in memory for monotonicity checks, not serialized).
struct Clustering {
    std::vector<Centroid> centroids;
    std::vector<int> assignments;
    int iterations_run = 0;
    double objective = 0.0;
    std::vector<double> objective_trace;

    bool operator==(const Clustering&) const = default;
};

/// Squared Euclidean distance. Every comparison in the algorithm uses the
/// squared form; the argmin is the same as under the rooted distance.
double squared_distance(double ax, double ay, double bx, double by);
double squared_distance(const Point& p, const Centroid& c);

/// Places centroid i at the position of the i-th CU point in point order,
/// with shard_id = i. Throws std::invalid_argument when fewer than k CU
/// points exist.
std::vector<Centroid> seed_centroids(std::span<const Point> points, int k);

/// One assignment sweep: resets every point's min_dist to the max sentinel,
/// then assigns each point to the nearest centroid under squared distance.
/// Ties go to the lowest shard_id (strict less-than, first centroid wins).
/// Updates cluster and min_dist in place.
void assign_points(std::span<Point> points, std::span<const Centroid> centroids);

/// Moves each non-empty shard's centroid to the coordinate mean of its
/// members; empty shards keep their previous position.
std::vector<Centroid> update_centroids(std::span<const Point> points,
                                       std::vector<Centroid> centroids);

/// Lloyd iteration: seed once from the CU points, then alternate
/// assign_points / update_centroids until the maximum squared centroid
/// displacement drops to tol or max_iter iterations elapse. A final
/// assignment sweep runs against the converged centroids, so returned
/// assignments are argmin-correct and points carry their final cluster and
/// min_dist.
///
/// The shard count must equal the number of CU points (one seed per CU);
/// anything else is rejected with std::invalid_argument.
Clustering kmeans(std::span<Point> points, int k, int max_iter = 100, double tol = 1e-6);

/// Guarantees at least one CU per shard. If the clustering already covers
/// every shard it is returned unchanged. Otherwise, for each CU-less shard
/// in ascending shard_id, the CU nearest to that shard's centroid among CUs
/// whose shard would keep a CU after the move is reassigned to it; centroids
/// and objective are recomputed once after all moves and points are synced
/// to the repaired assignments. This repair is an extension over plain
/// K-means output.
Clustering enforce_cu_coverage(Clustering clustering, std::span<Point> points);

}  // namespace d2dsim
