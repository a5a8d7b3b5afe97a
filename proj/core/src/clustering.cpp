#include "d2dsim/clustering.hpp"

#include <algorithm>
#include <stdexcept>

namespace d2dsim {

double squared_distance(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    return dx * dx + dy * dy;
}

double squared_distance(const Point& p, const Centroid& c) {
    return squared_distance(p.x, p.y, c.x, c.y);
}

std::vector<Centroid> seed_centroids(std::span<const Point> points, int k) {
    std::vector<Centroid> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    for (const Point& p : points) {
        if (p.node_type != NodeType::CU) {
            continue;
        }
        centroids.push_back({p.x, p.y, static_cast<int>(centroids.size())});
        if (static_cast<int>(centroids.size()) == k) {
            return centroids;
        }
    }
    throw std::invalid_argument("need at least " + std::to_string(k) + " CU points to seed " +
                                std::to_string(k) + " shards, found " +
                                std::to_string(centroids.size()));
}

void assign_points(std::span<Point> points, std::span<const Centroid> centroids) {
    for (Point& p : points) {
        p.min_dist = kMaxDistance;
        for (const Centroid& c : centroids) {
            const double dist = squared_distance(p, c);
            if (dist < p.min_dist) {
                p.min_dist = dist;
                p.cluster = c.shard_id;
            }
        }
    }
}

std::vector<Centroid> update_centroids(std::span<const Point> points,
                                       std::vector<Centroid> centroids) {
    std::vector<int> counts(centroids.size(), 0);
    std::vector<double> sum_x(centroids.size(), 0.0);
    std::vector<double> sum_y(centroids.size(), 0.0);

    for (const Point& p : points) {
        if (p.cluster < 0 || p.cluster >= static_cast<int>(centroids.size())) {
            throw std::invalid_argument("update_centroids: point without valid assignment");
        }
        counts[static_cast<std::size_t>(p.cluster)] += 1;
        sum_x[static_cast<std::size_t>(p.cluster)] += p.x;
        sum_y[static_cast<std::size_t>(p.cluster)] += p.y;
    }

    for (std::size_t s = 0; s < centroids.size(); ++s) {
        if (counts[s] > 0) {
            centroids[s].x = sum_x[s] / counts[s];
            centroids[s].y = sum_y[s] / counts[s];
        }
        // empty shard: keep the previous position
    }
    return centroids;
}

namespace {

double total_objective(std::span<const Point> points, std::span<const Centroid> centroids) {
    double sum = 0.0;
    for (const Point& p : points) {
        sum += squared_distance(p, centroids[static_cast<std::size_t>(p.cluster)]);
    }
    return sum;
}

int count_cus(std::span<const Point> points) {
    return static_cast<int>(std::count_if(points.begin(), points.end(), [](const Point& p) {
        return p.node_type == NodeType::CU;
    }));
}

}  // namespace

Clustering kmeans(std::span<Point> points, int k, int max_iter, double tol) {
    if (k < 1) {
        throw std::invalid_argument("shard count must be >= 1");
    }
    if (static_cast<int>(points.size()) < k) {
        throw std::invalid_argument("need at least as many points as shards");
    }
    const int cus = count_cus(points);
    if (cus != k) {
        throw std::invalid_argument("shard count (" + std::to_string(k) +
                                    ") must equal the number of CU points (" +
                                    std::to_string(cus) + "), one seed per CU");
    }

    Clustering result;
    result.centroids = seed_centroids(points, k);

    for (int iter = 1; iter <= max_iter; ++iter) {
        assign_points(points, result.centroids);
        result.objective_trace.push_back(total_objective(points, result.centroids));
        result.iterations_run = iter;

        std::vector<Centroid> updated = update_centroids(points, result.centroids);
        double max_displacement = 0.0;
        for (std::size_t s = 0; s < updated.size(); ++s) {
            max_displacement =
                std::max(max_displacement, squared_distance(updated[s].x, updated[s].y,
                                                            result.centroids[s].x,
                                                            result.centroids[s].y));
        }
        result.centroids = std::move(updated);
        if (max_displacement <= tol) {
            break;
        }
    }

    // Final sweep so assignments are argmin-correct against the converged
    // centroids. At a true fixed point it changes nothing.
    assign_points(points, result.centroids);
    result.objective_trace.push_back(total_objective(points, result.centroids));

    result.assignments.reserve(points.size());
    for (const Point& p : points) {
        result.assignments.push_back(p.cluster);
    }
    result.objective = total_objective(points, result.centroids);
    return result;
}

Clustering enforce_cu_coverage(Clustering clustering, std::span<Point> points) {
    if (clustering.assignments.size() != points.size()) {
        throw std::invalid_argument("enforce_cu_coverage: assignments/points size mismatch");
    }
    const std::size_t k = clustering.centroids.size();

    std::vector<int> cu_count(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].node_type == NodeType::CU) {
            cu_count[static_cast<std::size_t>(clustering.assignments[i])] += 1;
        }
    }
    if (std::all_of(cu_count.begin(), cu_count.end(), [](int c) { return c >= 1; })) {
        return clustering;
    }

    for (std::size_t s = 0; s < k; ++s) {
        if (cu_count[s] >= 1) {
            continue;
        }
        // Nearest CU to this shard's centroid whose shard keeps a CU.
        std::size_t best = points.size();
        double best_dist = kMaxDistance;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].node_type != NodeType::CU) {
                continue;
            }
            const auto from = static_cast<std::size_t>(clustering.assignments[i]);
            if (cu_count[from] < 2) {
                continue;
            }
            const double dist = squared_distance(points[i], clustering.centroids[s]);
            if (dist < best_dist) {
                best_dist = dist;
                best = i;
            }
        }
        if (best == points.size()) {
            throw std::logic_error("enforce_cu_coverage: no movable CU for shard " +
                                   std::to_string(s));
        }
        cu_count[static_cast<std::size_t>(clustering.assignments[best])] -= 1;
        cu_count[s] += 1;
        clustering.assignments[best] = static_cast<int>(s);
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].cluster = clustering.assignments[i];
    }
    clustering.centroids = update_centroids(points, std::move(clustering.centroids));
    for (Point& p : points) {
        p.min_dist = squared_distance(p, clustering.centroids[static_cast<std::size_t>(p.cluster)]);
    }
    clustering.objective = total_objective(points, clustering.centroids);
    return clustering;
}

}  // namespace d2dsim
