#ifndef BFT_CLUSTERING_HPP
#define BFT_CLUSTERING_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bft/metrics.hpp"

namespace bft {

/// Hard assignment of n objects to k nonempty clusters.
struct ClusterPartition {
    int n = 0;
    int k = 0;
    std::vector<int> assignment;  // object id -> cluster id in [0, k)
    std::vector<int> sizes;       // per-cluster object counts

    std::vector<std::vector<int>> members() const;
};

/// Number of clusters used when none is requested: the frame size.
int default_k(const Frame& frame);

/// Iterative reassignment to the cluster with the least mean pairwise
/// distance (no cluster modes; distances computed once). Deterministic given
/// the seed: random uniform initialization (identity when k == n), sequential
/// sweeps in object order with immediate updates, ties to the lowest cluster
/// id, empty clusters repaired at sweep end by moving in the object farthest
/// from its own cluster. Stops at the first sweep with no change, or after
/// max_iter sweeps.
ClusterPartition cluster(const DistanceMatrix& distances, int k, std::uint64_t seed,
                         int max_iter = 100);

ClusterPartition cluster(std::span<const MassFunction> ms, int k, std::uint64_t seed,
                         int max_iter = 100);

/// CSV export: object id, cluster id.
void write_partition_csv(std::ostream& out, const ClusterPartition& partition);

}  // namespace bft

#endif  // BFT_CLUSTERING_HPP
