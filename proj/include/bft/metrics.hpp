#ifndef BFT_METRICS_HPP
#define BFT_METRICS_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <span>

#include "bft/mass.hpp"

namespace bft {

/// Symmetric n x n matrix of pairwise Jousselme distances, zero diagonal,
/// entries in [0, 1].
using DistanceMatrix = Eigen::MatrixXd;

/// Largest frame size for which the dense 2^N x 2^N Jaccard matrix is built
/// and cached (8 MB at N = 10). Larger frames use sparse focal-pair sums.
inline constexpr int kJaccardDenseMaxFrameSize = 10;

/// Dense Jaccard-index matrix over the power set in canonical subset order,
/// built once per frame size and cached for reuse across all distance calls.
const Eigen::MatrixXd& jaccard_matrix(int frame_size);

/// d(m1, m2) = sqrt(0.5 (v1-v2)^T J (v1-v2)) with J the Jaccard matrix.
/// A metric on mass functions, in [0, 1] for normalized inputs.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

/// All pairwise Jousselme distances, computed once. Uses a single weighted
/// Gram product over the dense mass matrix when the frame allows it.
DistanceMatrix pairwise_distances(std::span<const MassFunction> ms);

/// Mean distance from object i to the members of a cluster. A member's own
/// zero self-distance is included in the average.
double object_to_cluster_distance(int object, std::span<const int> cluster,
                                  const DistanceMatrix& distances);

/// CSV export: header row of object ids, then the matrix row-major.
void write_distance_csv(std::ostream& out, const DistanceMatrix& distances);

}  // namespace bft

#endif  // BFT_METRICS_HPP
