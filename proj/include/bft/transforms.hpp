#ifndef BFT_TRANSFORMS_HPP
#define BFT_TRANSFORMS_HPP

#include <Eigen/Core>

namespace bft {

// Fast zeta / Moebius transforms over the subset lattice. Vectors are indexed
// by subset bit pattern and must have power-of-two length 2^N. All four run
// in O(N * 2^N) and are exact inverses of each other pairwise.

/// q[A] = sum over B >= A of v[B]  (superset zeta; masses -> commonalities).
Eigen::VectorXd zeta_supersets(Eigen::VectorXd v);

/// Inverse of zeta_supersets (commonalities -> masses).
Eigen::VectorXd mobius_supersets(Eigen::VectorXd v);

/// b[A] = sum over B <= A of v[B]  (subset zeta; masses -> implicabilities).
Eigen::VectorXd zeta_subsets(Eigen::VectorXd v);

/// Inverse of zeta_subsets.
Eigen::VectorXd mobius_subsets(Eigen::VectorXd v);

}  // namespace bft

#endif  // BFT_TRANSFORMS_HPP
