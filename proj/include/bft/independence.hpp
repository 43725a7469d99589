#ifndef BFT_INDEPENDENCE_HPP
#define BFT_INDEPENDENCE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "bft/clustering.hpp"
#include "bft/mass.hpp"

namespace bft {

/// Two-hypothesis frame {Dep, Ind} on which independence masses live.
const Frame& independence_frame();

/// K x K matrix of cluster-overlap proportions, each row normalized by the
/// row source's cluster size (rows sum to 1). `source` tags the orientation:
/// rows are the clusters of that source.
struct SimilarityMatrix {
    Eigen::MatrixXd beta;
    int source = 1;
};

/// Bijection cluster id -> cluster id of the other partition.
using Matching = std::vector<int>;

/// beta1[k1][k2] = |Cl1_k1 & Cl2_k2| / |Cl1_k1| and the analogue normalized
/// by the second partition's sizes. Partitions must have equal n and k.
std::pair<SimilarityMatrix, SimilarityMatrix> similarity_matrices(
    const ClusterPartition& p1, const ClusterPartition& p2);

/// Greedy bipartite matching: repeatedly bind the globally most similar
/// row/column pair and delete both. Ties go to the smallest row index, then
/// the smallest column index.
Matching match_clusters(const SimilarityMatrix& m);

/// alpha = 1 - |Cl|^(-1/|Omega|): how much a cluster's independence estimate
/// can be trusted given its size relative to the frame.
double reliability_factor(int frame_size, int cluster_size);

/// Mass on {Dep, Ind}: alpha*beta on Dep, alpha*(1-beta) on Ind, rest on
/// the whole independence frame.
MassFunction cluster_independence_mass(double beta, double alpha);

/// Mean of the per-cluster independence masses.
MassFunction source_independence_mass(std::span<const MassFunction> cluster_masses);

struct IndependenceDegrees {
    double independent = 0.0;  // I_d  = BetP(Ind)
    double dependent = 0.0;    // 1 - I_d = BetP(Dep)
};

/// Pignistic degrees of a mass on the independence frame.
IndependenceDegrees independence_degree(const MassFunction& m);

/// Everything produced while estimating the independence of two sources from
/// their cluster partitions.
struct IndependenceReport {
    int n = 0;
    int k = 0;
    SimilarityMatrix m1, m2;
    Matching matching1, matching2;
    std::vector<MassFunction> cluster_masses_s1, cluster_masses_s2;
    MassFunction source_mass_s1, source_mass_s2;
    IndependenceDegrees degrees_12;  // independence of s1 on s2
    IndependenceDegrees degrees_21;  // independence of s2 on s1
    double overall = 0.0;            // I = min of the two directed degrees

    bool decided_independent() const { return overall > 0.5; }
};

/// Independence estimate from already-computed partitions.
IndependenceReport independence_from_partitions(const ClusterPartition& p1,
                                                const ClusterPartition& p2,
                                                int frame_size);

/// Full pairwise pipeline: cluster both streams (seed derived per source
/// index), build and match both similarity matrices, aggregate per-cluster
/// masses, read the pignistic degrees off both directions.
IndependenceReport pairwise_independence(std::span<const MassFunction> s1,
                                         std::span<const MassFunction> s2, int k,
                                         std::uint64_t seed);

struct PairIndependence {
    int first = 0;
    int second = 0;
    IndependenceReport report;
};

struct MultiSourceIndependence {
    std::vector<PairIndependence> pairs;  // unordered pairs, i < j
    double gamma = 0.0;                   // max over pairwise overall degrees
};

/// Overall independence of ns >= 2 sources: every stream is clustered once
/// (seed derived from its index), then gamma = max over unordered pairs of
/// the pairwise overall independence.
MultiSourceIndependence multi_source_independence(
    std::span<const std::vector<MassFunction>> streams, int k, std::uint64_t seed);

}  // namespace bft

#endif  // BFT_INDEPENDENCE_HPP
