#ifndef BFT_MASS_HPP
#define BFT_MASS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bft/frame.hpp"

namespace bft {

struct FocalElement {
    std::uint32_t bits;
    double mass;
};

/// Basic belief assignment: nonnegative masses over subsets of a frame,
/// summing to 1 (tolerance 1e-9). Mass on the empty set is allowed (open
/// world). Immutable value type; focal elements kept sparse and sorted in
/// canonical subset order.
class MassFunction {
public:
    static constexpr double kSumTolerance = 1e-9;

    MassFunction(Frame frame, std::vector<std::pair<Subset, double>> masses);

    static MassFunction vacuous(const Frame& frame);
    static MassFunction categorical(const Frame& frame, Subset a);

    /// Builds from a dense 2^N vector. Entries with |m| < clamp_eps are
    /// dropped (transform noise); anything more negative throws.
    static MassFunction from_dense(const Frame& frame, const Eigen::VectorXd& dense,
                                   double clamp_eps = 0.0);

    const Frame& frame() const { return frame_; }
    std::span<const FocalElement> focal_elements() const { return focal_; }
    int focal_count() const { return static_cast<int>(focal_.size()); }

    /// Mass of a subset; 0 when not focal.
    double mass(Subset a) const;
    double mass_of_bits(std::uint32_t bits) const;

    double conflict() const { return mass_of_bits(0); }               // m(empty)
    double ignorance() const { return mass_of_bits(full_bits()); }    // m(Omega)
    bool is_dogmatic() const { return ignorance() <= 0.0; }
    bool is_normalized() const { return conflict() <= 0.0; }

    Eigen::VectorXd to_dense() const;

private:
    MassFunction(Frame frame, std::vector<FocalElement> focal)
        : frame_(std::move(frame)), focal_(std::move(focal)) {}
    std::uint32_t full_bits() const { return frame_.subset_count() - 1; }

    Frame frame_;
    std::vector<FocalElement> focal_;
};

/// Canonical-decomposition weights: one positive weight per strict subset of
/// the frame (empty set included), absent entry == weight 1. Weights above 1
/// (non-separable mass functions) are legal and flow through the min algebra.
class WeightFunction {
public:
    WeightFunction(Frame frame, std::vector<std::pair<Subset, double>> weights);

    const Frame& frame() const { return frame_; }
    /// Weight of a strict subset; 1 when absent.
    double weight(Subset a) const;
    /// Non-1 entries, sorted by subset bit value.
    std::span<const FocalElement> entries() const { return entries_; }

private:
    Frame frame_;
    std::vector<FocalElement> entries_;  // mass field holds the weight
};

/// bel(A) = sum of m(B) over nonempty B <= A.
double belief(const MassFunction& m, Subset a);

/// pl(A) = sum of m(B) over B intersecting A.
double plausibility(const MassFunction& m, Subset a);

/// q(A) = sum of m(B) over B >= A.
double commonality(const MassFunction& m, Subset a);

/// Pignistic probabilities of the singletons, in frame order. Each focal mass
/// is split evenly over its elements after conditioning away m(empty).
/// Undefined (throws) when m(empty) = 1.
Eigen::VectorXd pignistic(const MassFunction& m);

/// Reliability discounting: scales every mass by alpha and moves the
/// remainder onto the full frame.
MassFunction discount(const MassFunction& m, double alpha);

/// Simple support function A^w: mass 1-w on the (strict) focus A, w on the frame.
MassFunction simple_support(const Frame& frame, Subset focus, double w);

/// Canonical decomposition of a nondogmatic mass function into simple-support
/// weights: ln w(A) = -sum over B >= A of (-1)^(|B|-|A|) ln q(B), computed
/// with the fast superset transforms. recompose() inverts it exactly.
WeightFunction canonical_decompose(const MassFunction& m);

/// Conjunctive combination of all (generalized) simple supports A^w(A):
/// the commonality of the result is prod over A not >= B of w(A).
MassFunction recompose(const WeightFunction& w);

/// Closed-world renormalization: drop m(empty), divide the rest by 1-m(empty).
MassFunction dempster_normalize(const MassFunction& m);

/// True when the two mass functions agree focal-by-focal within tol.
bool approx_equal(const MassFunction& a, const MassFunction& b, double tol);

}  // namespace bft

#endif  // BFT_MASS_HPP
