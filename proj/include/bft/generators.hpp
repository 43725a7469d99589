#ifndef BFT_GENERATORS_HPP
#define BFT_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bft/mass.hpp"

namespace bft {

/// A source's decision about one object: a nonempty subset, usually a singleton.
using Decision = Subset;

/// Random mass functions with no constraints: focal count uniform on
/// [1, 2^N - 1], focal elements sampled without replacement from the nonempty
/// subsets, masses from a stick-breaking of [0, 1] (sorted uniform cuts),
/// assigned in sampling order. Deterministic per seed.
std::vector<MassFunction> gen_independent(const Frame& frame, int n, std::uint64_t seed);

struct ConsistentStream {
    std::vector<MassFunction> masses;
    std::vector<Decision> anchors;  // the random anchor set of each mass
};

/// Consistent mass functions: every focal element contains a random nonempty
/// anchor set, so the focal elements of one mass always intersect (zero
/// internal conflict). Returns the anchors as the decision trace.
ConsistentStream gen_consistent(const Frame& frame, int n, std::uint64_t seed);

/// Mass functions dependent on another source's decisions: the i-th mass's
/// focal elements are all supersets of decisions[i].
std::vector<MassFunction> gen_dependent(const Frame& frame, std::span<const Decision> decisions,
                                        std::uint64_t seed);

/// The most plausible singleton: argmax of the pignistic probability, ties
/// broken by frame order.
Decision decision_of(const MassFunction& m);

}  // namespace bft

#endif  // BFT_GENERATORS_HPP
