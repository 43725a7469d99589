#ifndef BFT_COMBINATION_HPP
#define BFT_COMBINATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "bft/mass.hpp"

namespace bft {

enum class Rule {
    conjunctive,
    disjunctive,
    dempster,
    yager,
    dubois_prade,
    mean,
    cautious,
    mixed,
};

std::optional<Rule> parse_rule(std::string_view name);
std::string rule_name(Rule rule);

/// m(A) = sum over B&C = A of m1(B) m2(C); conflict may land on the empty set.
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Same combination computed through commonality products and a Moebius
/// inversion; kept as an independent route for cross-checking the focal-pair
/// enumeration.
MassFunction conjunctive_via_commonality(const MassFunction& m1, const MassFunction& m2);

/// m(A) = sum over B|C = A of m1(B) m2(C).
MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2);

/// Normalized conjunctive combination. Throws on total conflict.
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive combination with the conflict mass reassigned to the frame.
MassFunction yager(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive on compatible pairs; a conflicting pair's mass moves to the
/// union of the pair.
MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2);

/// Pointwise average of the inputs. Idempotent, commutative, not associative.
MassFunction mean_rule(std::span<const MassFunction> ms);

/// Combination for possibly dependent sources: pointwise minimum of the
/// canonical weights, recomposed. Requires nondogmatic inputs.
MassFunction cautious(const MassFunction& m1, const MassFunction& m2);

/// Independence-weighted blend: gamma * conjunctive fold + (1-gamma) *
/// cautious fold over the inputs, subset by subset. gamma in [0,1];
/// inputs must be nondogmatic for the cautious leg.
MassFunction mixed(std::span<const MassFunction> ms, double gamma);

/// n-ary driver. Associative rules fold pairwise; mean and mixed are natively
/// n-ary; Yager and Dubois-Prade fold left in input order (they are not
/// associative, so the order matters and is part of the contract).
MassFunction combine_n(Rule rule, std::span<const MassFunction> ms,
                       std::optional<double> gamma = std::nullopt);

}  // namespace bft

#endif  // BFT_COMBINATION_HPP
