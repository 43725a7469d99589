#ifndef BFT_FRAME_HPP
#define BFT_FRAME_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bft {

/// Domain-rule violation (conflicting evidence, dogmatic input, frame
/// mismatch, ...) as opposed to a malformed argument.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Frame;

/// Subset of a frame, encoded as a bit pattern: bit i set <=> hypothesis i
/// present. Carries the universe size so cross-frame use is detectable.
class Subset {
public:
    Subset() : bits_(0), universe_(0) {}
    Subset(std::uint32_t bits, int universe_size) : bits_(bits), universe_(universe_size) {
        if (universe_size < 1 || universe_size > 20)
            throw std::invalid_argument("Subset: universe size out of range");
        if (bits >> universe_size)
            throw std::invalid_argument("Subset: bit pattern exceeds universe");
    }

    std::uint32_t bits() const { return bits_; }
    int universe_size() const { return universe_; }
    int cardinality() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full_bits(); }
    bool contains(int i) const { return (bits_ >> i) & 1u; }

    Subset operator&(Subset o) const { return binary_op(o, bits_ & o.bits_); }
    Subset operator|(Subset o) const { return binary_op(o, bits_ | o.bits_); }
    Subset complement() const { return Subset(full_bits() & ~bits_, universe_); }
    bool is_subset_of(Subset o) const { return (bits_ & o.bits_) == bits_; }

    bool operator==(const Subset&) const = default;

private:
    std::uint32_t full_bits() const { return (std::uint32_t{1} << universe_) - 1; }
    Subset binary_op(Subset o, std::uint32_t bits) const {
        if (universe_ != o.universe_)
            throw domain_error("Subset: operands live on different frames");
        return Subset(bits, universe_);
    }

    std::uint32_t bits_;
    int universe_;
};

/// Frame of discernment: an ordered set of distinct hypothesis labels.
/// Immutable after construction; at most 20 hypotheses so every subset fits
/// a machine word and the 2^N power set stays enumerable.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    /// Frame with auto-generated labels w1..wN.
    static Frame with_size(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(std::string_view label) const;

    Subset empty_set() const { return Subset(0, size()); }
    Subset full_set() const { return Subset(subset_count() - 1, size()); }
    Subset subset_from_bits(std::uint32_t bits) const { return Subset(bits, size()); }
    Subset subset_of(const std::vector<std::string>& labels) const;

    /// Accepts "{}" (empty set), "*" (full frame), "|"-joined labels, or -
    /// when nothing else matches - a bit string like "101" (MSB = first label).
    Subset parse_subset(std::string_view text) const;

    /// Inverse of parse_subset: "{}", "*", or labels joined by "|" in frame order.
    std::string format_subset(Subset s) const;

    bool operator==(const Frame& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
};

/// Jaccard index of two subsets: |A&B| / |A|B|, with the empty-vs-empty case
/// defined as 1 and empty-vs-nonempty as 0.
double jaccard_index(Subset a, Subset b);

/// All 2^N subsets in canonical order (ascending bit value: empty first,
/// full frame last). This order fixes every dense vector/matrix layout.
std::vector<Subset> enumerate_subsets(const Frame& frame);

}  // namespace bft

#endif  // BFT_FRAME_HPP
