#include "bft/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace bft {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("Frame: needs at least one hypothesis");
    if (labels_.size() > 20) throw std::invalid_argument("Frame: at most 20 hypotheses supported");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("Frame: empty hypothesis label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("Frame: duplicate hypothesis label '" + l + "'");
    }
}

Frame Frame::with_size(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("Frame: size must be in [1, 20]");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
    return Frame(std::move(labels));
}

std::optional<int> Frame::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Subset Frame::subset_of(const std::vector<std::string>& labels) const {
    std::uint32_t bits = 0;
    for (const auto& l : labels) {
        const auto idx = index_of(l);
        if (!idx) throw std::invalid_argument("Frame: unknown hypothesis '" + l + "'");
        bits |= std::uint32_t{1} << *idx;
    }
    return Subset(bits, size());
}

Subset Frame::parse_subset(std::string_view text) const {
    if (text == "{}") return empty_set();
    if (text == "*") return full_set();

    // label form first, so a label that happens to look like "101" wins
    std::uint32_t bits = 0;
    bool label_form = true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t bar = text.find('|', pos);
        const std::string_view part =
            text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
        const auto idx = index_of(part);
        if (!idx) {
            label_form = false;
            break;
        }
        bits |= std::uint32_t{1} << *idx;
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    if (label_form && !text.empty()) return Subset(bits, size());

    // bit-string fallback: exactly N characters of 0/1, MSB = first label
    if (static_cast<int>(text.size()) == size() &&
        std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; })) {
        bits = 0;
        for (int i = 0; i < size(); ++i)
            if (text[static_cast<std::size_t>(i)] == '1') bits |= std::uint32_t{1} << i;
        return Subset(bits, size());
    }
    throw std::invalid_argument("Frame: cannot parse subset '" + std::string(text) + "'");
}

std::string Frame::format_subset(Subset s) const {
    if (s.universe_size() != size())
        throw domain_error("Frame: subset belongs to a different frame");
    if (s.is_empty()) return "{}";
    if (s.is_full()) return "*";
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (!s.contains(i)) continue;
        if (!out.empty()) out += '|';
        out += labels_[static_cast<std::size_t>(i)];
    }
    return out;
}

double jaccard_index(Subset a, Subset b) {
    if (a.universe_size() != b.universe_size())
        throw domain_error("jaccard_index: subsets live on different frames");
    const std::uint32_t uni = a.bits() | b.bits();
    if (uni == 0) return 1.0;  // both empty
    return static_cast<double>(std::popcount(a.bits() & b.bits())) /
           static_cast<double>(std::popcount(uni));
}

std::vector<Subset> enumerate_subsets(const Frame& frame) {
    std::vector<Subset> out;
    out.reserve(frame.subset_count());
    for (std::uint32_t bits = 0; bits < frame.subset_count(); ++bits)
        out.push_back(frame.subset_from_bits(bits));
    return out;
}

}  // namespace bft
