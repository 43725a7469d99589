#ifndef BFT_JSON_IO_HPP
#define BFT_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "bft/generators.hpp"
#include "bft/independence.hpp"
#include "bft/mass.hpp"

namespace bft {

// Wire formats:
//   frame    ["a", "b", "c"]
//   mass     {"frame": [...], "masses": {"a": 0.3, "a|c": 0.2, "*": 0.5}}
//            with "{}" for the empty set and "*" for the whole frame;
//            subset keys also accept bit strings ("101", MSB = first label).
//   stream   [mass, mass, ...] (all on one frame)
//   weights  {"frame": [...], "weights": {"a": 0.7}}  (non-1 entries only)
//   decisions {"frame": [...], "decisions": [["a"], ["b","c"], ...]}

nlohmann::json frame_to_json(const Frame& frame);
Frame frame_from_json(const nlohmann::json& j);

nlohmann::json subset_to_json(const Frame& frame, Subset s);  // sorted label array
Subset subset_from_json(const Frame& frame, const nlohmann::json& j);

nlohmann::json mass_to_json(const MassFunction& m);
/// Parses and validates; mass sums within 1e-6 of 1 are renormalized exactly.
MassFunction mass_from_json(const nlohmann::json& j);

nlohmann::json weights_to_json(const WeightFunction& w);
WeightFunction weights_from_json(const nlohmann::json& j);

nlohmann::json stream_to_json(const std::vector<MassFunction>& ms);
std::vector<MassFunction> stream_from_json(const nlohmann::json& j);

nlohmann::json decisions_to_json(const Frame& frame, const std::vector<Decision>& decisions);
std::pair<Frame, std::vector<Decision>> decisions_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const IndependenceReport& report);
nlohmann::json multi_source_to_json(const MultiSourceIndependence& multi);

nlohmann::json load_json_file(const std::string& path);
MassFunction load_mass_file(const std::string& path);
std::vector<MassFunction> load_stream_file(const std::string& path);

}  // namespace bft

#endif  // BFT_JSON_IO_HPP
