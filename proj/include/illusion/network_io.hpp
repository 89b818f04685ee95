#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "illusion/network.hpp"

namespace illusion {

// Palette colours as read from files: "b" -> 0, "r" -> 1, "g" -> 2, integers as-is.
using PaletteLabels = std::vector<int>;

struct NetworkDocument {
    SocialNetwork network;
    std::optional<PaletteLabels> labels; // present only when every node carries a label
};

// {"nodes": [{"id": int, "label": "b"|"r"|"g"|int}], "edges": [[int, int]]}
// Ids must be exactly 0..n-1, each listed once. Labels are all-or-nothing.
NetworkDocument network_from_json(const nlohmann::json& doc);
nlohmann::json network_to_json(const SocialNetwork& sn, const Labelling* labelling = nullptr);
nlohmann::json network_to_json(const SocialNetwork& sn, const PaletteLabels& labels);

// Plain "u v" edge list; '#' starts a comment. node_count defaults to max id + 1.
SocialNetwork network_from_edge_list(std::istream& in, std::optional<std::size_t> node_count = {});
// Sidecar "id label" lines.
PaletteLabels labels_from_sidecar(std::istream& in, std::size_t node_count);

// Rejects any colour outside {0, 1}.
Labelling to_binary_labelling(const PaletteLabels& labels);
PaletteLabels to_palette(const Labelling& labelling);

// {"add": [[u, v]], "remove": [[u, v]]}
EditPlan edit_plan_from_json(const nlohmann::json& doc);
nlohmann::json edit_plan_to_json(const EditPlan& plan);

nlohmann::json labelling_to_json(const Labelling& labelling);
nlohmann::json report_to_json(const IllusionReport& report);

// Reads a whole file or throws an io error.
std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

// Accepts either JSON (by extension or leading '{') or an edge list.
NetworkDocument load_network(const std::string& path, const std::optional<std::string>& labels_path = {});

} // namespace illusion
