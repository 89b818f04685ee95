#include "illusion/network_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "illusion/error.hpp"

namespace illusion {

using nlohmann::json;

namespace {

int parse_label(const json& label) {
    if (label.is_number_integer()) {
        const auto value = label.get<long long>();
        if (value < 0) fail(ErrorKind::parse, "negative colour " + std::to_string(value));
        return static_cast<int>(value);
    }
    if (label.is_string()) {
        const auto text = label.get<std::string>();
        if (text == "b") return 0;
        if (text == "r") return 1;
        if (text == "g") return 2;
        fail(ErrorKind::parse, "unknown colour '" + text + "'");
    }
    fail(ErrorKind::parse, "label must be a string or an integer");
}

Edge parse_pair(const json& pair) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
        fail(ErrorKind::parse, "expected a pair [u, v], got " + pair.dump());
    }
    const auto u = pair[0].get<long long>();
    const auto v = pair[1].get<long long>();
    if (u < 0 || v < 0) fail(ErrorKind::parse, "negative node id in " + pair.dump());
    return Edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
}

std::vector<Edge> parse_pairs(const json& doc, const char* key) {
    std::vector<Edge> out;
    if (!doc.contains(key)) return out;
    const json& list = doc.at(key);
    if (!list.is_array()) fail(ErrorKind::parse, std::string("'") + key + "' must be an array");
    for (const json& pair : list) out.push_back(parse_pair(pair));
    return out;
}

json pairs_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json label_json(int colour) {
    if (colour == 0) return "b";
    if (colour == 1) return "r";
    return colour;
}

} // namespace

NetworkDocument network_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.at("nodes").is_array()) {
        fail(ErrorKind::parse, "network JSON needs a 'nodes' array");
    }
    const json& nodes = doc.at("nodes");
    const std::size_t n = nodes.size();
    std::vector<char> seen(n, 0);
    PaletteLabels labels(n, 0);
    std::size_t labelled = 0;
    for (const json& node : nodes) {
        if (!node.is_object() || !node.contains("id") || !node.at("id").is_number_integer()) {
            fail(ErrorKind::parse, "every node needs an integer 'id'");
        }
        const auto id = node.at("id").get<long long>();
        if (id < 0 || static_cast<std::size_t>(id) >= n) {
            fail(ErrorKind::parse, "node id " + std::to_string(id) + " is not in 0.." +
                                       std::to_string(n == 0 ? 0 : n - 1));
        }
        if (seen[id]) fail(ErrorKind::parse, "node id " + std::to_string(id) + " listed twice");
        seen[id] = 1;
        if (node.contains("label")) {
            labels[id] = parse_label(node.at("label"));
            ++labelled;
        }
    }
    if (labelled != 0 && labelled != n) {
        fail(ErrorKind::parse, "either every node or no node may carry a label");
    }
    const auto edges = parse_pairs(doc, "edges");
    NetworkDocument out;
    try {
        out.network = SocialNetwork(n, edges);
    } catch (const Error& e) {
        fail(ErrorKind::parse, e.what());
    }
    if (labelled == n && n > 0) out.labels = std::move(labels);
    return out;
}

json network_to_json(const SocialNetwork& sn, const Labelling* labelling) {
    if (labelling) return network_to_json(sn, to_palette(*labelling));
    json nodes = json::array();
    for (NodeId i = 0; i < sn.node_count(); ++i) nodes.push_back({{"id", i}});
    return {{"nodes", nodes}, {"edges", pairs_to_json(sn.edges())}};
}

json network_to_json(const SocialNetwork& sn, const PaletteLabels& labels) {
    json nodes = json::array();
    for (NodeId i = 0; i < sn.node_count(); ++i) {
        nodes.push_back({{"id", i}, {"label", label_json(labels.at(i))}});
    }
    return {{"nodes", nodes}, {"edges", pairs_to_json(sn.edges())}};
}

SocialNetwork network_from_edge_list(std::istream& in, std::optional<std::size_t> node_count) {
    std::vector<Edge> edges;
    std::size_t max_id_plus_one = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) continue;
        std::string rest;
        if (!(fields >> v) || (fields >> rest)) throw ParseError(line_no, "expected 'u v'");
        if (u < 0 || v < 0) throw ParseError(line_no, "negative node id");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
    }
    const std::size_t n = node_count.value_or(max_id_plus_one);
    try {
        return SocialNetwork(n, edges);
    } catch (const Error& e) {
        fail(ErrorKind::parse, e.what());
    }
}

PaletteLabels labels_from_sidecar(std::istream& in, std::size_t node_count) {
    PaletteLabels labels(node_count, -1);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long id = 0;
        std::string label;
        if (!(fields >> id)) continue;
        if (!(fields >> label)) throw ParseError(line_no, "expected 'id label'");
        if (id < 0 || static_cast<std::size_t>(id) >= node_count) {
            throw ParseError(line_no, "node id " + std::to_string(id) + " out of range");
        }
        json value = label;
        if (!label.empty() && std::all_of(label.begin(), label.end(), ::isdigit)) {
            value = std::stoll(label);
        }
        try {
            labels[id] = parse_label(value);
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        if (labels[i] < 0) fail(ErrorKind::parse, "node " + std::to_string(i) + " has no label");
    }
    return labels;
}

Labelling to_binary_labelling(const PaletteLabels& labels) {
    Labelling out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            fail(ErrorKind::palette, "binary operation on a palette with colour " +
                                         std::to_string(labels[i]));
        }
        out[i] = labels[i] == 0 ? Colour::blue : Colour::red;
    }
    return out;
}

PaletteLabels to_palette(const Labelling& labelling) {
    PaletteLabels out(labelling.size());
    for (std::size_t i = 0; i < labelling.size(); ++i) out[i] = labelling[i] == Colour::red ? 1 : 0;
    return out;
}

EditPlan edit_plan_from_json(const json& doc) {
    if (!doc.is_object()) fail(ErrorKind::parse, "edit plan must be a JSON object");
    return EditPlan{parse_pairs(doc, "add"), parse_pairs(doc, "remove")};
}

json edit_plan_to_json(const EditPlan& plan) {
    return {{"add", pairs_to_json(plan.additions)}, {"remove", pairs_to_json(plan.removals)}};
}

json labelling_to_json(const Labelling& labelling) {
    json out = json::array();
    for (Colour c : labelling) out.push_back(std::string(to_string(c)));
    return out;
}

json report_to_json(const IllusionReport& report) {
    json local = json::array();
    for (const auto& w : report.local_winner) {
        local.push_back(w ? json(std::string(to_string(*w))) : json(nullptr));
    }
    return {
        {"global_winner",
         report.global_winner ? json(std::string(to_string(*report.global_winner))) : json(nullptr)},
        {"local_winner", local},
        {"under_illusion", report.under_illusion},
        {"illuded_count", report.illuded_count},
        {"fraction", report.fraction.to_string()},
    };
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, path + ": " + e.what());
    }
}

NetworkDocument load_network(const std::string& path, const std::optional<std::string>& labels_path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    NetworkDocument doc;
    if (first != std::string::npos && text[first] == '{') {
        try {
            doc = network_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            fail(ErrorKind::parse, path + ": " + e.what());
        }
    } else {
        std::istringstream in(text);
        doc.network = network_from_edge_list(in);
    }
    if (labels_path) {
        std::istringstream in(read_text_file(*labels_path));
        doc.labels = labels_from_sidecar(in, doc.network.node_count());
    }
    return doc;
}

} // namespace illusion
