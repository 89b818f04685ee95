#include <sstream>

#include "illusion/error.hpp"
#include "illusion/solvers.hpp"

namespace illusion {

namespace {

class Encoder {
public:
    int fresh() { return ++top_; }
    int top() const { return top_; }
    void clause(Clause c) { clauses_.push_back(std::move(c)); }
    std::vector<Clause>& clauses() { return clauses_; }

    // Literal that is always true, backed by a unit clause.
    int truth() {
        if (truth_ == 0) {
            truth_ = fresh();
            clause({truth_});
        }
        return truth_;
    }

    // Sequential counter: returns s[1..k] where s[j] <=> at least j inputs are true.
    std::vector<int> at_least_outputs(const std::vector<int>& inputs, int k) {
        const int t = truth();
        std::vector<int> prev(k + 1, -t); // row 0: no inputs seen
        prev[0] = t;
        for (int x : inputs) {
            std::vector<int> row(k + 1, 0);
            row[0] = t;
            for (int j = 1; j <= k; ++j) {
                const int s = fresh();
                const int a = prev[j];
                const int b = prev[j - 1];
                // s <=> a or (b and x)
                clause({-a, s});
                clause({-b, -x, s});
                clause({-s, a, b});
                clause({-s, a, x});
                row[j] = s;
            }
            prev = std::move(row);
        }
        return prev;
    }

private:
    int top_ = 0;
    int truth_ = 0;
    std::vector<Clause> clauses_;
};

} // namespace

IllusionCnf export_illusion_cnf(const SocialNetwork& sn, const Fraction& q) {
    if (!(q > Fraction(1, 2)) || q > Fraction(1)) {
        fail(ErrorKind::domain, "CNF export needs 1/2 < q <= 1, got " + q.to_string());
    }
    const std::size_t n = sn.node_count();
    IllusionCnf out;
    Encoder enc;
    for (std::size_t i = 0; i < n; ++i) out.node_vars.push_back(enc.fresh());
    for (std::size_t i = 0; i < n; ++i) out.indicator_vars.push_back(enc.fresh());
    out.aux_lo = enc.top() + 1;

    for (NodeId i = 0; i < n; ++i) {
        const int y = out.indicator_vars[i];
        const int need = static_cast<int>(sn.degree(i)) / 2 + 1;
        if (sn.degree(i) == 0) {
            enc.clause({-y});
            continue;
        }
        std::vector<int> inputs;
        for (NodeId j : sn.neighbours(i)) inputs.push_back(out.node_vars[j]);
        const int s = enc.at_least_outputs(inputs, need)[need];
        enc.clause({-y, s});
        enc.clause({y, -s});
    }

    const auto cap = static_cast<int>(n == 0 ? 0 : (n - 1) / 2);
    if (n > 0) {
        const int over = enc.at_least_outputs(out.node_vars, cap + 1)[cap + 1];
        enc.clause({-over});
    }

    const auto needed = static_cast<int>(min_count_reaching(static_cast<std::int64_t>(n), q));
    if (needed > 0) {
        const int reached = enc.at_least_outputs(out.indicator_vars, needed)[needed];
        enc.clause({reached});
    }
    out.aux_hi = enc.top();
    out.formula.variable_count = enc.top();
    out.formula.clauses = std::move(enc.clauses());
    if (n == 0) out.formula.clauses.push_back({}); // no global winner without nodes
    return out;
}

nlohmann::json variable_map_to_json(const IllusionCnf& cnf) {
    nlohmann::json nodes = nlohmann::json::object();
    nlohmann::json indicators = nlohmann::json::object();
    for (std::size_t i = 0; i < cnf.node_vars.size(); ++i) nodes[std::to_string(i)] = cnf.node_vars[i];
    for (std::size_t i = 0; i < cnf.indicator_vars.size(); ++i) {
        indicators[std::to_string(i)] = cnf.indicator_vars[i];
    }
    return {{"node_vars", nodes},
            {"indicator_vars", indicators},
            {"aux_range", {cnf.aux_lo, cnf.aux_hi}},
            {"variable_count", cnf.formula.variable_count}};
}

IllusionCnf variable_map_from_json(const nlohmann::json& doc) {
    IllusionCnf out;
    try {
        const auto& nodes = doc.at("node_vars");
        out.node_vars.assign(nodes.size(), 0);
        for (auto it = nodes.begin(); it != nodes.end(); ++it) {
            const std::size_t i = std::stoul(it.key());
            if (i >= out.node_vars.size()) fail(ErrorKind::parse, "node_vars keys must be 0..n-1");
            out.node_vars[i] = it.value().get<int>();
        }
        if (doc.contains("indicator_vars")) {
            const auto& ind = doc.at("indicator_vars");
            out.indicator_vars.assign(ind.size(), 0);
            for (auto it = ind.begin(); it != ind.end(); ++it) {
                const std::size_t i = std::stoul(it.key());
                if (i >= out.indicator_vars.size()) fail(ErrorKind::parse, "indicator_vars keys must be 0..n-1");
                out.indicator_vars[i] = it.value().get<int>();
            }
        }
        if (doc.contains("aux_range")) {
            out.aux_lo = doc.at("aux_range").at(0).get<int>();
            out.aux_hi = doc.at("aux_range").at(1).get<int>();
        }
        out.formula.variable_count = doc.value("variable_count", out.aux_hi);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("bad variable map: ") + e.what());
    } catch (const std::logic_error& e) {
        fail(ErrorKind::parse, std::string("bad variable map key: ") + e.what());
    }
    for (int v : out.node_vars) {
        if (v <= 0) fail(ErrorKind::parse, "variable map has a non-positive node variable");
    }
    return out;
}

std::optional<Assignment> parse_model_lines(std::istream& in, int variable_count) {
    Assignment a(variable_count + 1, false);
    std::string line;
    std::size_t line_no = 0;
    bool saw_literal = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;
        if (token == "c") continue;
        if (token == "s") {
            std::string status;
            fields >> status;
            if (status == "UNSATISFIABLE") return std::nullopt;
            continue;
        }
        if (token == "UNSAT" || token == "UNSATISFIABLE") return std::nullopt;
        if (token == "SAT" || token == "SATISFIABLE") continue;
        if (token == "v") {
            if (!(fields >> token)) continue;
        }
        do {
            long long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad literal '" + token + "' in model");
            }
            if (lit == 0) continue;
            const long long v = lit < 0 ? -lit : lit;
            if (v > variable_count) continue;
            a[v] = lit > 0;
            saw_literal = true;
        } while (fields >> token);
    }
    if (!saw_literal && variable_count > 0) fail(ErrorKind::parse, "model contains no literals");
    return a;
}

Labelling decode_labelling(const IllusionCnf& map, const Assignment& model) {
    Labelling lab(map.node_vars.size());
    for (std::size_t i = 0; i < map.node_vars.size(); ++i) {
        const int v = map.node_vars[i];
        if (v >= static_cast<int>(model.size())) fail(ErrorKind::parse, "model is missing node variables");
        lab[i] = model[v] ? Colour::red : Colour::blue;
    }
    return lab;
}

} // namespace illusion
