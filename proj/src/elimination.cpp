#include "illusion/elimination.hpp"

#include <algorithm>
#include <set>

#include "illusion/error.hpp"
#include "illusion/network_io.hpp"
#include "illusion/thresholds.hpp"

namespace illusion {

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::mixed: return "mixed";
    case Variant::addition: return "addition";
    case Variant::removal: return "removal";
    }
    return "mixed";
}

Variant parse_variant(std::string_view text) {
    if (text == "mixed") return Variant::mixed;
    if (text == "addition") return Variant::addition;
    if (text == "removal") return Variant::removal;
    fail(ErrorKind::domain, "unknown variant '" + std::string(text) + "'");
}

int literal_slot(Literal lit) {
    return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
}

namespace {

Literal slot_literal(int slot) {
    const int v = slot / 2 + 1;
    return slot % 2 == 0 ? v : -v;
}

PumpGadget make_pump_down(int k) {
    PumpGadget g;
    g.kind = PumpKind::down;
    g.k = k;
    const int odd = k % 2 == 1 ? k : k - 1;
    std::vector<NodeId> clique(odd);
    NetworkBuilder b;
    for (int i = 0; i < odd; ++i) clique[i] = b.add_node();
    b.add_clique(clique);
    g.labelling.assign(odd, Colour::blue);
    for (int i = 0; i < odd / 2; ++i) g.labelling[odd - 1 - i] = Colour::red;
    if (odd != k) {
        b.add_node();
        g.labelling.push_back(Colour::red);
    }
    g.network = b.build();
    return g;
}

// Tracks colours and running margins while an encoding is assembled.
class Draft {
public:
    NodeId add(Colour c, Role role, std::optional<int> designated = std::nullopt) {
        const NodeId id = builder_.add_node();
        colour_.push_back(c);
        roles_.push_back(role);
        designated_.push_back(designated);
        margin_.push_back(0);
        return id;
    }

    void link(NodeId a, NodeId b) {
        if (a == b || !edges_.insert(Edge(a, b)).second) return;
        builder_.add_edge(a, b);
        margin_[a] += colour_[b] == Colour::blue ? 1 : -1;
        margin_[b] += colour_[a] == Colour::blue ? 1 : -1;
    }

    void clique(const std::vector<NodeId>& members) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) link(members[i], members[j]);
        }
    }

    // Hangs enough new nodes of colour c on target to bring its margin to goal.
    std::vector<NodeId> pad(NodeId target, Colour c, int goal, RoleKind kind) {
        const int diff = goal - margin_[target];
        const int step = c == Colour::blue ? 1 : -1;
        if (diff * step < 0) fail(ErrorKind::construction, "cannot pad a node past its goal margin");
        std::vector<NodeId> out;
        for (int i = 0; i < diff * step; ++i) {
            const NodeId v = add(c, {kind, static_cast<int>(target), i});
            link(v, target);
            out.push_back(v);
        }
        return out;
    }

    void designate(NodeId v, int margin) { designated_[v] = margin; }
    int margin(NodeId v) const { return margin_[v]; }
    std::size_t size() const { return colour_.size(); }

    std::vector<NodeId> add_fillers() {
        const auto red = static_cast<std::int64_t>(std::count(colour_.begin(), colour_.end(), Colour::red));
        const auto blue = static_cast<std::int64_t>(colour_.size()) - red;
        std::vector<NodeId> out;
        for (std::int64_t i = 0; i < std::max<std::int64_t>(0, red - blue + 1); ++i) {
            out.push_back(add(Colour::blue, {RoleKind::filler_blue, 0, static_cast<int>(i)}));
        }
        return out;
    }

    void finish(EliminationEncoding& enc) {
        enc.labelled = LabelledNetwork(builder_.build(), colour_);
        enc.roles = roles_;
        enc.designated_margin = designated_;
        enc.base_node_count = colour_.size();
    }

private:
    NetworkBuilder builder_;
    std::set<Edge> edges_;
    Labelling colour_;
    RoleMap roles_;
    std::vector<std::optional<int>> designated_;
    std::vector<int> margin_;
};

std::vector<std::set<Literal>> clause_literals(const CnfFormula& f) {
    std::vector<std::set<Literal>> out;
    for (const Clause& c : f.clauses) out.emplace_back(c.begin(), c.end());
    return out;
}

void check_2p2n(const CnfFormula& f) {
    check_formula(f);
    if (!is_2p2n(f) || f.variable_count < 1) {
        fail(ErrorKind::precondition, "elimination encodings need a 2P2N formula");
    }
}

void start(EliminationEncoding& enc, const CnfFormula& f, Variant variant) {
    enc.formula = f;
    enc.variant = variant;
    enc.m = f.variable_count;
    enc.n = static_cast<int>(f.clauses.size());
    enc.literal_nodes.resize(2 * enc.m);
    enc.auxiliary.resize(2 * enc.m);
    enc.extra.resize(enc.m);
    enc.verifier.resize(enc.n);
}

void add_literal_triples(Draft& d, EliminationEncoding& enc, Colour c, std::optional<int> designated) {
    for (int s = 0; s < 2 * enc.m; ++s) {
        for (int j = 0; j < 3; ++j) {
            enc.literal_nodes[s][j] = d.add(c, {RoleKind::literal_node, slot_literal(s), j}, designated);
        }
    }
}

std::int64_t count_illuded(const EliminationEncoding& enc) {
    return static_cast<std::int64_t>(illusion_report(enc.labelled).illuded_count);
}

} // namespace

PumpGadget build_pump_up(int k) {
    if (k < 1) fail(ErrorKind::domain, "pump-up gadget needs k >= 1");
    PumpGadget g;
    g.kind = PumpKind::up;
    g.k = k;
    NetworkBuilder b;
    const NodeId first_blue = b.add_nodes(k + 4);
    const NodeId first_red = b.add_nodes(4);
    for (NodeId r = first_red; r < first_red + 4; ++r) {
        for (NodeId v = first_blue; v < first_blue + static_cast<NodeId>(k + 4); ++v) b.add_edge(r, v);
    }
    g.network = b.build();
    g.labelling.assign(k + 4, Colour::blue);
    g.labelling.resize(k + 8, Colour::red);
    return g;
}

PumpGadget build_pump_down(int k) {
    if (k < 3) fail(ErrorKind::domain, "pump-down gadget needs k >= 3");
    return make_pump_down(k);
}

EliminationEncoding encode_2p2n_mixed(const CnfFormula& f) {
    check_2p2n(f);
    EliminationEncoding enc;
    start(enc, f, Variant::mixed);
    const int m = enc.m;
    const auto in_clause = clause_literals(f);
    Draft d;
    add_literal_triples(d, enc, Colour::blue, -1);
    std::vector<NodeId> all_literals;
    for (const auto& t : enc.literal_nodes) all_literals.insert(all_literals.end(), t.begin(), t.end());
    d.clique(all_literals);

    for (int s = 0; s < 2 * m; ++s) {
        enc.auxiliary[s] = d.add(Colour::blue, {RoleKind::auxiliary, slot_literal(s), 0}, -3);
    }
    d.clique(enc.auxiliary);
    for (int s = 0; s < 2 * m; ++s) {
        for (int t = 0; t < 2 * m; ++t) {
            if (t == s) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.auxiliary[s], v);
        }
    }

    for (int i = 0; i < m; ++i) enc.extra[i] = d.add(Colour::blue, {RoleKind::extra, i + 1, 0}, -1);
    d.clique(enc.extra);
    for (int i = 0; i < m; ++i) {
        for (NodeId a : enc.auxiliary) d.link(enc.extra[i], a);
        for (int t = 0; t < 2 * m; ++t) {
            if (t / 2 == i) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.extra[i], v);
        }
    }

    for (int c = 0; c < enc.n; ++c) {
        enc.verifier[c] = d.add(Colour::blue, {RoleKind::verifier, c, 0}, -1);
        for (int t = 0; t < 2 * m; ++t) {
            if (in_clause[c].count(slot_literal(t))) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.verifier[c], v);
        }
        for (NodeId a : enc.auxiliary) d.link(enc.verifier[c], a);
        for (NodeId e : enc.extra) d.link(enc.verifier[c], e);
    }

    for (NodeId v : all_literals) d.pad(v, Colour::red, -1, RoleKind::red_group);
    for (NodeId a : enc.auxiliary) d.pad(a, Colour::red, -3, RoleKind::red_group);
    for (NodeId e : enc.extra) d.pad(e, Colour::red, -1, RoleKind::red_group);
    for (NodeId v : enc.verifier) d.pad(v, Colour::red, -1, RoleKind::red_group);
    enc.fillers = d.add_fillers();
    d.finish(enc);

    enc.budget = 6LL * m;
    enc.requirement = m;
    enc.allowed_remaining = enc.requirement;
    enc.i_phi = count_illuded(enc);
    return enc;
}

EliminationEncoding encode_2p2n_addition(const CnfFormula& f) {
    check_2p2n(f);
    EliminationEncoding enc;
    start(enc, f, Variant::addition);
    const int m = enc.m;
    const auto in_clause = clause_literals(f);
    Draft d;
    add_literal_triples(d, enc, Colour::blue, std::nullopt);

    for (int s = 0; s < 2 * m; ++s) {
        enc.auxiliary[s] = d.add(Colour::red, {RoleKind::auxiliary, slot_literal(s), 0}, -3);
        for (int t = 0; t < 2 * m; ++t) {
            if (t == s) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.auxiliary[s], v);
        }
    }
    for (int i = 0; i < m; ++i) {
        enc.extra[i] = d.add(Colour::red, {RoleKind::extra, i + 1, 0}, -1);
        for (int t = 0; t < 2 * m; ++t) {
            if (t / 2 == i) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.extra[i], v);
        }
    }
    for (int c = 0; c < enc.n; ++c) {
        enc.verifier[c] = d.add(Colour::red, {RoleKind::verifier, c, 0}, -1);
        for (int t = 0; t < 2 * m; ++t) {
            if (in_clause[c].count(slot_literal(t))) continue;
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.verifier[c], v);
        }
    }

    std::vector<NodeId> anchored;
    std::vector<NodeId> partners;
    auto keep = [&](const std::vector<NodeId>& group) {
        anchored.insert(anchored.end(), group.begin(), group.end());
    };
    for (NodeId a : enc.auxiliary) keep(d.pad(a, Colour::red, -3, RoleKind::red_group));
    for (NodeId e : enc.extra) keep(d.pad(e, Colour::red, -1, RoleKind::red_group));
    for (NodeId v : enc.verifier) keep(d.pad(v, Colour::red, -1, RoleKind::red_group));
    for (const auto& triple : enc.literal_nodes) {
        for (NodeId v : triple) {
            for (NodeId blue : d.pad(v, Colour::blue, 2, RoleKind::balance_blue)) {
                const NodeId partner = d.add(Colour::red, {RoleKind::red_partner, static_cast<int>(blue), 0});
                d.link(partner, blue);
                partners.push_back(partner);
            }
        }
    }
    std::vector<NodeId> pool = anchored;
    pool.insert(pool.end(), partners.begin(), partners.end());
    d.clique(pool);
    for (NodeId v : pool) d.designate(v, d.margin(v));
    enc.fillers = d.add_fillers();
    d.finish(enc);

    enc.budget = enc.n + 4LL * m;
    enc.requirement = enc.n + 2LL * m;
    enc.i_phi = count_illuded(enc);
    enc.allowed_remaining = enc.i_phi - enc.requirement;
    return enc;
}

EliminationEncoding encode_2p2n_removal(const CnfFormula& f) {
    check_2p2n(f);
    EliminationEncoding enc;
    start(enc, f, Variant::removal);
    const int m = enc.m;
    const auto in_clause = clause_literals(f);
    Draft d;
    add_literal_triples(d, enc, Colour::red, std::nullopt);

    for (int s = 0; s < 2 * m; ++s) {
        enc.auxiliary[s] = d.add(Colour::blue, {RoleKind::auxiliary, slot_literal(s), 0}, -3);
        for (NodeId v : enc.literal_nodes[s]) d.link(enc.auxiliary[s], v);
    }
    for (int i = 0; i < m; ++i) {
        enc.extra[i] = d.add(Colour::blue, {RoleKind::extra, i + 1, 0}, -1);
        for (int t : {2 * i, 2 * i + 1}) {
            for (NodeId v : enc.literal_nodes[t]) d.link(enc.extra[i], v);
        }
        d.pad(enc.extra[i], Colour::blue, -1, RoleKind::blue_pendant);
    }
    for (int c = 0; c < enc.n; ++c) {
        enc.verifier[c] = d.add(Colour::blue, {RoleKind::verifier, c, 0}, -1);
        for (Literal lit : in_clause[c]) {
            for (NodeId v : enc.literal_nodes[literal_slot(lit)]) d.link(enc.verifier[c], v);
        }
        d.pad(enc.verifier[c], Colour::blue, -1, RoleKind::blue_pendant);
    }
    std::vector<NodeId> partners;
    for (const auto& triple : enc.literal_nodes) {
        for (NodeId v : triple) {
            for (NodeId red : d.pad(v, Colour::red, 1, RoleKind::red_group)) {
                const NodeId partner = d.add(Colour::blue, {RoleKind::blue_partner, static_cast<int>(red), 0});
                d.link(partner, red);
                partners.push_back(partner);
            }
        }
    }
    d.clique(partners);
    enc.fillers = d.add_fillers();
    d.finish(enc);

    enc.budget = 3LL * m;
    enc.requirement = m;
    enc.allowed_remaining = enc.requirement;
    enc.i_phi = count_illuded(enc);
    return enc;
}

EliminationEncoding encode_2p2n(const CnfFormula& f, Variant variant) {
    switch (variant) {
    case Variant::mixed: return encode_2p2n_mixed(f);
    case Variant::addition: return encode_2p2n_addition(f);
    case Variant::removal: return encode_2p2n_removal(f);
    }
    fail(ErrorKind::domain, "unknown variant");
}

namespace {

void append_pump(EliminationEncoding& enc, const PumpGadget& g) {
    const auto offset = static_cast<NodeId>(enc.node_count());
    std::vector<Edge> edges = enc.labelled.network().edges();
    for (const Edge& e : g.network.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    Labelling lab = enc.labelled.labelling();
    const int index = static_cast<int>(enc.pumps.size());
    for (NodeId i = 0; i < g.network.node_count(); ++i) {
        lab.push_back(g.labelling[i]);
        const bool up = g.kind == PumpKind::up;
        enc.roles.push_back({up ? RoleKind::pump_up : RoleKind::pump_down, index, static_cast<int>(i)});
        enc.designated_margin.push_back(up && g.labelling[i] == Colour::blue ? std::optional<int>(-4)
                                                                              : std::nullopt);
    }
    enc.labelled = LabelledNetwork(SocialNetwork(offset + g.network.node_count(), edges), std::move(lab));
    enc.pumps.push_back({g.kind, g.k, offset, g.network.node_count()});
}

std::int64_t pump_illuded(const EliminationEncoding& enc) {
    std::int64_t total = 0;
    for (const auto& p : enc.pumps) {
        if (p.kind == PumpKind::up) total += p.k + 4;
    }
    return total;
}

bool threshold_straddled(std::int64_t x, std::int64_t t, const Fraction& q) {
    return ratio_below(x, t, q) && ratio_at_least(x + 1, t, q);
}

void pump_down_to(EliminationEncoding& enc, const Fraction& q) {
    const std::int64_t x = enc.allowed_remaining + pump_illuded(enc);
    const auto t = static_cast<std::int64_t>(enc.node_count());
    const std::int64_t h = threshold_h_plus(x, t, q);
    append_pump(enc, make_pump_down(static_cast<int>(h)));
}

} // namespace

EliminationEncoding attach_pump(const EliminationEncoding& base, const Fraction& q) {
    if (!(q > Fraction(0)) || !(q < Fraction(1))) {
        fail(ErrorKind::domain, "q = " + q.to_string() + " must lie in (0, 1)");
    }
    EliminationEncoding enc = base;
    // Usually one pump settles it; the pump-up(1) fallback covers h# = 0.
    for (int round = 0; round < 4; ++round) {
        const std::int64_t x = enc.allowed_remaining + pump_illuded(enc);
        const auto t = static_cast<std::int64_t>(enc.node_count());
        if (threshold_straddled(x, t, q)) break;
        if (ratio_at_least(x, t, q)) {
            pump_down_to(enc, q);
            continue;
        }
        std::int64_t k = 0;
        if (ratio_below(x + 4, t + 4, q)) k = threshold_h_sharp(x + 4, t + 4, q);
        append_pump(enc, build_pump_up(static_cast<int>(std::max<std::int64_t>(k, 1))));
    }
    const std::int64_t x = enc.allowed_remaining + pump_illuded(enc);
    if (!threshold_straddled(x, static_cast<std::int64_t>(enc.node_count()), q)) {
        fail(ErrorKind::construction, "pump arithmetic failed to straddle q = " + q.to_string());
    }
    return enc;
}

EditPlan plan_from_model(const EliminationEncoding& enc, const Assignment& model) {
    if (!satisfies(enc.formula, model)) fail(ErrorKind::witness, "model does not satisfy the formula");
    const int m = enc.m;
    EditPlan plan;
    auto& out = enc.variant == Variant::removal ? plan.removals : plan.additions;
    auto true_literal = [&](int v) { return model[v] ? v : -v; };

    // Literal nodes still free for one more edit, per literal slot.
    std::vector<int> next_free(2 * m, 0);
    for (int v = 1; v <= m; ++v) {
        const Literal f_lit = -true_literal(v);
        const int s = literal_slot(f_lit);
        for (NodeId node : enc.literal_nodes[s]) out.emplace_back(node, enc.auxiliary[s]);
        const int t = literal_slot(true_literal(v));
        out.emplace_back(enc.literal_nodes[t][0], enc.extra[v - 1]);
        next_free[t] = 1;
    }
    for (int c = 0; c < enc.n; ++c) {
        const Clause& clause = enc.formula.clauses[c];
        const auto it = std::find_if(clause.begin(), clause.end(),
                                     [&](Literal l) { return literal_true(l, model); });
        const int s = literal_slot(*it);
        if (next_free[s] > 2) fail(ErrorKind::construction, "literal used by more than two verifiers");
        out.emplace_back(enc.literal_nodes[s][next_free[s]++], enc.verifier[c]);
    }
    if (enc.variant == Variant::mixed) {
        if (enc.fillers.empty()) fail(ErrorKind::construction, "mixed encoding has no filler node");
        for (int v = 1; v <= m; ++v) {
            const int s = literal_slot(true_literal(v));
            while (next_free[s] < 3) plan.additions.emplace_back(enc.literal_nodes[s][next_free[s]++], enc.fillers[0]);
        }
    }
    return plan;
}

std::vector<GroupSizeNote> group_size_discrepancies(const EliminationEncoding& enc) {
    const int m = enc.m;
    const int n = enc.n;
    const SocialNetwork& sn = enc.labelled.network();
    auto group_size = [&](NodeId anchor, RoleKind kind) {
        std::int64_t count = 0;
        for (NodeId v : sn.neighbours(anchor)) {
            if (v < enc.roles.size() && enc.roles[v].kind == kind && enc.roles[v].owner == static_cast<int>(anchor)) ++count;
        }
        return count;
    };
    const auto in_clause = clause_literals(enc.formula);
    auto clauses_with = [&](Literal lit) {
        return static_cast<std::int64_t>(std::count_if(in_clause.begin(), in_clause.end(),
                                                        [&](const auto& c) { return c.count(lit) > 0; }));
    };
    std::vector<GroupSizeNote> notes;
    auto note = [&](std::string role, std::int64_t derived, std::int64_t formula) {
        if (derived != formula) notes.push_back({std::move(role), derived, formula});
    };
    for (int s = 0; s < 2 * m; ++s) {
        const Literal lit = slot_literal(s);
        const std::string name = "L=" + std::to_string(lit);
        const std::int64_t with = clauses_with(lit);
        switch (enc.variant) {
        case Variant::mixed:
            note("literal group " + name, group_size(enc.literal_nodes[s][0], RoleKind::red_group), 9LL * m + (n - with) - 2);
            note("auxiliary group " + name, group_size(enc.auxiliary[s], RoleKind::red_group), 9LL * m + n - 1);
            break;
        case Variant::addition:
            note("auxiliary group " + name, group_size(enc.auxiliary[s], RoleKind::red_group), 6LL * m - 3);
            note("balance blues " + name, group_size(enc.literal_nodes[s][0], RoleKind::balance_blue), (n - with) + 3LL * m - 1);
            break;
        case Variant::removal:
            note("literal group " + name, group_size(enc.literal_nodes[s][0], RoleKind::red_group), with + 2);
            break;
        }
    }
    for (int i = 0; i < m; ++i) {
        switch (enc.variant) {
        case Variant::mixed:
            note("extra group p" + std::to_string(i + 1), group_size(enc.extra[i], RoleKind::red_group), 6LL * m + 9LL * m - 6);
            break;
        case Variant::addition:
            note("extra group p" + std::to_string(i + 1), group_size(enc.extra[i], RoleKind::red_group), 6LL * m - 5);
            break;
        case Variant::removal:
            note("extra pendants p" + std::to_string(i + 1), group_size(enc.extra[i], RoleKind::blue_pendant), 5);
            break;
        }
    }
    for (int c = 0; c < n; ++c) {
        const auto distinct = static_cast<std::int64_t>(in_clause[c].size());
        const std::string name = "C" + std::to_string(c);
        switch (enc.variant) {
        case Variant::mixed:
            note("verifier group " + name, group_size(enc.verifier[c], RoleKind::red_group), 3 * (2LL * m - distinct) + 3LL * m + 1);
            break;
        case Variant::addition:
            note("verifier group " + name, group_size(enc.verifier[c], RoleKind::red_group), 6LL * m - 3 * distinct + 1);
            break;
        case Variant::removal:
            note("verifier pendants " + name, group_size(enc.verifier[c], RoleKind::blue_pendant), 3 * distinct - 1);
            break;
        }
    }
    return notes;
}

MarginAudit audit_margins(const EliminationEncoding& enc) {
    MarginAudit audit;
    const auto report = illusion_report(enc.labelled);
    audit.illuded = report.illuded_count;
    if (report.global_winner != Colour::blue) {
        audit.ok = false;
        audit.problems.push_back("blue is not the strict global winner");
    }
    for (NodeId i = 0; i < enc.node_count(); ++i) {
        const bool illuded = report.is_illuded(i);
        const auto& want = enc.designated_margin[i];
        if (want) {
            ++audit.designated;
            const int got = margin_of_victory(enc.labelled, i);
            if (got != *want || !illuded) {
                audit.ok = false;
                audit.problems.push_back(role_tag(enc.roles[i]) + " node " + std::to_string(i) +
                                         " has margin " + std::to_string(got) + ", expected " +
                                         std::to_string(*want));
            }
        } else if (illuded) {
            audit.ok = false;
            audit.problems.push_back(role_tag(enc.roles[i]) + " node " + std::to_string(i) +
                                     " is illuded but not designated");
        }
    }
    return audit;
}

nlohmann::json elimination_to_json(const EliminationEncoding& enc) {
    nlohmann::json doc = network_to_json(enc.labelled.network(), &enc.labelled.labelling());
    nlohmann::json roles = nlohmann::json::array();
    for (const Role& r : enc.roles) roles.push_back(role_tag(r));
    doc["roles"] = roles;
    doc["variant"] = std::string(to_string(enc.variant));
    doc["budget"] = enc.budget;
    doc["requirement"] = enc.requirement;
    doc["i_phi"] = enc.i_phi;
    doc["allowed_remaining"] = enc.allowed_remaining;
    doc["m"] = enc.m;
    doc["n"] = enc.n;
    nlohmann::json pumps = nlohmann::json::array();
    for (const auto& p : enc.pumps) {
        pumps.push_back({{"kind", p.kind == PumpKind::up ? "up" : "down"},
                         {"k", p.k},
                         {"first", p.first},
                         {"size", p.size}});
    }
    doc["pumps"] = pumps;
    return doc;
}

} // namespace illusion
