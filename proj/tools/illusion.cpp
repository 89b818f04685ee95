#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "illusion/cnf.hpp"
#include "illusion/elimination.hpp"
#include "illusion/error.hpp"
#include "illusion/fixtures.hpp"
#include "illusion/network_io.hpp"
#include "illusion/plurality.hpp"
#include "illusion/reduction.hpp"
#include "illusion/solvers.hpp"
#include "illusion/verification.hpp"

using namespace illusion;
using nlohmann::json;

namespace {

// Exit codes: 0 yes/pass, 1 no/fail, 2 error, 3 not refuted.
constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;
constexpr int exit_not_refuted = 3;

struct Options {
    std::string network;
    std::string labels;
    std::string q = "1";
    bool plurality = false;
    std::string format = "json";
    std::string method;
    std::size_t k = 0;
    std::string mode = "both";
    std::string formula;
    std::string target = "verify";
    std::string variant = "mixed";
    int theorem = 1;
    std::string corpus;
    std::string out;
    std::string map;
    std::string assignment;
    std::string kind;
    std::size_t nodes = 10;
    double p = 0.3;
    int vars = 3;
    int clauses = 3;
    int count = 1;
    bool labelled = false;
    std::uint64_t seed = 1;
    unsigned jobs = 0;
};

unsigned worker_count(const Options& o) {
    if (o.jobs > 0) return o.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Writes through a temporary file so a failure never leaves a partial output.
void write_file(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
        out << text;
        if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(ErrorKind::io, "cannot write '" + path + "'");
    }
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

CnfFormula load_formula(const std::string& path) { return parse_dimacs(read_text_file(path)); }

NetworkDocument load(const Options& o) {
    return load_network(o.network, o.labels.empty() ? std::nullopt : std::optional<std::string>(o.labels));
}

LabelledNetwork load_labelled(const Options& o) {
    auto doc = load(o);
    if (!doc.labels) fail(ErrorKind::domain, "this command needs a labelled network (inline labels or --labels)");
    return LabelledNetwork(doc.network, to_binary_labelling(*doc.labels));
}

void print_table(const IllusionReport& r, const Fraction& q, bool holds) {
    std::printf("node  winner\n");
    for (std::size_t i = 0; i < r.local_winner.size(); ++i) {
        const auto& w = r.local_winner[i];
        std::printf("%4zu  %-6s%s\n", i, w ? std::string(to_string(*w)).c_str() : "-",
                    r.is_illuded(static_cast<NodeId>(i)) ? "  illuded" : "");
    }
    std::printf("global winner: %s\n", r.global_winner ? std::string(to_string(*r.global_winner)).c_str() : "none");
    std::printf("illuded: %zu (%s), q = %s: %s\n", r.illuded_count, r.fraction.to_string().c_str(),
                q.to_string().c_str(), holds ? "yes" : "no");
}

int run_analyze(const Options& o) {
    const Fraction q = Fraction::parse(o.q);
    const auto doc = load(o);
    if (!doc.labels) fail(ErrorKind::domain, "analyze needs labels (inline or --labels)");
    if (o.plurality) {
        int palette = 2;
        for (int c : *doc.labels) palette = std::max(palette, c + 1);
        const MultiLabelling ml(*doc.labels, palette);
        const auto r = plurality_illusion_report(doc.network, ml);
        const bool holds = is_q_plurality_illusion(doc.network, ml, q);
        json local = json::array();
        for (const auto& w : r.local_winner) local.push_back(w ? json(*w) : json(nullptr));
        emit({{"global_winner", r.global_winner ? json(*r.global_winner) : json(nullptr)},
              {"local_winner", local},
              {"under_illusion", r.under_illusion},
              {"illuded_count", r.illuded_count},
              {"fraction", r.fraction.to_string()},
              {"node_count", doc.network.node_count()},
              {"q", q.to_string()},
              {"q_illusion", holds}});
        return holds ? exit_yes : exit_no;
    }
    const LabelledNetwork ln(doc.network, to_binary_labelling(*doc.labels));
    const auto r = illusion_report(ln);
    const bool holds = is_q_illusion(r, ln.node_count(), q);
    if (o.format == "table") {
        print_table(r, q, holds);
    } else {
        json out = report_to_json(r);
        out["node_count"] = ln.node_count();
        out["q"] = q.to_string();
        out["q_illusion"] = holds;
        emit(out);
    }
    return holds ? exit_yes : exit_no;
}

int run_search(const Options& o) {
    const Fraction q = Fraction::parse(o.q);
    const SocialNetwork sn = load(o).network;
    const std::string method = o.method.empty() ? (q == Fraction(1) ? "backtrack" : "brute") : o.method;
    std::optional<Labelling> found;
    if (method == "backtrack") {
        if (q != Fraction(1)) fail(ErrorKind::domain, "method backtrack only answers q = 1");
        found = solve_one_illusion(sn);
    } else if (method == "brute") {
        found = solve_q_illusion_bruteforce(sn, q);
    } else if (method == "cnf") {
        const auto cnf = export_illusion_cnf(sn, q);
        if (const auto model = dpll_sat(cnf.formula)) found = decode_labelling(cnf, *model);
    } else {
        fail(ErrorKind::domain, "unknown method '" + method + "'");
    }
    if (!found) {
        std::cout << "none\n";
        return exit_no;
    }
    const auto r = illusion_report(LabelledNetwork(sn, *found));
    emit({{"method", method},
          {"q", q.to_string()},
          {"labelling", labelling_to_json(*found)},
          {"illuded_count", r.illuded_count},
          {"node_count", sn.node_count()}});
    return exit_yes;
}

int run_eliminate(const Options& o) {
    const Fraction q = Fraction::parse(o.q);
    const auto ln = load_labelled(o);
    const EditMode mode = parse_edit_mode(o.mode);
    const std::string method = o.method.empty() ? "exhaustive" : o.method;
    std::optional<EditPlan> plan;
    if (method == "exhaustive") {
        plan = eliminate_exhaustive(ln, q, o.k, mode);
    } else if (method == "greedy") {
        plan = eliminate_greedy(ln, q, o.k, mode);
    } else {
        fail(ErrorKind::domain, "unknown method '" + method + "'");
    }
    if (!plan) {
        std::cout << "none\n";
        return exit_no;
    }
    const auto verdict = verify_plan(ln, *plan, q, o.k, mode);
    json out = edit_plan_to_json(*plan);
    out["size"] = plan->size();
    out["illuded_after"] = verdict.illuded_after;
    out["verified"] = verdict.ok;
    emit(out);
    return exit_yes;
}

int run_encode(const Options& o) {
    const CnfFormula f = load_formula(o.formula);
    const Fraction q = Fraction::parse(o.q);
    json out;
    if (o.target == "verify") {
        out = encoding_to_json(encode_q(f, q));
    } else if (o.target == "eliminate") {
        const auto base = encode_2p2n(f, parse_variant(o.variant));
        out = elimination_to_json(q == Fraction(1) ? base : attach_pump(base, q));
        out["q"] = q.to_string();
    } else {
        fail(ErrorKind::domain, "unknown target '" + o.target + "'");
    }
    out["target"] = o.target;
    emit(out);
    return exit_yes;
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::pass: return exit_yes;
    case Verdict::fail: return exit_no;
    case Verdict::not_refuted: return exit_not_refuted;
    }
    return exit_error;
}

int run_verify(const Options& o) {
    const Fraction q = Fraction::parse(o.q);
    if (o.theorem != 1 && o.theorem != 2) fail(ErrorKind::domain, "--theorem must be 1 or 2");
    if (!o.corpus.empty()) {
        std::vector<CorpusItem> items;
        if (o.theorem == 1) {
            items = enumerate_3cnf_corpus(2, roundtrip_clause_cap);
            for (auto& it : random_3cnf_corpus(3, 3, o.count, o.seed)) items.push_back(it);
        } else {
            items = enumerate_2p2n_corpus(1);
            for (auto& it : enumerate_2p2n_corpus(2)) items.push_back(it);
            for (auto& it : random_2p2n_corpus(3, o.count, o.seed)) items.push_back(it);
        }
        const auto records = o.theorem == 1
                                 ? run_theorem1_corpus(items, q, worker_count(o))
                                 : run_theorem2_corpus(items, parse_variant(o.variant), q, worker_count(o));
        write_file(o.corpus, verdict_log(records));
        std::size_t failed = 0;
        for (const auto& r : records) failed += r.verdict == Verdict::fail;
        std::cerr << records.size() << " records, " << failed << " failed\n";
        return failed == 0 ? exit_yes : exit_no;
    }
    if (o.formula.empty()) fail(ErrorKind::domain, "verify-reduction needs a formula file or --corpus");
    const CnfFormula f = load_formula(o.formula);
    auto rec = o.theorem == 1 ? verify_theorem1_roundtrip(f, q)
                              : verify_theorem2_witness(f, parse_variant(o.variant), q);
    rec.id = std::filesystem::path(o.formula).stem().string();
    emit(record_to_json(rec));
    return verdict_exit(rec.verdict);
}

int run_export(const Options& o) {
    const Fraction q = Fraction::parse(o.q);
    const auto cnf = export_illusion_cnf(load(o).network, q);
    const std::string dimacs = serialize_dimacs(cnf.formula);
    const std::string map = variable_map_to_json(cnf).dump(2) + "\n";
    if (o.out.empty()) {
        write_file(o.map, map);
        std::cout << dimacs;
    } else {
        write_file(o.out, dimacs);
        write_file(o.map, map);
    }
    return exit_yes;
}

int run_ingest(const Options& o) {
    const IllusionCnf map = variable_map_from_json(read_json_file(o.map));
    std::istringstream in(read_text_file(o.assignment));
    const auto model = parse_model_lines(in, map.formula.variable_count);
    if (!model) {
        std::cout << "none\n";
        return exit_no;
    }
    emit({{"labelling", labelling_to_json(decode_labelling(map, *model))}});
    return exit_yes;
}

int run_gen(const Options& o) {
    if (o.count < 1) fail(ErrorKind::domain, "--count must be at least 1");
    if (o.count > 1 && o.out.empty()) fail(ErrorKind::domain, "--count above 1 needs --out as a directory");
    std::mt19937_64 rng(o.seed);
    auto one = [&](int index) -> std::pair<std::string, std::string> {
        const std::uint64_t s = o.seed + static_cast<std::uint64_t>(index);
        if (o.kind == "graph") {
            std::mt19937_64 g(s);
            std::bernoulli_distribution coin(o.p);
            std::vector<Edge> edges;
            for (NodeId u = 0; u < o.nodes; ++u) {
                for (NodeId v = u + 1; v < o.nodes; ++v) {
                    if (coin(g)) edges.emplace_back(u, v);
                }
            }
            const SocialNetwork sn(o.nodes, edges);
            if (!o.labelled) return {network_to_json(sn).dump(2) + "\n", ".json"};
            Labelling lab(o.nodes);
            for (auto& c : lab) c = coin(g) ? Colour::red : Colour::blue;
            return {network_to_json(sn, &lab).dump(2) + "\n", ".json"};
        }
        if (o.kind == "3cnf") return {serialize_dimacs(generate_3cnf(o.vars, o.clauses, s)), ".cnf"};
        if (o.kind == "2p2n") return {serialize_dimacs(generate_2p2n(o.vars, s)), ".cnf"};
        fail(ErrorKind::domain, "unknown generator '" + o.kind + "'");
    };
    if (o.count == 1) {
        const auto [text, ext] = one(0);
        if (o.out.empty()) {
            std::cout << text;
        } else {
            write_file(o.out, text);
        }
        return exit_yes;
    }
    std::filesystem::create_directories(o.out);
    for (int i = 0; i < o.count; ++i) {
        const auto [text, ext] = one(i);
        char name[64];
        std::snprintf(name, sizeof name, "%s-%04d%s", o.kind.c_str(), i, ext.c_str());
        write_file((std::filesystem::path(o.out) / name).string(), text);
    }
    return exit_yes;
}

int run_fixture(const Options& o) {
    std::string text;
    if (o.kind == "fig1") {
        const auto fx = fixture_fig1();
        text = network_to_json(fx.network(), &fx.labelling()).dump(2) + "\n";
    } else if (o.kind == "fig10") {
        const auto fx = fixture_fig10();
        text = network_to_json(fx.network, fx.labelling.colours()).dump(2) + "\n";
    } else {
        text = serialize_dimacs(CnfFormula{2, {{1, 2}, {-1, -2}, {1, -2}, {-1, 2}}});
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file(o.out, text);
    }
    return exit_yes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majority illusion analysis, search, elimination and reductions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--jobs", o.jobs, "Worker threads for corpus runs (0 = all cores)");
    app.add_option("--seed", o.seed, "Seed for every random choice");

    auto* analyze = app.add_subcommand("analyze", "Illusion report for a labelled network");
    analyze->add_option("network", o.network)->required();
    analyze->add_option("--labels", o.labels, "Sidecar 'id label' file");
    analyze->add_option("--q", o.q);
    analyze->add_flag("--plurality", o.plurality);
    analyze->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));

    auto* search = app.add_subcommand("search", "Find a labelling that induces a q-illusion");
    search->add_option("network", o.network)->required();
    search->add_option("--q", o.q)->required();
    search->add_option("--method", o.method)->check(CLI::IsMember({"backtrack", "brute", "cnf"}));

    auto* eliminate = app.add_subcommand("eliminate", "Find edge edits that end a q-illusion");
    eliminate->add_option("network", o.network)->required();
    eliminate->add_option("--labels", o.labels);
    eliminate->add_option("--q", o.q)->required();
    eliminate->add_option("--k", o.k)->required();
    eliminate->add_option("--mode", o.mode)->check(CLI::IsMember({"both", "add", "remove"}));
    eliminate->add_option("--method", o.method)->check(CLI::IsMember({"exhaustive", "greedy"}));

    auto* encode = app.add_subcommand("encode", "Encode a CNF formula as a network");
    encode->add_option("formula", o.formula)->required();
    encode->add_option("--target", o.target)->check(CLI::IsMember({"verify", "eliminate"}));
    encode->add_option("--q", o.q);
    encode->add_option("--variant", o.variant)->check(CLI::IsMember({"mixed", "addition", "removal"}));

    auto* verify = app.add_subcommand("verify-reduction", "Check a reduction on one formula or a corpus");
    verify->add_option("formula", o.formula);
    verify->add_option("--theorem", o.theorem)->required();
    verify->add_option("--q", o.q);
    verify->add_option("--variant", o.variant)->check(CLI::IsMember({"mixed", "addition", "removal"}));
    verify->add_option("--corpus", o.corpus, "Run the generated corpus and write a JSON-lines log here");
    verify->add_option("--count", o.count, "Random formulas added to the corpus");

    auto* exporter = app.add_subcommand("export-cnf", "DIMACS whose models are q-illusion labellings");
    exporter->add_option("network", o.network)->required();
    exporter->add_option("--q", o.q)->required();
    exporter->add_option("--map", o.map, "Variable map JSON output")->required();
    exporter->add_option("--out", o.out, "DIMACS output (stdout if omitted)");

    auto* ingest = app.add_subcommand("ingest-model", "Decode a solver model into a labelling");
    ingest->add_option("map", o.map)->required();
    ingest->add_option("assignment", o.assignment)->required();

    auto* gen = app.add_subcommand("gen", "Generate graphs or formulas");
    gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"graph", "3cnf", "2p2n"}));
    gen->add_option("--nodes", o.nodes);
    gen->add_option("--p", o.p);
    gen->add_flag("--labelled", o.labelled);
    gen->add_option("--vars", o.vars);
    gen->add_option("--clauses", o.clauses);
    gen->add_option("--count", o.count);
    gen->add_option("--out", o.out, "Output file, or directory when --count > 1");

    auto* fixture = app.add_subcommand("fixture", "Print a built-in example network or formula");
    fixture->add_option("name", o.kind)->required()->check(CLI::IsMember({"fig1", "fig10", "xor-like"}));
    fixture->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (analyze->parsed()) return run_analyze(o);
        if (search->parsed()) return run_search(o);
        if (eliminate->parsed()) return run_eliminate(o);
        if (encode->parsed()) return run_encode(o);
        if (verify->parsed()) return run_verify(o);
        if (exporter->parsed()) return run_export(o);
        if (ingest->parsed()) return run_ingest(o);
        if (gen->parsed()) return run_gen(o);
        if (fixture->parsed()) return run_fixture(o);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
