#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "illusion/cnf.hpp"
#include "illusion/elimination.hpp"
#include "illusion/error.hpp"
#include "illusion/fixtures.hpp"
#include "illusion/network_io.hpp"
#include "illusion/plurality.hpp"
#include "illusion/reduction.hpp"
#include "illusion/solvers.hpp"
#include "illusion/thresholds.hpp"
#include "illusion/verification.hpp"

namespace py = pybind11;
using namespace illusion;

namespace {

// q may be an int, a fractions.Fraction or an "a/b" string.
Fraction to_fraction(const py::handle& q) { return Fraction::parse(py::str(q).cast<std::string>()); }

py::object to_python(const nlohmann::json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

Labelling to_labelling(const std::vector<std::string>& labels) {
    Labelling out;
    out.reserve(labels.size());
    for (const auto& s : labels) {
        if (s == "b" || s == "blue") {
            out.push_back(Colour::blue);
        } else if (s == "r" || s == "red") {
            out.push_back(Colour::red);
        } else {
            fail(ErrorKind::domain, "label '" + s + "' is neither b nor r");
        }
    }
    return out;
}

std::vector<std::string> from_labelling(const Labelling& lab) {
    std::vector<std::string> out;
    for (Colour c : lab) out.emplace_back(to_string(c));
    return out;
}

SocialNetwork make_network(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) es.emplace_back(u, v);
    return SocialNetwork(n, es);
}

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

CnfFormula make_formula(int variables, const std::vector<Clause>& clauses) {
    CnfFormula f{variables, clauses};
    check_formula(f);
    return f;
}

std::optional<std::vector<bool>> model_values(const std::optional<Assignment>& a) {
    if (!a) return std::nullopt;
    return std::vector<bool>(a->begin() + 1, a->end());
}

} // namespace

PYBIND11_MODULE(_illusion, m) {
    m.doc() = "Majority illusions in social networks";

    static py::exception<Error> error(m, "IllusionError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error((std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<SocialNetwork>(m, "Network")
        .def(py::init(&make_network), py::arg("node_count"), py::arg("edges"))
        .def_static("from_json", [](const std::string& text) { return network_from_json(nlohmann::json::parse(text)).network; })
        .def_property_readonly("node_count", &SocialNetwork::node_count)
        .def_property_readonly("edges", [](const SocialNetwork& sn) { return edge_pairs(sn.edges()); })
        .def("neighbours", [](const SocialNetwork& sn, NodeId i) {
            const auto nb = sn.neighbours(i);
            return std::vector<NodeId>(nb.begin(), nb.end());
        })
        .def("to_json", [](const SocialNetwork& sn) { return network_to_json(sn).dump(); })
        .def("__repr__", [](const SocialNetwork& sn) {
            return "Network(node_count=" + std::to_string(sn.node_count()) + ", edges=" +
                   std::to_string(sn.edges().size()) + ")";
        });

    m.def("fig1", [] {
        const auto fx = fixture_fig1();
        return py::make_tuple(fx.network(), from_labelling(fx.labelling()));
    }, "Nine-node network with a full illusion, and its labelling.");
    m.def("fig10", [] {
        auto fx = fixture_fig10();
        return py::make_tuple(fx.network, fx.labelling.colours());
    }, "Thirteen-node network with a full three-colour plurality illusion.");

    m.def("illusion_report", [](const SocialNetwork& sn, const std::vector<std::string>& labels) {
        return to_python(report_to_json(illusion_report(LabelledNetwork(sn, to_labelling(labels)))));
    }, py::arg("network"), py::arg("labels"));
    m.def("is_q_illusion", [](const SocialNetwork& sn, const std::vector<std::string>& labels, const py::object& q) {
        return is_q_illusion(LabelledNetwork(sn, to_labelling(labels)), to_fraction(q));
    }, py::arg("network"), py::arg("labels"), py::arg("q"));
    m.def("plurality_report", [](const SocialNetwork& sn, const std::vector<int>& colours, int palette) {
        const auto r = plurality_illusion_report(sn, MultiLabelling(colours, palette));
        py::dict out;
        out["global_winner"] = r.global_winner;
        out["local_winner"] = r.local_winner;
        out["under_illusion"] = r.under_illusion;
        out["illuded_count"] = r.illuded_count;
        out["fraction"] = r.fraction.to_string();
        return out;
    }, py::arg("network"), py::arg("colours"), py::arg("palette"));

    m.def("solve_one_illusion", [](const SocialNetwork& sn) -> std::optional<std::vector<std::string>> {
        if (auto lab = solve_one_illusion(sn)) return from_labelling(*lab);
        return std::nullopt;
    }, py::arg("network"), py::call_guard<py::gil_scoped_release>());
    m.def("solve_q_illusion", [](const SocialNetwork& sn, const py::object& q, const std::string& method)
              -> std::optional<std::vector<std::string>> {
        const Fraction fq = to_fraction(q);
        py::gil_scoped_release release;
        std::optional<Labelling> lab;
        if (method == "brute") {
            lab = solve_q_illusion_bruteforce(sn, fq);
        } else if (method == "cnf") {
            const auto cnf = export_illusion_cnf(sn, fq);
            if (auto model = dpll_sat(cnf.formula)) lab = decode_labelling(cnf, *model);
        } else {
            fail(ErrorKind::domain, "method must be brute or cnf");
        }
        if (lab) return from_labelling(*lab);
        return std::nullopt;
    }, py::arg("network"), py::arg("q"), py::arg("method") = "brute");

    m.def("eliminate", [](const SocialNetwork& sn, const std::vector<std::string>& labels, const py::object& q,
                          std::size_t k, const std::string& mode, const std::string& method) -> py::object {
        const LabelledNetwork ln(sn, to_labelling(labels));
        const Fraction fq = to_fraction(q);
        const EditMode em = parse_edit_mode(mode);
        std::optional<EditPlan> plan;
        {
            py::gil_scoped_release release;
            if (method == "exhaustive") {
                plan = eliminate_exhaustive(ln, fq, k, em);
            } else if (method == "greedy") {
                plan = eliminate_greedy(ln, fq, k, em);
            } else {
                fail(ErrorKind::domain, "method must be exhaustive or greedy");
            }
        }
        if (!plan) return py::none();
        return py::make_tuple(edge_pairs(plan->additions), edge_pairs(plan->removals));
    }, py::arg("network"), py::arg("labels"), py::arg("q"), py::arg("k"), py::arg("mode") = "both",
       py::arg("method") = "exhaustive");

    m.def("threshold_h_star", [](std::int64_t k, const py::object& q) { return threshold_h_star(k, to_fraction(q)); });
    m.def("threshold_h_sharp", [](std::int64_t mm, std::int64_t k, const py::object& q) {
        return threshold_h_sharp(mm, k, to_fraction(q));
    });
    m.def("threshold_h_plus", [](std::int64_t mm, std::int64_t k, const py::object& q) {
        return threshold_h_plus(mm, k, to_fraction(q));
    });

    m.def("sat", [](int variables, const std::vector<Clause>& clauses) {
        return model_values(dpll_sat(make_formula(variables, clauses)));
    }, py::arg("variables"), py::arg("clauses"), "A satisfying assignment for variables 1..n, or None.");
    m.def("parse_dimacs", [](const std::string& text) {
        const auto f = parse_dimacs(text);
        return py::make_tuple(f.variable_count, f.clauses);
    });

    m.def("encode_verification", [](int variables, const std::vector<Clause>& clauses, const py::object& q) {
        return to_python(encoding_to_json(encode_q(make_formula(variables, clauses), to_fraction(q))));
    }, py::arg("variables"), py::arg("clauses"), py::arg("q") = 1);
    m.def("encode_elimination", [](int variables, const std::vector<Clause>& clauses, const std::string& variant,
                                   const py::object& q) {
        const auto base = encode_2p2n(make_formula(variables, clauses), parse_variant(variant));
        const Fraction fq = to_fraction(q);
        return to_python(elimination_to_json(fq == Fraction(1) ? base : attach_pump(base, fq)));
    }, py::arg("variables"), py::arg("clauses"), py::arg("variant") = "mixed", py::arg("q") = 1);

    m.def("verify_reduction", [](int variables, const std::vector<Clause>& clauses, int theorem,
                                 const py::object& q, const std::string& variant) {
        const auto f = make_formula(variables, clauses);
        const Fraction fq = to_fraction(q);
        if (theorem != 1 && theorem != 2) fail(ErrorKind::domain, "theorem must be 1 or 2");
        VerdictRecord rec;
        {
            py::gil_scoped_release release;
            rec = theorem == 1 ? verify_theorem1_roundtrip(f, fq) : verify_theorem2_witness(f, parse_variant(variant), fq);
        }
        return to_python(record_to_json(rec));
    }, py::arg("variables"), py::arg("clauses"), py::arg("theorem"), py::arg("q") = 1, py::arg("variant") = "mixed");
}
