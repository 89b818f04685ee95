#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "illusion/error.hpp"
#include "illusion/reduction.hpp"

using namespace illusion;

namespace {

const CnfFormula sat_3cnf{2, {{1, 1, 2}}};
const CnfFormula unsat_3cnf{1, {{1, 1, 1}, {-1, -1, -1}}};
const CnfFormula two_var{2, {{1, 2}, {1, 2}, {-1, -2}, {-1, -2}}};
const CnfFormula xor_like{2, {{1, 2}, {-1, -2}, {1, -2}, {-1, 2}}};

} // namespace

TEST_CASE("verification round trip examples") {
    const auto yes = verify_theorem1_roundtrip(sat_3cnf, Fraction(1));
    CHECK(yes.verdict == Verdict::pass);
    CHECK(yes.sat);
    CHECK(yes.admits == true);
    const auto no = verify_theorem1_roundtrip(unsat_3cnf, Fraction(1));
    CHECK(no.verdict == Verdict::pass);
    CHECK_FALSE(no.sat);
    CHECK(no.admits == false);
    CHECK(verify_theorem1_roundtrip(sat_3cnf, Fraction(3, 4)).verdict == Verdict::pass);
    try {
        verify_theorem1_roundtrip({4, {{1, 2, 4}}}, Fraction(1));
        FAIL("expected a capacity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
    }
}

TEST_CASE("gadget mutations are caught") {
    const auto port = verify_theorem1_roundtrip(unsat_3cnf, Fraction(1), GadgetMutation::drop_clause_port);
    CHECK(port.verdict == Verdict::fail);
    // k = m + 2n - 1 is even here, so the balance gadget is pairs only.
    const auto balance = verify_theorem1_roundtrip({1, {{1, 1, 1}}}, Fraction(1), GadgetMutation::drop_balance_edge);
    CHECK(balance.verdict == Verdict::fail);
}

TEST_CASE("elimination witness examples") {
    for (auto v : {Variant::mixed, Variant::addition}) {
        const auto rec = verify_theorem2_witness(two_var, v, Fraction(1, 2));
        CHECK(rec.verdict == Verdict::pass);
        CHECK(rec.plan_ok == true);
        CHECK(verify_theorem2_witness(two_var, v, Fraction(1, 2), -1).verdict == Verdict::fail);
    }
    for (auto v : {Variant::mixed, Variant::addition, Variant::removal}) {
        const auto rec = verify_theorem2_witness(xor_like, v, Fraction(1, 3));
        CHECK(rec.verdict == Verdict::not_refuted);
        CHECK_FALSE(rec.plan_ok.has_value());
    }
}

TEST_CASE("removal witness exceeds the removal budget") {
    const auto rec = verify_theorem2_witness(two_var, Variant::removal, Fraction(1, 2));
    CHECK(rec.verdict == Verdict::fail);
    CHECK(rec.detail.find("budget_exceeded") != std::string::npos);
    // With 4m + n removals the same witness clears every other check.
    const auto relaxed = verify_theorem2_witness(two_var, Variant::removal, Fraction(1, 2), 2 + 4);
    CHECK(relaxed.verdict == Verdict::pass);
}

TEST_CASE("corpora") {
    const auto three = enumerate_3cnf_corpus(2, 3);
    CHECK(three.size() == 1364);
    for (const auto& item : three) CHECK(is_3cnf(item.formula));
    CHECK(enumerate_2p2n_corpus(1).size() == 9);
    const auto two = enumerate_2p2n_corpus(2);
    for (const auto& item : two) CHECK(is_2p2n(item.formula));
    CHECK_THROWS_AS(enumerate_2p2n_corpus(3), Error);
    const auto rnd = random_2p2n_corpus(3, 5, 9);
    CHECK(rnd.size() == 5);
    CHECK(rnd[0].formula == random_2p2n_corpus(3, 5, 9)[0].formula);
}

TEST_CASE("corpus runs are independent of worker count") {
    const auto items = enumerate_3cnf_corpus(1, 2);
    auto strip = [](std::vector<VerdictRecord> records) {
        for (auto& r : records) r.millis = 0;
        return verdict_log(records);
    };
    const auto serial = strip(run_theorem1_corpus(items, Fraction(1), 1));
    const auto parallel = strip(run_theorem1_corpus(items, Fraction(1), 4));
    CHECK(serial == parallel);
    std::istringstream lines(serial);
    std::string line;
    std::string previous;
    while (std::getline(lines, line)) {
        const auto doc = nlohmann::json::parse(line);
        for (const char* key : {"id", "formula", "variant", "sat", "admits", "verdict", "millis"}) {
            CHECK(doc.contains(key));
        }
        CHECK(doc.at("id").get<std::string>() > previous);
        previous = doc.at("id").get<std::string>();
    }
}

TEST_CASE("errors inside a task become failed records") {
    const std::vector<CorpusItem> items{{"a", sat_3cnf}, {"b", {4, {{1, 2, 4}}}}};
    const auto out = run_theorem1_corpus(items, Fraction(1), 2);
    CHECK(out[0].verdict == Verdict::pass);
    CHECK(out[1].verdict == Verdict::fail);
    CHECK(out[1].detail.find("error") == 0);
}
