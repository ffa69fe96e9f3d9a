// Acceptance suite: runs every contract criterion at its stated tolerance
// (exact unless noted) and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "expr_corpus.hpp"
#include "oracles.hpp"
#include "qf_cli.hpp"
#include "qf/expr.hpp"
#include "qf/serialize.hpp"
#include "schema_check.hpp"

using namespace qf;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds;
    bool passed{true};
    double elapsed{0.0};
    std::vector<std::string> failures;
};

struct Harness {
    std::vector<Criterion> results;
    Criterion* current{nullptr};

    void require(bool ok, const std::string& what) {
        if (!ok && current) current->failures.push_back(what);
        if (!ok && current) current->passed = false;
    }

    template <typename Fn>
    void criterion(int number, const std::string& title, double limit, Fn&& body) {
        Criterion c{number, title, limit, true, 0.0, {}};
        current = &c;
        auto start = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            c.passed = false;
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.elapsed > c.time_limit_seconds) {
            c.passed = false;
            c.failures.push_back("time limit exceeded");
        }
        current = nullptr;
        results.push_back(std::move(c));
        const auto& r = results.back();
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.number
                  << "  " << r.title << "  [" << std::fixed << std::setprecision(2) << r.elapsed
                  << " s < " << r.time_limit_seconds << " s]\n";
        for (const auto& f : r.failures) std::cout << "      " << f << "\n";
    }

    // Run a configured verification suite; every selected check must pass
    // on a nonempty population.
    void expect_suite_passes(const SweepConfig& cfg) {
        auto report = run_suite(cfg);
        for (const auto& check : report.checks) {
            require(check.outcome == CheckOutcome::pass,
                    "check " + check.name + " did not pass (population " +
                        std::to_string(check.population) + ")");
            for (const auto& ce : check.counterexamples)
                require(false, "  counterexample: " + ce.form + " over " + ce.field + " " +
                                   ce.witness + " " + ce.detail);
        }
    }

    int summarize() {
        std::size_t passed = 0;
        for (const auto& r : results)
            if (r.passed) ++passed;
        std::cout << "\n"
                  << passed << "/" << results.size() << " acceptance criteria passed\n";
        return passed == results.size() ? 0 : 1;
    }
};

SweepConfig config_for(std::vector<FieldDescriptor> fields, std::size_t max_dim,
                       std::vector<std::string> checks) {
    SweepConfig cfg;
    cfg.fields = std::move(fields);
    cfg.max_dim = max_dim;
    cfg.checks = std::move(checks);
    return cfg;
}

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qf::cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string trimmed(const std::string& s) {
    auto end = s.find_last_not_of(" \n\t");
    return end == std::string::npos ? "" : s.substr(0, end + 1);
}

}  // namespace

int main() {
    Harness h;
    auto F3 = parse_field("F3");
    auto F5 = parse_field("F5");
    auto F3x = parse_field("F3((x))");
    auto R = parse_field("R");
    auto Rx = parse_field("R((x))");
    auto C = parse_field("C");
    auto Q = parse_field("Q");

    auto ints = [](const FieldDescriptor& f, std::initializer_list<std::int64_t> vals) {
        std::vector<FieldElement> es;
        for (auto v : vals) es.push_back(FieldElement::from_integer(f, v));
        return diag(f, es);
    };

    // 1. The concrete running example, including the witness, plus the same
    //    verdicts through the verification suite.
    h.criterion(1, "<1,-1,1,1> round over F3, not round over F3((x)), witness x", 1.0, [&] {
        auto q3 = ints(F3, {1, -1, 1, 1});
        h.require(is_round(q3), "expected round over F3");
        auto qx = lift(q3, F3x);
        h.require(!is_round(qx), "expected not round over F3((x))");
        auto xv = FieldElement::variable(F3x, "x");
        h.require(in_H(qx, xv) && !in_G(qx, xv), "expected x in H \\ G");
        auto part = witt_decomposition(qx).anisotropic_part;
        h.require(part.has_value() && !represents(*part, xv),
                  "expected x outside D of the anisotropic kernel");
        h.expect_suite_passes(config_for({F3}, 4, {"anisround_F3"}));
    });

    // 2. Springer additivity, exhaustive over F3 and F5 with parts of
    //    dimension <= 3 each.
    h.criterion(2, "Springer additivity i(p perp x*q) = i(p) + i(q), F3 and F5", 30.0, [&] {
        auto cfg = config_for({F3, F5}, 3, {"springer_additivity"});
        auto report = run_suite(cfg);
        h.require(report.checks[0].outcome == CheckOutcome::pass, "check failed");
        h.require(report.checks[0].population == 196 * 2,
                  "expected 392 pairs, got " + std::to_string(report.checks[0].population));
    });

    // 3. H(q) = D(q)D(q) against exhaustive vector evaluation.
    h.criterion(3, "H-set equals D*D by vector enumeration, F3 and F5, dim <= 3", 60.0, [&] {
        auto report = run_suite(config_for({F3, F5}, 3, {"roussey_H_eq_DD"}));
        h.require(report.checks[0].outcome == CheckOutcome::pass, "check failed");
        h.require(report.checks[0].population == 28,
                  "expected 28 forms, got " + std::to_string(report.checks[0].population));
    });

    // 4. Group characterisation: engine, H <= D, H = D and the closure
    //    oracle agree on every form.
    h.criterion(4, "group iff H <= D iff H = D iff D closed, F3 dim <= 4 and F5 dim <= 3",
                60.0, [&] {
                    h.expect_suite_passes(config_for(
                        {F3}, 4, {"group_iff_H_subset_D", "group_H_equals_D"}));
                    h.expect_suite_passes(config_for(
                        {F5}, 3, {"group_iff_H_subset_D", "group_H_equals_D"}));
                });

    // 5. Round characterisation chain on forms representing 1.
    h.criterion(5, "round iff binary multiples anisotropic-or-hyperbolic, F3 dim <= 4, F3((x)) dim <= 2",
                120.0, [&] {
                    h.expect_suite_passes(config_for({F3}, 4, {"round_char_chain"}));
                    h.expect_suite_passes(config_for({F3x}, 2, {"round_char_chain"}));
                });

    // 6. Laurent going-up for group and anisotropic round forms, one and
    //    two variables.
    h.criterion(6, "group/round transfer to F3((x)) and F3((x))((y)), dim <= 4", 300.0, [&] {
        h.expect_suite_passes(config_for({F3}, 4, {"laurent_going_up", "laurent_tower"}));
    });

    // 7. Generic Pfister multiples preserve the group property.
    h.criterion(7, "group iff q (x) <1,x> group over F((x)), F3 and F5, dim <= 3", 120.0, [&] {
        h.expect_suite_passes(config_for({F3, F5}, 3, {"grouptrans"}));
    });

    // 8. Odd-dimension corollaries across F3, F5, R, R((x)) and C.
    h.criterion(8, "odd-dimensional round forms: all-ones, Pythagorean and quadratically closed criteria",
                60.0, [&] {
                    h.expect_suite_passes(config_for({F3, F5, R, Rx, C}, 3,
                                                     {"rounddim", "oddround", "oddisoround"}));
                    // spot checks stated directly by the contract
                    for (const auto& f : {R, Rx})
                        for (std::size_t r = 0; r <= 2; ++r)
                            h.require(is_round(diag(f, std::vector<FieldElement>(
                                                           2 * r + 1, FieldElement::one(f)))),
                                      "(2r+1)x<1> must be round over " + f.render());
                    for (const auto& f : {F3, F5}) {
                        for_each_form(f, 3, 3, 1u << 20, [&](const QuadraticForm& q) {
                            h.require(!is_round(q),
                                      "no dim-3 round forms over " + f.render() + ": " + q.render());
                        });
                    }
                    // over C, odd isotropic forms are round
                    h.require(is_round(ints(C, {1, 1, 1})), "odd isotropic round over C");
                });

    // 9. Rational isotropy kernel against the lattice-search and
    //    local-solvability oracles; Hilbert product formula.
    h.criterion(9, "Q kernel: 100 random forms vs lattice search and local brute force; product formula",
                120.0, [&] {
                    std::mt19937_64 rng(20260811);
                    std::uniform_int_distribution<std::int64_t> entry(-20, 20);
                    std::uniform_int_distribution<std::size_t> dims(2, 5);
                    int done = 0;
                    while (done < 100) {
                        std::size_t n = dims(rng);
                        std::vector<std::int64_t> raw;
                        for (std::size_t i = 0; i < n; ++i) {
                            std::int64_t v = entry(rng);
                            if (v != 0) raw.push_back(v);
                        }
                        if (raw.size() != n) continue;
                        ++done;
                        std::vector<FieldElement> entries;
                        for (auto v : raw) entries.push_back(FieldElement::from_integer(Q, v));
                        auto q = diag(Q, entries);
                        bool engine = is_isotropic(q);
                        auto canonical = qforacle::rational_entries(q);
                        if (qforacle::q_lattice_isotropic(canonical, 50)) {
                            h.require(engine, "lattice search found a vector for " + q.render() +
                                                  " but the engine says anisotropic");
                        } else {
                            bool local = qforacle::q_locally_isotropic_everywhere(canonical);
                            h.require(engine == local,
                                      "engine and local brute force disagree on " + q.render());
                        }
                    }

                    std::uniform_int_distribution<std::int64_t> pair_entry(-50, 50);
                    int pairs = 0;
                    while (pairs < 200) {
                        std::int64_t a = pair_entry(rng), b = pair_entry(rng);
                        if (a == 0 || b == 0) continue;
                        ++pairs;
                        std::set<std::int64_t> odd;
                        for (auto n : {a, b})
                            for (auto p : num::odd_prime_divisors(n)) odd.insert(p);
                        std::vector<Place> places{Place::real_place(), Place::finite(2)};
                        for (auto p : odd) places.push_back(Place::finite(p));
                        int product = 1;
                        for (const auto& v : places) product *= hilbert_symbol_int(a, b, v);
                        h.require(product == 1, "product formula failed for (" +
                                                    std::to_string(a) + "," + std::to_string(b) +
                                                    ")");
                    }
                });

    // 10. Membership scenario over Q and Q((x)).
    h.criterion(10, "7x<1>: represents 2, 2 in H, 2 not in G; q (x) <1,x> anisotropic over Q((x))",
                10.0, [&] {
                    auto q = diag(Q, std::vector<FieldElement>(7, FieldElement::one(Q)));
                    auto two = FieldElement::from_integer(Q, 2);
                    h.require(represents(q, two), "represents(q, 2)");
                    h.require(in_H(q, two), "2 in H(q)");
                    h.require(!in_G(q, two), "2 not in G(q)");

                    auto Qx = Q.with_variable("x");
                    auto xv = FieldElement::variable(Qx, "x");
                    auto multiple = tensor(lift(q, Qx), pfister(Qx, {xv}));
                    h.require(!is_isotropic(multiple), "q (x) <1,x> anisotropic over Q((x))");
                    auto binary = diag(Qx, {FieldElement::one(Qx),
                                            FieldElement::from_integer(Qx, -2)});
                    h.require(!is_hyperbolic(tensor(binary, multiple)),
                              "<1,-2> (x) q (x) <1,x> is not hyperbolic");
                    h.expect_suite_passes(config_for({Q}, 4, {"genericgnr_Q_membership"}));
                });

    // 11. Pfister sanity and the similar-to-Pfister characterisation.
    h.criterion(11, "Pfister forms round, isotropic ones hyperbolic; Pfister iff similar and represents 1",
                120.0, [&] {
                    h.expect_suite_passes(
                        config_for({F3, F5, F3x, Rx}, 4, {"pfister_round", "simone"}));
                });

    // 12. CLI contract: stated exit codes and verdicts, schema-valid JSON,
    //     round-trip corpus.
    h.criterion(12, "CLI contract: verdicts, exit codes, JSON schema, expression round-trips",
                30.0, [&] {
                    auto a = run_cli({"predicate", "round", "<1,-1,1,1>", "--field", "F3"});
                    h.require(a.exit_code == 0 && trimmed(a.out) == "true",
                              "round over F3 via CLI");
                    auto b = run_cli({"predicate", "round", "<1,-1,1,1>", "--field", "F3((x))"});
                    h.require(b.exit_code == 1 && trimmed(b.out) == "false (witness: x in H \\ G)",
                              "round over F3((x)) via CLI");
                    auto c = run_cli({"sets", "<1,1>", "--field", "Q"});
                    h.require(c.exit_code == 3, "sets over Q exits 3");

                    auto schema = qftest::load_output_schema();
                    for (const auto& args : std::vector<std::vector<std::string>>{
                             {"witt", "<1,-1,1,1>", "--field", "F3", "--format", "json"},
                             {"sets", "<1,-1,1,1>", "--field", "F3((x))", "--format", "json"},
                             {"predicate", "round", "<1,-1,1,1>", "--field", "F3((x))",
                              "--format", "json"},
                             {"sets", "<1,1>", "--field", "Q", "--format", "json"},
                             {"invariants", "<1,1,-7>", "--field", "Q", "--format", "json"}}) {
                        auto result = run_cli(args);
                        std::string why;
                        auto parsed = nlohmann::json::parse(result.out, nullptr, false);
                        h.require(!parsed.is_discarded(), "JSON output parses");
                        if (!parsed.is_discarded())
                            h.require(qftest::validate_against_schema(parsed, schema, &why),
                                      "schema validation: " + why);
                    }

                    auto witt = nlohmann::json::parse(
                        run_cli({"witt", "<1,-1,1,1>", "--field", "F3", "--format", "json"}).out);
                    for (const char* key : {"dim", "witt_index", "hyperbolic", "anisotropic_dim"})
                        h.require(witt["result"].contains(key),
                                  std::string("witt JSON carries ") + key);

                    const auto& corpus = qftest::expression_corpus();
                    h.require(corpus.size() >= 50, "corpus has at least 50 expressions");
                    for (const char* text : corpus) {
                        auto ast = parse_form(text);
                        h.require(equal(*ast, *parse_form(render(*ast))),
                                  std::string("round-trip failed for ") + text);
                    }
                });

    return h.summarize();
}
