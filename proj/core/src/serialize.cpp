#include "qf/serialize.hpp"

#include <sstream>

namespace qf {

using nlohmann::json;

json to_json(const InvariantRecord& r) {
    json out;
    out["field"] = r.field.render();
    out["dim"] = r.dim;
    if (r.det) out["det"] = r.det->render();
    if (r.signature) out["signature"] = {r.signature->first, r.signature->second};
    if (!r.hasse.empty()) {
        json hasse = json::array();
        for (const auto& [place, value] : r.hasse)
            hasse.push_back({{"place", place.render()}, {"value", value}});
        out["hasse"] = std::move(hasse);
    }
    if (r.unit_part || r.x_part) {
        out["unit_part"] = r.unit_part ? to_json(*r.unit_part) : json(nullptr);
        out["x_part"] = r.x_part ? to_json(*r.x_part) : json(nullptr);
    }
    return out;
}

json to_json(const ValueSets& vs) {
    auto render_set = [](const std::set<SquareClass>& s) {
        json out = json::array();
        for (const auto& c : s) out.push_back(c.render());
        return out;
    };
    return json{{"D", render_set(vs.d_set)},
                {"G", render_set(vs.g_set)},
                {"H", render_set(vs.h_set)}};
}

namespace {

const char* outcome_name(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::fail: return "fail";
        case CheckOutcome::vacuous: return "population 0";
    }
    return "?";
}

}  // namespace

json to_json(const VerificationReport& report) {
    json fields = json::array();
    for (const auto& f : report.config.fields) fields.push_back(f.render());

    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name},
                   {"statement", c.statement},
                   {"population", c.population},
                   {"outcome", outcome_name(c.outcome)},
                   {"elapsed_seconds", c.elapsed_seconds}};
        if (!c.counterexamples.empty()) {
            json ces = json::array();
            for (const auto& ce : c.counterexamples)
                ces.push_back({{"field", ce.field},
                               {"form", ce.form},
                               {"witness", ce.witness},
                               {"detail", ce.detail}});
            entry["counterexamples"] = std::move(ces);
        }
        checks.push_back(std::move(entry));
    }

    return json{{"suite", "paper"},
                {"config",
                 {{"fields", std::move(fields)},
                  {"max_dim", report.config.max_dim},
                  {"tower_depth_cap", report.config.tower_depth_cap},
                  {"seed", report.config.seed}}},
                {"checks", std::move(checks)},
                {"all_passed", report.all_passed()}};
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite: paper\nfields:";
    for (const auto& f : report.config.fields) out << " " << f.render();
    out << "\nmax dim " << report.config.max_dim << ", tower depth cap "
        << report.config.tower_depth_cap << ", seed " << report.config.seed << "\n\n";

    std::size_t passed = 0, failed = 0, vacuous = 0;
    for (const auto& c : report.checks) {
        const char* tag = c.outcome == CheckOutcome::pass   ? "PASS"
                          : c.outcome == CheckOutcome::fail ? "FAIL"
                                                            : "POP0";
        (c.outcome == CheckOutcome::pass   ? passed
         : c.outcome == CheckOutcome::fail ? failed
                                           : vacuous) += 1;
        out << tag << "  " << c.name << "  (population " << c.population << ", "
            << c.elapsed_seconds << " s)\n";
        out << "      " << c.statement << "\n";
        for (const auto& ce : c.counterexamples) {
            out << "      counterexample:";
            if (!ce.form.empty()) out << " " << ce.form;
            if (!ce.field.empty()) out << " over " << ce.field;
            if (!ce.witness.empty()) out << ", witness " << ce.witness;
            if (!ce.detail.empty()) out << ": " << ce.detail;
            out << "\n";
        }
    }
    out << "\nsummary: " << report.checks.size() << " checks, " << passed << " pass, " << failed
        << " fail, " << vacuous << " with empty population\n";
    return out.str();
}

}  // namespace qf
