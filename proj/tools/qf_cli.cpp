#include "qf_cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qf/expr.hpp"
#include "qf/serialize.hpp"

namespace qf::cli {

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBound = 4;

struct Output {
    std::string command;
    std::string field;
    std::vector<std::string> input;
    json result;
    std::string text;
    std::vector<std::string> witnesses;
    int exit_code = kExitTrue;
    bool produced = false;
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const BoundError*>(&e)) return kExitBound;
    if (dynamic_cast<const UnsupportedError*>(&e)) return kExitUnsupported;
    return kExitUsage;
}

QuadraticForm eval_expr(const std::string& text, const FieldDescriptor& field) {
    return evaluate(*parse_form(text), field);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void set_bool(Output& o, bool verdict) {
    o.result = verdict;
    o.text = bool_text(verdict);
    o.exit_code = verdict ? kExitTrue : kExitFalse;
}

std::string render_set(const std::set<SquareClass>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& c : s) {
        if (!first) out += ", ";
        out += c.render();
        first = false;
    }
    return out + "}";
}

void cmd_eval(Output& o, const FieldDescriptor& f, const std::string& expr) {
    auto q = eval_expr(expr, f);
    o.result = q.render();
    o.text = q.render();
}

void cmd_isotropic(Output& o, const FieldDescriptor& f, const std::string& expr) {
    set_bool(o, is_isotropic(eval_expr(expr, f)));
}

void cmd_witt(Output& o, const FieldDescriptor& f, const std::string& expr) {
    auto q = eval_expr(expr, f);
    auto d = witt_decomposition(q);
    bool hyperbolic = q.dim() % 2 == 0 && d.witt_index == q.dim() / 2;
    o.result = json{{"dim", q.dim()},
                    {"witt_index", d.witt_index},
                    {"hyperbolic", hyperbolic},
                    {"anisotropic_dim", q.dim() - 2 * d.witt_index}};
    std::ostringstream text;
    text << "witt index " << d.witt_index << " (dim " << q.dim() << ", anisotropic dim "
         << q.dim() - 2 * d.witt_index << ", hyperbolic: " << bool_text(hyperbolic) << ")";
    o.text = text.str();
}

void cmd_hyperbolic(Output& o, const FieldDescriptor& f, const std::string& expr) {
    set_bool(o, is_hyperbolic(eval_expr(expr, f)));
}

void cmd_anisotropic_part(Output& o, const FieldDescriptor& f, const std::string& expr) {
    auto d = witt_decomposition(eval_expr(expr, f));
    o.result = json{{"form", d.anisotropic_part ? json(d.anisotropic_part->render()) : json(nullptr)},
                    {"record", to_json(d.anisotropic_invariants)}};
    if (d.anisotropic_part)
        o.text = d.anisotropic_part->render();
    else if (d.anisotropic_invariants.dim == 0)
        o.text = "zero form (hyperbolic)";
    else
        o.text = "invariants only: " + d.anisotropic_invariants.render();
}

void cmd_invariants(Output& o, const FieldDescriptor& f, const std::string& expr) {
    auto r = invariant_record(eval_expr(expr, f));
    o.result = to_json(r);
    o.text = r.render();
}

void cmd_isometric(Output& o, const FieldDescriptor& f, const std::string& a,
                   const std::string& b) {
    set_bool(o, is_isometric(eval_expr(a, f), eval_expr(b, f)));
}

void cmd_similar(Output& o, const FieldDescriptor& f, const std::string& a, const std::string& b) {
    set_bool(o, is_similar(eval_expr(a, f), eval_expr(b, f)));
}

void cmd_sets(Output& o, const FieldDescriptor& f, const std::string& expr) {
    auto vs = value_sets(eval_expr(expr, f));
    o.result = to_json(vs);
    o.text = "D = " + render_set(vs.d_set) + "\nG = " + render_set(vs.g_set) +
             "\nH = " + render_set(vs.h_set);
}

void cmd_member(Output& o, const FieldDescriptor& f, const std::string& set_name,
                const std::string& expr, const std::string& coeff) {
    auto q = eval_expr(expr, f);
    auto a = evaluate_coefficient(coeff, f);
    bool verdict = false;
    if (set_name == "D")
        verdict = represents(q, a);
    else if (set_name == "G")
        verdict = in_G(q, a);
    else if (set_name == "H")
        verdict = in_H(q, a);
    else
        throw DomainError("unknown set '" + set_name + "'; expected D, G or H");
    set_bool(o, verdict);
}

void cmd_predicate(Output& o, const FieldDescriptor& f, const std::string& pred,
                   const std::string& expr) {
    auto q = eval_expr(expr, f);
    bool verdict = false;
    if (pred == "group") {
        verdict = is_group(q);
        if (!verdict)
            if (auto w = group_witness(q)) o.witnesses.push_back(w->render() + " in H \\ D");
    } else if (pred == "round") {
        verdict = is_round(q);
        if (!verdict) {
            if (!represents(q, FieldElement::one(f)))
                o.witnesses.push_back("1 not in D");
            else if (auto w = round_witness(q))
                o.witnesses.push_back(w->render() + " in H \\ G");
        }
    } else if (pred == "pfister") {
        verdict = is_pfister_form(q);
    } else if (pred == "similar-pfister") {
        verdict = is_similar_to_pfister(q);
    } else {
        throw DomainError("unknown predicate '" + pred +
                          "'; expected group, round, pfister or similar-pfister");
    }
    set_bool(o, verdict);
    if (!verdict && !o.witnesses.empty()) o.text += " (witness: " + o.witnesses.front() + ")";
}

void cmd_verify(Output& o, const std::string& suite, std::size_t max_dim,
                std::size_t tower_depth, const std::string& checks_csv, std::uint64_t seed) {
    if (suite != "paper") throw DomainError("unknown suite '" + suite + "'");
    SweepConfig cfg = paper_suite_defaults();
    cfg.max_dim = max_dim;
    cfg.tower_depth_cap = tower_depth;
    cfg.seed = seed;
    if (!checks_csv.empty()) {
        std::stringstream ss(checks_csv);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) cfg.checks.push_back(name);
    }
    auto report = run_suite(cfg);
    o.result = to_json(report);
    o.text = to_text(report);
    o.exit_code = report.all_passed() ? kExitTrue : kExitFalse;
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json envelope{{"command", o.command}};
        if (!o.field.empty()) envelope["field"] = o.field;
        if (!o.input.empty()) envelope["input"] = o.input;
        envelope["result"] = o.result;
        if (!o.witnesses.empty()) envelope["witnesses"] = o.witnesses;
        out << envelope.dump(2) << "\n";
    } else {
        out << o.text << "\n";
    }
}

void emit_error(const std::string& command, const std::string& field,
                const std::vector<std::string>& input, const std::string& message,
                const std::string& format, std::ostream& out, std::ostream& err) {
    err << "error: " << message << "\n";
    if (format == "json") {
        json envelope{{"command", command}, {"error", message}};
        if (!field.empty()) envelope["field"] = field;
        if (!input.empty()) envelope["input"] = input;
        out << envelope.dump(2) << "\n";
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qf - exact arithmetic for diagonal quadratic forms: isotropy, Witt "
                 "decomposition, value sets and the group/round/Pfister predicates",
                 "qf"};
    app.require_subcommand(1);

    std::string field_text;
    std::string format = "text";
    std::string expr1, expr2, set_name, pred_name, coeff_text;
    std::string suite = "paper", checks_csv;
    std::size_t max_dim = 4, tower_depth = 2;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool needs_field) {
        if (needs_field)
            sub->add_option("--field", field_text, "field descriptor, e.g. F3, Q, R((x))")
                ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* eval_cmd = app.add_subcommand("eval", "canonical diagonal of a form expression");
    eval_cmd->add_option("expr", expr1, "form expression")->required();
    add_common(eval_cmd, true);

    auto* isotropic_cmd = app.add_subcommand("isotropic", "does the form represent 0 nontrivially");
    isotropic_cmd->add_option("expr", expr1)->required();
    add_common(isotropic_cmd, true);

    auto* witt_cmd = app.add_subcommand("witt", "Witt index and decomposition data");
    witt_cmd->add_option("expr", expr1)->required();
    add_common(witt_cmd, true);

    auto* hyperbolic_cmd = app.add_subcommand("hyperbolic", "is the form hyperbolic");
    hyperbolic_cmd->add_option("expr", expr1)->required();
    add_common(hyperbolic_cmd, true);

    auto* part_cmd = app.add_subcommand("anisotropic-part", "anisotropic kernel of the form");
    part_cmd->add_option("expr", expr1)->required();
    add_common(part_cmd, true);

    auto* invariants_cmd = app.add_subcommand("invariants", "classification invariants");
    invariants_cmd->add_option("expr", expr1)->required();
    add_common(invariants_cmd, true);

    auto* isometric_cmd = app.add_subcommand("isometric", "are two forms isometric");
    isometric_cmd->add_option("expr1", expr1)->required();
    isometric_cmd->add_option("expr2", expr2)->required();
    add_common(isometric_cmd, true);

    auto* similar_cmd = app.add_subcommand("similar", "are two forms similar");
    similar_cmd->add_option("expr1", expr1)->required();
    similar_cmd->add_option("expr2", expr2)->required();
    add_common(similar_cmd, true);

    auto* sets_cmd = app.add_subcommand("sets", "value sets D, G and H as square classes");
    sets_cmd->add_option("expr", expr1)->required();
    add_common(sets_cmd, true);

    auto* member_cmd = app.add_subcommand("member", "membership of a coefficient in D, G or H");
    member_cmd->add_option("set", set_name, "D, G or H")->required();
    member_cmd->add_option("expr", expr1)->required();
    member_cmd->add_option("coeff", coeff_text)->required();
    add_common(member_cmd, true);

    auto* predicate_cmd =
        app.add_subcommand("predicate", "group / round / pfister / similar-pfister");
    predicate_cmd->add_option("name", pred_name)->required();
    predicate_cmd->add_option("expr", expr1)->required();
    add_common(predicate_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--suite", suite, "suite name")->capture_default_str();
    verify_cmd->add_option("--max-dim", max_dim, "sweep dimension cap")->capture_default_str();
    verify_cmd->add_option("--tower-depth", tower_depth, "Laurent tower depth cap")
        ->capture_default_str();
    verify_cmd->add_option("--checks", checks_csv, "comma-separated check names (default all)");
    verify_cmd->add_option("--seed", seed, "seed echoed into the report")->capture_default_str();
    add_common(verify_cmd, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Output o;
    o.command = sub->get_name();
    o.field = field_text;

    try {
        FieldDescriptor field = FieldDescriptor::rationals();
        if (sub != verify_cmd) field = parse_field(field_text);

        if (sub == eval_cmd) {
            o.input = {expr1};
            cmd_eval(o, field, expr1);
        } else if (sub == isotropic_cmd) {
            o.input = {expr1};
            cmd_isotropic(o, field, expr1);
        } else if (sub == witt_cmd) {
            o.input = {expr1};
            cmd_witt(o, field, expr1);
        } else if (sub == hyperbolic_cmd) {
            o.input = {expr1};
            cmd_hyperbolic(o, field, expr1);
        } else if (sub == part_cmd) {
            o.input = {expr1};
            cmd_anisotropic_part(o, field, expr1);
        } else if (sub == invariants_cmd) {
            o.input = {expr1};
            cmd_invariants(o, field, expr1);
        } else if (sub == isometric_cmd) {
            o.input = {expr1, expr2};
            cmd_isometric(o, field, expr1, expr2);
        } else if (sub == similar_cmd) {
            o.input = {expr1, expr2};
            cmd_similar(o, field, expr1, expr2);
        } else if (sub == sets_cmd) {
            o.input = {expr1};
            cmd_sets(o, field, expr1);
        } else if (sub == member_cmd) {
            o.input = {set_name, expr1, coeff_text};
            cmd_member(o, field, set_name, expr1, coeff_text);
        } else if (sub == predicate_cmd) {
            o.input = {pred_name, expr1};
            cmd_predicate(o, field, pred_name, expr1);
        } else if (sub == verify_cmd) {
            cmd_verify(o, suite, max_dim, tower_depth, checks_csv, seed);
        } else {
            throw DomainError("unhandled subcommand");
        }
    } catch (const std::exception& e) {
        emit_error(o.command, o.field, o.input, e.what(), format, out, err);
        return exit_code_for(e);
    }

    emit(o, format, out);
    return o.exit_code;
}

}  // namespace qf::cli
