#include "qf/expr.hpp"

#include <cctype>

namespace qf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormExprPtr parse_expression_all() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw err("unexpected trailing input");
        return e;
    }

    Coefficient parse_coefficient_all() {
        auto c = parse_coeff();
        skip_ws();
        if (pos_ != text_.size()) throw err("unexpected trailing input");
        return c;
    }

private:
    std::string_view text_;
    std::size_t pos_{0};

    ParseError err(const std::string& msg) const { return ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_eat(c)) throw err(std::string("expected '") + c + "' " + what);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_letter() { return std::islower(static_cast<unsigned char>(peek())) != 0; }

    std::uint64_t parse_nat() {
        skip_ws();
        if (!at_digit()) throw err("expected a number");
        std::uint64_t n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (n > (UINT64_MAX - 9) / 10) throw err("number too large");
            n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    std::string parse_ident() {
        skip_ws();
        if (!at_letter()) throw err("expected an identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                       std::isdigit(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    FormExprPtr parse_expr() {
        auto lhs = parse_term();
        while (try_eat('+')) {
            auto rhs = parse_term();
            lhs = std::make_shared<FormExpr>(FormExpr{PerpNode{lhs, rhs}});
        }
        return lhs;
    }

    FormExprPtr parse_term() {
        auto lhs = parse_factor();
        while (try_eat('*')) {
            auto rhs = parse_factor();
            lhs = std::make_shared<FormExpr>(FormExpr{TensorNode{lhs, rhs}});
        }
        return lhs;
    }

    bool at_factor_start() {
        char c = peek();
        return c == '<' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::islower(static_cast<unsigned char>(c)) || c == '-';
    }

    FormExprPtr parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '<') {
            ++pos_;
            std::vector<Coefficient> coeffs;
            coeffs.push_back(parse_coeff());
            while (try_eat(',')) coeffs.push_back(parse_coeff());
            expect('>', "to close the diagonal");
            return std::make_shared<FormExpr>(FormExpr{DiagNode{std::move(coeffs)}});
        }
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            expect(')', "to close the group");
            return e;
        }
        if (at_letter()) {
            std::size_t save = pos_;
            std::string ident = parse_ident();
            if (ident == "pfister" && peek() == '(') {
                ++pos_;
                std::vector<Coefficient> slots;
                slots.push_back(parse_coeff());
                while (try_eat(',')) slots.push_back(parse_coeff());
                expect(')', "to close pfister(...)");
                return std::make_shared<FormExpr>(FormExpr{PfisterNode{std::move(slots)}});
            }
            if (ident == "hyp" && peek() == '(') {
                ++pos_;
                std::uint64_t n = parse_nat();
                expect(')', "to close hyp(...)");
                return std::make_shared<FormExpr>(FormExpr{HypNode{n}});
            }
            // A bare monomial coefficient, e.g. "x*<1,1>".
            pos_ = save;
            return parse_scaled();
        }
        if (at_digit()) {
            // Disambiguate  nat "x" factor  from a coefficient that merely
            // starts with a number.
            std::size_t save = pos_;
            std::uint64_t n = parse_nat();
            skip_ws();
            if (at_letter()) {
                std::size_t ident_pos = pos_;
                std::string ident = parse_ident();
                if (ident == "x" && at_factor_start()) {
                    auto operand = parse_factor();
                    return std::make_shared<FormExpr>(FormExpr{RepeatNode{n, std::move(operand)}});
                }
                pos_ = ident_pos;
            }
            pos_ = save;
            return parse_scaled();
        }
        if (c == '-') return parse_scaled();
        throw err("expected a form factor");
    }

    FormExprPtr parse_scaled() {
        Coefficient coeff = parse_coeff();
        expect('*', "after a scaling coefficient");
        auto operand = parse_factor();
        return std::make_shared<FormExpr>(FormExpr{ScaleNode{std::move(coeff), std::move(operand)}});
    }

    Coefficient parse_coeff() {
        skip_ws();
        Coefficient c;
        bool negative = try_eat('-');
        bool have_number = false;
        if (at_digit()) {
            std::int64_t numv = to_signed(parse_nat());
            std::int64_t denv = 1;
            std::size_t save = pos_;
            if (try_eat('/')) {
                if (at_digit()) {
                    denv = to_signed(parse_nat());
                    if (denv == 0) throw err("zero denominator");
                } else {
                    pos_ = save;
                }
            }
            c.value = num::Rational::make(numv, denv);
            have_number = true;
        }
        while (at_letter()) {
            std::string var = parse_ident();
            std::int64_t e = 1;
            std::size_t save = pos_;
            if (try_eat('^')) {
                bool eneg = try_eat('-');
                if (!at_digit()) {
                    pos_ = save;
                } else {
                    e = to_signed(parse_nat());
                    if (eneg) e = -e;
                }
            }
            bool merged = false;
            for (auto& [name, exp] : c.monomial)
                if (name == var) {
                    exp = num::checked_add(exp, e);
                    merged = true;
                    break;
                }
            if (!merged) c.monomial.emplace_back(std::move(var), e);
        }
        if (!have_number && c.monomial.empty()) throw err("expected a coefficient");
        if (negative) c.value = -c.value;
        return c;
    }

    static std::int64_t to_signed(std::uint64_t n) {
        if (n > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError("number too large");
        return static_cast<std::int64_t>(n);
    }
};

bool is_atomic(const FormExpr& e) {
    return std::holds_alternative<DiagNode>(e.node) || std::holds_alternative<PfisterNode>(e.node) ||
           std::holds_alternative<HypNode>(e.node);
}

std::string render_factor(const FormExpr& e) {
    if (is_atomic(e) || std::holds_alternative<ScaleNode>(e.node) ||
        std::holds_alternative<RepeatNode>(e.node))
        return render(e);
    return "(" + render(e) + ")";
}

}  // namespace

std::string Coefficient::render() const {
    std::string mono;
    for (const auto& [var, e] : monomial) {
        if (!mono.empty()) mono += " ";
        mono += var;
        if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) return value.render();
    if (value == num::Rational::integer(1)) return mono;
    if (value == num::Rational::integer(-1)) return "-" + mono;
    return value.render() + mono;
}

FormExprPtr parse_form(std::string_view text) { return Parser(text).parse_expression_all(); }

std::string render(const FormExpr& expr) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, DiagNode>) {
                std::string out = "<";
                for (std::size_t i = 0; i < n.coeffs.size(); ++i) {
                    if (i) out += ",";
                    out += n.coeffs[i].render();
                }
                return out + ">";
            } else if constexpr (std::is_same_v<T, PfisterNode>) {
                std::string out = "pfister(";
                for (std::size_t i = 0; i < n.slots.size(); ++i) {
                    if (i) out += ",";
                    out += n.slots[i].render();
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, HypNode>) {
                return "hyp(" + std::to_string(n.planes) + ")";
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return n.scalar.render() + "*" + render_factor(*n.operand);
            } else if constexpr (std::is_same_v<T, PerpNode>) {
                std::string rhs = std::holds_alternative<PerpNode>(n.rhs->node)
                                      ? "(" + render(*n.rhs) + ")"
                                      : render(*n.rhs);
                return render(*n.lhs) + " + " + rhs;
            } else if constexpr (std::is_same_v<T, TensorNode>) {
                std::string rhs = std::holds_alternative<TensorNode>(n.rhs->node)
                                      ? "(" + render(*n.rhs) + ")"
                                      : render_factor(*n.rhs);
                return render_factor(*n.lhs) + "*" + rhs;
            } else {
                static_assert(std::is_same_v<T, RepeatNode>);
                std::string inner = render_factor(*n.operand);
                // A space keeps "x" from lexing together with a following
                // letter or digit ("3x 2*<1>" vs "3x2*<1>").
                bool needs_space = !inner.empty() && (std::isalnum(static_cast<unsigned char>(inner[0])) != 0);
                return std::to_string(n.count) + "x" + (needs_space ? " " : "") + inner;
            }
        },
        expr.node);
}

bool equal(const FormExpr& a, const FormExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, DiagNode>) {
                return na.coeffs == nb.coeffs;
            } else if constexpr (std::is_same_v<T, PfisterNode>) {
                return na.slots == nb.slots;
            } else if constexpr (std::is_same_v<T, HypNode>) {
                return na.planes == nb.planes;
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return na.scalar == nb.scalar && equal(*na.operand, *nb.operand);
            } else if constexpr (std::is_same_v<T, PerpNode>) {
                return equal(*na.lhs, *nb.lhs) && equal(*na.rhs, *nb.rhs);
            } else if constexpr (std::is_same_v<T, TensorNode>) {
                return equal(*na.lhs, *nb.lhs) && equal(*na.rhs, *nb.rhs);
            } else {
                static_assert(std::is_same_v<T, RepeatNode>);
                return na.count == nb.count && equal(*na.operand, *nb.operand);
            }
        },
        a.node);
}

namespace {

FieldElement coefficient_element(const Coefficient& c, const FieldDescriptor& field) {
    if (c.value.is_zero()) throw DomainError("zero coefficient");
    std::vector<std::int64_t> exps(field.tower().size(), 0);
    for (const auto& [var, e] : c.monomial) {
        auto idx = field.variable_index(var);
        if (!idx)
            throw DomainError("unknown variable '" + var + "' for field " + field.render());
        exps[*idx] = num::checked_add(exps[*idx], e);
    }
    return FieldElement::make(field, c.value, std::move(exps));
}

std::vector<FieldElement> coefficient_elements(const std::vector<Coefficient>& cs,
                                               const FieldDescriptor& field) {
    std::vector<FieldElement> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(coefficient_element(c, field));
    return out;
}

}  // namespace

QuadraticForm evaluate(const FormExpr& expr, const FieldDescriptor& field) {
    return std::visit(
        [&](const auto& n) -> QuadraticForm {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, DiagNode>) {
                return diag(field, coefficient_elements(n.coeffs, field));
            } else if constexpr (std::is_same_v<T, PfisterNode>) {
                return pfister(field, coefficient_elements(n.slots, field));
            } else if constexpr (std::is_same_v<T, HypNode>) {
                if (n.planes == 0) throw DomainError("hyp(0) is degenerate");
                return hyperbolic_form(field, n.planes);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return scale(coefficient_element(n.scalar, field), evaluate(*n.operand, field));
            } else if constexpr (std::is_same_v<T, PerpNode>) {
                return perp(evaluate(*n.lhs, field), evaluate(*n.rhs, field));
            } else if constexpr (std::is_same_v<T, TensorNode>) {
                return tensor(evaluate(*n.lhs, field), evaluate(*n.rhs, field));
            } else {
                static_assert(std::is_same_v<T, RepeatNode>);
                if (n.count == 0) throw DomainError("0-fold orthogonal sum is degenerate");
                QuadraticForm once = evaluate(*n.operand, field);
                QuadraticForm acc = once;
                for (std::uint64_t i = 1; i < n.count; ++i) acc = perp(acc, once);
                return acc;
            }
        },
        expr.node);
}

FieldElement evaluate_coefficient(std::string_view text, const FieldDescriptor& field) {
    return coefficient_element(Parser(text).parse_coefficient_all(), field);
}

}  // namespace qf
