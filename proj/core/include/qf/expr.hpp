#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qf/form.hpp"

namespace qf {

/// A coefficient literal: a rational times a variable monomial,
/// e.g. "-4/9", "2x", "x^-2y".
struct Coefficient {
    num::Rational value{1, 1};
    std::vector<std::pair<std::string, std::int64_t>> monomial;

    std::string render() const;
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

struct FormExpr;
using FormExprPtr = std::shared_ptr<const FormExpr>;

struct DiagNode {
    std::vector<Coefficient> coeffs;
};
struct PfisterNode {
    std::vector<Coefficient> slots;
};
struct HypNode {
    std::uint64_t planes{1};
};
struct ScaleNode {
    Coefficient scalar;
    FormExprPtr operand;
};
struct PerpNode {
    FormExprPtr lhs, rhs;
};
struct TensorNode {
    FormExprPtr lhs, rhs;
};
struct RepeatNode {
    std::uint64_t count{1};
    FormExprPtr operand;
};

/// Form expression AST. Grammar (whitespace between tokens is free):
///
///   expr    := term { "+" term }                      ("+" is perp)
///   term    := factor { "*" factor }                  ("*" is tensor)
///   factor  := "<" coeff {"," coeff} ">"
///            | "pfister(" coeff {"," coeff} ")"
///            | "hyp(" nat ")"
///            | nat "x" factor                         (n-fold orthogonal sum)
///            | coeff "*" factor                       (scaling)
///            | "(" expr ")"
///   coeff   := ["-"] (nat | nat "/" nat) { var ["^" ["-"] nat] }
///            | ["-"] var ["^" ["-"] nat] { var ["^" ["-"] nat] }
///
/// Scale and repeat bind tighter than "*", which binds tighter than "+".
/// The repeat keyword is the bare identifier "x"; juxtaposed letters such
/// as "xy" lex as a single variable name.
struct FormExpr {
    std::variant<DiagNode, PfisterNode, HypNode, ScaleNode, PerpNode, TensorNode, RepeatNode> node;
};

FormExprPtr parse_form(std::string_view text);

std::string render(const FormExpr& expr);

bool equal(const FormExpr& a, const FormExpr& b);

/// Evaluate over a field; integer literals reduce mod p over F_p.
QuadraticForm evaluate(const FormExpr& expr, const FieldDescriptor& field);

/// Evaluate a bare coefficient (for membership queries).
FieldElement evaluate_coefficient(std::string_view text, const FieldDescriptor& field);

}  // namespace qf
