#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qf/errors.hpp"
#include "qf/numeric.hpp"

namespace qf {

enum class BaseField { finite, rationals, reals, complexes };

/// A supported base field plus an iterated-Laurent-series suffix, e.g.
/// "F3((x))((y))" for F_3((x))((y)). Tower variables are listed innermost
/// first, so the last variable is the outermost series variable. This is
/// the sole dispatch key for every decision procedure in the engine.
class FieldDescriptor {
public:
    static FieldDescriptor finite_field(std::int64_t p);
    static FieldDescriptor rationals() { return FieldDescriptor(BaseField::rationals, 0); }
    static FieldDescriptor reals() { return FieldDescriptor(BaseField::reals, 0); }
    static FieldDescriptor complexes() { return FieldDescriptor(BaseField::complexes, 0); }

    BaseField base() const noexcept { return base_; }
    std::int64_t prime() const;
    const std::vector<std::string>& tower() const noexcept { return tower_; }
    bool has_tower() const noexcept { return !tower_.empty(); }
    const std::string& outer_variable() const;

    /// Adjoin ((var)) as the new outermost series variable.
    FieldDescriptor with_variable(std::string var) const;
    /// Drop the outermost series variable.
    FieldDescriptor inner() const;

    std::optional<std::size_t> variable_index(std::string_view var) const noexcept;
    /// True when *this is an iterated Laurent extension of `other`
    /// (same base, other's tower a prefix of ours).
    bool extends(const FieldDescriptor& other) const noexcept;

    std::string render() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
    auto operator<=>(const FieldDescriptor&) const = default;

private:
    FieldDescriptor(BaseField b, std::int64_t p) : base_(b), prime_(p) {}

    BaseField base_;
    std::int64_t prime_;
    std::vector<std::string> tower_;
};

/// Grammar: base := "F"<p> | "Q" | "R" | "C", followed by zero or more
/// "(("<var>"))" with var in [a-z][a-z0-9]*. Round-trips with render().
FieldDescriptor parse_field(std::string_view text);

struct FieldTraits {
    bool is_real{};
    bool is_pythagorean{};
    bool is_quadratically_closed{};
    std::optional<std::uint64_t> square_class_count;  // nullopt = infinite
};

FieldTraits field_traits(const FieldDescriptor& field);

struct Residue {
    std::int64_t value{};
    friend bool operator==(const Residue&, const Residue&) = default;
    auto operator<=>(const Residue&) const = default;
};

using BaseValue = std::variant<Residue, num::Rational, num::Gaussian>;

/// Exact nonzero element u * x1^e1 * ... * xn^en with u from the base
/// field. Laurent-tower elements are restricted to such monomial
/// representatives: every square class of k((x)) contains one, and the
/// engine only ever consumes square-class data, so nothing is lost.
/// Values are immutable; all operations return fresh elements.
class FieldElement {
public:
    FieldElement(FieldDescriptor field, BaseValue unit, std::vector<std::int64_t> exponents);

    /// Dispatches on the base: residue num*den^-1 over F_p, rational proxy
    /// over Q and R, Gaussian proxy over C. Exponents are indexed by tower
    /// position; an empty vector means all zero.
    static FieldElement make(const FieldDescriptor& field, num::Rational value,
                             std::vector<std::int64_t> exponents = {});
    static FieldElement from_integer(const FieldDescriptor& field, std::int64_t n);
    static FieldElement gaussian(const FieldDescriptor& field, num::Gaussian value,
                                 std::vector<std::int64_t> exponents = {});
    static FieldElement one(const FieldDescriptor& field);
    static FieldElement minus_one(const FieldDescriptor& field);
    static FieldElement variable(const FieldDescriptor& field, std::string_view var);

    const FieldDescriptor& field() const noexcept { return field_; }
    const BaseValue& unit() const noexcept { return unit_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

    FieldElement mul(const FieldElement& other) const;
    FieldElement neg() const;
    FieldElement invert() const;

    bool is_one() const;

    std::string render() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    auto operator<=>(const FieldElement&) const = default;

private:
    FieldDescriptor field_;
    BaseValue unit_;
    std::vector<std::int64_t> exponents_;
};

/// True iff a is a square in its field.
bool is_square(const FieldElement& a);

/// Canonical square-class representative. Canonical forms: F_p -> 1 or the
/// least positive non-residue; Q -> signed squarefree integer; R -> +-1;
/// C -> 1; towers -> canonical base unit times each variable to exponent
/// 0 or 1. Construction canonicalizes, so equality of representatives is
/// equality of square classes.
class SquareClass {
public:
    const FieldElement& representative() const noexcept { return rep_; }
    std::string render() const { return rep_.render(); }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    auto operator<=>(const SquareClass&) const = default;

private:
    friend SquareClass square_class(const FieldElement& a);
    explicit SquareClass(FieldElement rep) : rep_(std::move(rep)) {}

    FieldElement rep_;
};

SquareClass square_class(const FieldElement& a);

/// Complete duplicate-free list of square classes; length s * 2^|tower|
/// with s = 2 (finite fields, R) or 1 (C). Rationals base has infinitely
/// many classes and raises UnsupportedError.
std::vector<SquareClass> square_class_reps(const FieldDescriptor& field);

/// Reinterpret an element of F in an iterated Laurent extension K of F.
FieldElement lift(const FieldElement& a, const FieldDescriptor& extension);

}  // namespace qf
