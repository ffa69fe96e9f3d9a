#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qf/field.hpp"

namespace qf {

/// A non-degenerate diagonal quadratic form <a1,...,an> of positive
/// dimension. Entries are stored as canonical square-class representatives
/// (<a> and <a c^2> are isometric) in the order given; isometry tests never
/// depend on entry order.
class QuadraticForm {
public:
    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<FieldElement>& entries() const noexcept { return entries_; }
    std::size_t dim() const noexcept { return entries_.size(); }

    std::string render() const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    friend QuadraticForm diag(const FieldDescriptor&, const std::vector<FieldElement>&);
    QuadraticForm(FieldDescriptor field, std::vector<FieldElement> entries)
        : field_(std::move(field)), entries_(std::move(entries)) {}

    FieldDescriptor field_;
    std::vector<FieldElement> entries_;
};

QuadraticForm diag(const FieldDescriptor& field, const std::vector<FieldElement>& raw);

/// Orthogonal sum: concatenated entries.
QuadraticForm perp(const QuadraticForm& p, const QuadraticForm& q);

/// Tensor product: entries a_i * b_j in row-major order.
QuadraticForm tensor(const QuadraticForm& p, const QuadraticForm& q);

QuadraticForm scale(const FieldElement& a, const QuadraticForm& q);
QuadraticForm negate(const QuadraticForm& q);

/// The n-fold Pfister form <1,a1> (x) ... (x) <1,an>; an empty slot list
/// gives the 0-fold Pfister form <1>. Entry order: subset products with
/// the first slot as the fastest-varying bit, so pfister(F, {a, b}) is
/// <1, a, b, ab>.
QuadraticForm pfister(const FieldDescriptor& field, const std::vector<FieldElement>& slots);

/// m x <1,-1>, m >= 1.
QuadraticForm hyperbolic_form(const FieldDescriptor& field, std::size_t m);

/// Reinterpret q over an iterated Laurent extension of its field.
QuadraticForm lift(const QuadraticForm& q, const FieldDescriptor& extension);

}  // namespace qf
