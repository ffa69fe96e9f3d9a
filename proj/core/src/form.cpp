#include "qf/form.hpp"

namespace qf {

std::string QuadraticForm::render() const {
    std::string out = "<";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].render();
    }
    return out + ">";
}

QuadraticForm diag(const FieldDescriptor& field, const std::vector<FieldElement>& raw) {
    if (raw.empty()) throw DomainError("a form needs at least one diagonal entry");
    std::vector<FieldElement> entries;
    entries.reserve(raw.size());
    for (const auto& e : raw) {
        if (e.field() != field) throw DomainError("entry does not live in " + field.render());
        entries.push_back(square_class(e).representative());
    }
    return QuadraticForm(field, std::move(entries));
}

QuadraticForm perp(const QuadraticForm& p, const QuadraticForm& q) {
    if (p.field() != q.field()) throw DomainError("field descriptor mismatch in orthogonal sum");
    std::vector<FieldElement> entries = p.entries();
    entries.insert(entries.end(), q.entries().begin(), q.entries().end());
    return diag(p.field(), entries);
}

QuadraticForm tensor(const QuadraticForm& p, const QuadraticForm& q) {
    if (p.field() != q.field()) throw DomainError("field descriptor mismatch in tensor product");
    std::vector<FieldElement> entries;
    entries.reserve(p.dim() * q.dim());
    for (const auto& a : p.entries())
        for (const auto& b : q.entries()) entries.push_back(a.mul(b));
    return diag(p.field(), entries);
}

QuadraticForm scale(const FieldElement& a, const QuadraticForm& q) {
    if (a.field() != q.field()) throw DomainError("scalar does not live in the form's field");
    std::vector<FieldElement> entries;
    entries.reserve(q.dim());
    for (const auto& e : q.entries()) entries.push_back(a.mul(e));
    return diag(q.field(), entries);
}

QuadraticForm negate(const QuadraticForm& q) {
    return scale(FieldElement::minus_one(q.field()), q);
}

QuadraticForm pfister(const FieldDescriptor& field, const std::vector<FieldElement>& slots) {
    if (slots.size() >= 30) throw BoundError("Pfister fold too large");
    for (const auto& s : slots)
        if (s.field() != field) throw DomainError("Pfister slot does not live in " + field.render());
    std::vector<FieldElement> entries;
    entries.reserve(std::size_t{1} << slots.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        FieldElement e = FieldElement::one(field);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (std::size_t{1} << i)) e = e.mul(slots[i]);
        entries.push_back(std::move(e));
    }
    return diag(field, entries);
}

QuadraticForm hyperbolic_form(const FieldDescriptor& field, std::size_t m) {
    if (m == 0) throw DomainError("hyperbolic form needs at least one plane");
    std::vector<FieldElement> entries;
    entries.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        entries.push_back(FieldElement::one(field));
        entries.push_back(FieldElement::minus_one(field));
    }
    return diag(field, entries);
}

QuadraticForm lift(const QuadraticForm& q, const FieldDescriptor& extension) {
    std::vector<FieldElement> entries;
    entries.reserve(q.dim());
    for (const auto& e : q.entries()) entries.push_back(lift(e, extension));
    return diag(extension, entries);
}

}  // namespace qf
