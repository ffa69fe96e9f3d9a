#include "qf/classify.hpp"

#include <algorithm>

namespace qf {

namespace {

QuadraticForm one_minus_a_times(const QuadraticForm& q, const FieldElement& a) {
    auto binary = diag(q.field(), {FieldElement::one(q.field()), a.neg()});
    return tensor(binary, q);
}

bool finite_classes(const FieldDescriptor& f) {
    return field_traits(f).square_class_count.has_value();
}

bool contains(const std::set<SquareClass>& s, const SquareClass& c) { return s.count(c) > 0; }

bool subset(const std::set<SquareClass>& a, const std::set<SquareClass>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool represents(const QuadraticForm& q, const FieldElement& a) {
    if (a.field() != q.field()) throw DomainError("value does not live in the form's field");
    if (is_isotropic(q)) return true;
    return is_isotropic(perp(q, diag(q.field(), {a.neg()})));
}

bool in_G(const QuadraticForm& q, const FieldElement& a) {
    if (a.field() != q.field()) throw DomainError("scalar does not live in the form's field");
    return is_hyperbolic(one_minus_a_times(q, a));
}

bool in_H(const QuadraticForm& q, const FieldElement& a) {
    if (a.field() != q.field()) throw DomainError("scalar does not live in the form's field");
    return is_isotropic(one_minus_a_times(q, a));
}

ValueSets value_sets(const QuadraticForm& q) {
    ValueSets vs{q, {}, {}, {}};
    for (const auto& c : square_class_reps(q.field())) {
        const auto& rep = c.representative();
        if (represents(q, rep)) vs.d_set.insert(c);
        if (in_G(q, rep)) vs.g_set.insert(c);
        if (in_H(q, rep)) vs.h_set.insert(c);
    }
    return vs;
}

bool is_group(const QuadraticForm& q) {
    auto vs = value_sets(q);
    bool group = subset(vs.h_set, vs.d_set);
    // Group forms satisfy H = D outright; a strict inclusion would mean an
    // engine defect, not a mathematical possibility.
    if (group && vs.h_set != vs.d_set)
        throw Error("internal: group form with H(q) != D(q) over " + q.field().render());
    return group;
}

bool is_round(const QuadraticForm& q) {
    auto vs = value_sets(q);
    auto one = square_class(FieldElement::one(q.field()));
    return contains(vs.d_set, one) && subset(vs.h_set, vs.g_set);
}

bool round_via_binary_multiples(const QuadraticForm& q) {
    auto reps = square_class_reps(q.field());
    if (!represents(q, FieldElement::one(q.field())))
        throw DomainError("round_via_binary_multiples requires a form representing 1");
    for (const auto& b : reps) {
        for (const auto& c : reps) {
            auto beta = diag(q.field(), {b.representative(), c.representative()});
            auto multiple = tensor(q, beta);
            std::size_t i = witt_index(multiple);
            if (i != 0 && 2 * i != multiple.dim()) return false;
        }
    }
    return true;
}

bool is_pfister_form(const QuadraticForm& q) {
    std::size_t n = 0;
    for (std::size_t d = q.dim(); d > 1; d /= 2) {
        if (d % 2 != 0) return false;
        ++n;
    }

    const auto& f = q.field();
    if (!finite_classes(f)) {
        if (f.base() != BaseField::rationals || f.has_tower() || q.dim() > 2)
            throw UnsupportedError(
                "Pfister recognition needs finitely many square classes (or Q with dim <= 2)");
        // dim 1: <a> is <1> iff a is a square. dim 2: a binary form is
        // isometric to <1, det> exactly when it represents 1.
        if (q.dim() == 1) return is_square(q.entries()[0]);
        return represents(q, FieldElement::one(f));
    }

    auto reps = square_class_reps(f);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<FieldElement> slots;
        slots.reserve(n);
        for (std::size_t i = 0; i < n; ++i) slots.push_back(reps[idx[i]].representative());
        if (is_isometric(q, pfister(f, slots))) return true;
        std::size_t k = 0;
        while (k < n && ++idx[k] == reps.size()) idx[k++] = 0;
        if (k == n) break;
    }
    return false;
}

bool is_similar_to_pfister(const QuadraticForm& q) {
    for (const auto& c : square_class_reps(q.field()))
        if (is_pfister_form(scale(c.representative(), q))) return true;
    return false;
}

std::optional<SquareClass> group_witness(const QuadraticForm& q) {
    for (const auto& c : square_class_reps(q.field())) {
        const auto& rep = c.representative();
        if (in_H(q, rep) && !represents(q, rep)) return c;
    }
    return std::nullopt;
}

std::optional<SquareClass> round_witness(const QuadraticForm& q) {
    for (const auto& c : square_class_reps(q.field())) {
        const auto& rep = c.representative();
        if (in_H(q, rep) && !in_G(q, rep)) return c;
    }
    return std::nullopt;
}

}  // namespace qf
