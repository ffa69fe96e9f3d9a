#include "qf/isotropy.hpp"

namespace qf {

namespace {

std::int64_t rep_int(const SquareClass& c) {
    return std::get<num::Rational>(c.representative().unit()).num;
}

// det of the hyperbolic part: class of (-1)^m over F.
SquareClass power_of_minus_one(const FieldDescriptor& f, std::size_t m) {
    return square_class(m % 2 == 0 ? FieldElement::one(f) : FieldElement::minus_one(f));
}

InvariantRecord zero_form_record(const FieldDescriptor& f) {
    InvariantRecord r;
    r.field = f;
    r.dim = 0;
    if ((f.base() == BaseField::reals || f.base() == BaseField::rationals) && !f.has_tower())
        r.signature = std::pair<std::size_t, std::size_t>{0, 0};
    return r;
}

}  // namespace

std::pair<std::optional<QuadraticForm>, std::optional<QuadraticForm>> springer_split(
    const QuadraticForm& q) {
    const auto& f = q.field();
    if (!f.has_tower()) throw DomainError("Springer split needs a Laurent tower");
    FieldDescriptor inner = f.inner();
    std::size_t outer = f.tower().size() - 1;

    std::vector<FieldElement> unit_entries, x_entries;
    for (const auto& e : q.entries()) {
        std::vector<std::int64_t> exps(e.exponents().begin(), e.exponents().end() - 1);
        FieldElement reduced(inner, e.unit(), std::move(exps));
        (e.exponents()[outer] % 2 == 0 ? unit_entries : x_entries).push_back(std::move(reduced));
    }

    std::pair<std::optional<QuadraticForm>, std::optional<QuadraticForm>> parts;
    if (!unit_entries.empty()) parts.first = diag(inner, unit_entries);
    if (!x_entries.empty()) parts.second = diag(inner, x_entries);
    return parts;
}

bool is_local_square(std::int64_t d, const Place& v) {
    if (d == 0) throw DomainError("local square test of zero");
    if (v.real) return d > 0;
    std::int64_t p = v.prime;
    std::int64_t val = 0;
    while (d % p == 0) {
        d /= p;
        ++val;
    }
    if (val % 2 != 0) return false;
    if (p == 2) return num::mod_positive(d, 8) == 1;
    return num::legendre(d, p) == 1;
}

bool is_isotropic(const InvariantRecord& r) {
    if (r.field.base() != BaseField::rationals || r.field.has_tower())
        throw UnsupportedError("record-level isotropy is implemented over Q");
    if (r.dim <= 1) return false;

    std::int64_t d = rep_int(*r.det);

    if (r.dim == 2) return d == -1;

    if (r.dim >= 5)
        return r.signature->first > 0 && r.signature->second > 0;

    // Support places carry every symbol that can differ from +1; outside
    // them the dim-3 and dim-4 local criteria hold automatically.
    std::vector<Place> support{Place::real_place(), Place::finite(2)};
    for (const auto& [v, s] : r.hasse)
        if (!v.real && v.prime != 2) support.push_back(v);

    if (r.dim == 3) {
        for (const auto& v : support)
            if (hilbert_symbol_int(-1, -d, v) != r.hasse_at(v)) return false;
        return true;
    }

    // dim 4
    for (const auto& v : support)
        if (is_local_square(d, v) && r.hasse_at(v) != hilbert_symbol_int(-1, -1, v)) return false;
    return true;
}

bool is_isotropic(const QuadraticForm& q) {
    const auto& f = q.field();
    if (f.has_tower()) {
        auto [unit, x] = springer_split(q);
        return (unit && is_isotropic(*unit)) || (x && is_isotropic(*x));
    }
    switch (f.base()) {
        case BaseField::finite:
            if (q.dim() >= 3) return true;
            if (q.dim() == 2)
                return is_square(determinant_class(q).representative().neg());
            return false;
        case BaseField::reals: {
            auto [pos, neg] = signature(q);
            return pos > 0 && neg > 0;
        }
        case BaseField::complexes:
            return q.dim() >= 2;
        case BaseField::rationals:
            if (q.dim() == 1) return false;
            return is_isotropic(invariant_record(q));
    }
    throw DomainError("unknown base field");
}

std::size_t witt_index(const QuadraticForm& q) {
    const auto& f = q.field();
    if (f.has_tower()) {
        auto [unit, x] = springer_split(q);
        return (unit ? witt_index(*unit) : 0) + (x ? witt_index(*x) : 0);
    }
    switch (f.base()) {
        case BaseField::finite: {
            // Anisotropic kernels over F_p have dim <= 2, so (dim, det)
            // decides everything.
            std::size_t m = q.dim() / 2;
            if (q.dim() % 2 != 0) return m;
            return determinant_class(q) == power_of_minus_one(f, m) ? m : m - 1;
        }
        case BaseField::reals: {
            auto [pos, neg] = signature(q);
            return std::min(pos, neg);
        }
        case BaseField::complexes:
            return q.dim() / 2;
        case BaseField::rationals: {
            InvariantRecord r = invariant_record(q);
            std::size_t i = 0;
            while (r.dim >= 2 && is_isotropic(r)) {
                r = split_hyperbolic(r);
                ++i;
            }
            return i;
        }
    }
    throw DomainError("unknown base field");
}

bool is_hyperbolic(const QuadraticForm& q) {
    return q.dim() % 2 == 0 && witt_index(q) == q.dim() / 2;
}

WittDecomposition witt_decomposition(const QuadraticForm& q) {
    const auto& f = q.field();
    WittDecomposition d;
    d.anisotropic_invariants = zero_form_record(f);

    if (f.has_tower()) {
        auto [unit, x] = springer_split(q);
        WittDecomposition unit_d, x_d;
        unit_d.anisotropic_invariants = zero_form_record(f.inner());
        x_d.anisotropic_invariants = zero_form_record(f.inner());
        if (unit) unit_d = witt_decomposition(*unit);
        if (x) x_d = witt_decomposition(*x);
        d.witt_index = unit_d.witt_index + x_d.witt_index;

        // A child's anisotropic kernel is explicit when it has a diagonal
        // form or is zero-dimensional; only Q-based children lack one.
        auto child_explicit = [](const WittDecomposition& c) {
            return c.anisotropic_part.has_value() || c.anisotropic_invariants.dim == 0;
        };

        if (child_explicit(unit_d) && child_explicit(x_d)) {
            // Reassemble p_an perp x * q'_an.
            std::vector<FieldElement> entries;
            if (unit_d.anisotropic_part) {
                QuadraticForm lifted = lift(*unit_d.anisotropic_part, f);
                for (const auto& e : lifted.entries()) entries.push_back(e);
            }
            if (x_d.anisotropic_part) {
                FieldElement xvar = FieldElement::variable(f, f.outer_variable());
                QuadraticForm lifted = lift(*x_d.anisotropic_part, f);
                for (const auto& e : lifted.entries()) entries.push_back(xvar.mul(e));
            }
            if (!entries.empty()) {
                d.anisotropic_part = diag(f, entries);
                d.anisotropic_invariants = invariant_record(*d.anisotropic_part);
            }
            return d;
        }

        InvariantRecord r;
        r.field = f;
        r.dim = unit_d.anisotropic_invariants.dim + x_d.anisotropic_invariants.dim;
        if (r.dim > 0) {
            FieldElement detv = FieldElement::one(f);
            if (unit_d.anisotropic_invariants.det)
                detv = detv.mul(lift(unit_d.anisotropic_invariants.det->representative(), f));
            if (x_d.anisotropic_invariants.det)
                detv = detv.mul(lift(x_d.anisotropic_invariants.det->representative(), f));
            if (x_d.anisotropic_invariants.dim % 2 == 1)
                detv = detv.mul(FieldElement::variable(f, f.outer_variable()));
            r.det = square_class(detv);
        }
        if (unit_d.anisotropic_invariants.dim > 0)
            r.unit_part = std::make_shared<InvariantRecord>(unit_d.anisotropic_invariants);
        if (x_d.anisotropic_invariants.dim > 0)
            r.x_part = std::make_shared<InvariantRecord>(x_d.anisotropic_invariants);
        d.anisotropic_invariants = std::move(r);
        return d;
    }

    switch (f.base()) {
        case BaseField::finite: {
            d.witt_index = witt_index(q);
            std::size_t remaining = q.dim() - 2 * d.witt_index;
            if (remaining > 0) {
                // det(q_an) = (-1)^i * det(q)
                FieldElement det_an =
                    power_of_minus_one(f, d.witt_index).representative().mul(
                        determinant_class(q).representative());
                std::vector<FieldElement> entries;
                if (remaining == 2) entries.push_back(FieldElement::one(f));
                entries.push_back(det_an);
                d.anisotropic_part = diag(f, entries);
                d.anisotropic_invariants = invariant_record(*d.anisotropic_part);
            }
            return d;
        }
        case BaseField::reals: {
            auto [pos, neg] = signature(q);
            d.witt_index = std::min(pos, neg);
            std::size_t remaining = pos > neg ? pos - neg : neg - pos;
            if (remaining > 0) {
                std::vector<FieldElement> entries(
                    remaining, pos > neg ? FieldElement::one(f) : FieldElement::minus_one(f));
                d.anisotropic_part = diag(f, entries);
                d.anisotropic_invariants = invariant_record(*d.anisotropic_part);
            }
            return d;
        }
        case BaseField::complexes: {
            d.witt_index = q.dim() / 2;
            if (q.dim() % 2 != 0) {
                d.anisotropic_part = diag(f, {FieldElement::one(f)});
                d.anisotropic_invariants = invariant_record(*d.anisotropic_part);
            }
            return d;
        }
        case BaseField::rationals: {
            InvariantRecord r = invariant_record(q);
            while (r.dim >= 2 && is_isotropic(r)) {
                r = split_hyperbolic(r);
                ++d.witt_index;
            }
            d.anisotropic_invariants = std::move(r);
            return d;
        }
    }
    throw DomainError("unknown base field");
}

}  // namespace qf
