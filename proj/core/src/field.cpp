#include "qf/field.hpp"

#include <algorithm>
#include <cctype>

namespace qf {

namespace {

bool valid_variable(std::string_view v) {
    if (v.empty() || !std::islower(static_cast<unsigned char>(v[0]))) return false;
    return std::all_of(v.begin(), v.end(), [](unsigned char c) {
        return std::islower(c) || std::isdigit(c);
    });
}

std::int64_t least_positive_nonresidue(std::int64_t p) {
    for (std::int64_t a = 2; a < p; ++a)
        if (num::legendre(a, p) == -1) return a;
    throw DomainError("no non-residue found; modulus is not an odd prime");
}

bool residue_is_square(std::int64_t value, std::int64_t p) {
    return num::pow_mod(static_cast<std::uint64_t>(value),
                        static_cast<std::uint64_t>((p - 1) / 2),
                        static_cast<std::uint64_t>(p)) == 1;
}

}  // namespace

FieldDescriptor FieldDescriptor::finite_field(std::int64_t p) {
    if (p == 2) throw DomainError("characteristic 2 is not supported");
    if (!num::is_prime(p)) throw DomainError("finite field order must be an odd prime");
    return FieldDescriptor(BaseField::finite, p);
}

std::int64_t FieldDescriptor::prime() const {
    if (base_ != BaseField::finite) throw DomainError("field has no finite characteristic");
    return prime_;
}

const std::string& FieldDescriptor::outer_variable() const {
    if (tower_.empty()) throw DomainError("field has no Laurent tower");
    return tower_.back();
}

FieldDescriptor FieldDescriptor::with_variable(std::string var) const {
    if (!valid_variable(var)) throw DomainError("invalid variable name '" + var + "'");
    if (variable_index(var)) throw DomainError("duplicate tower variable '" + var + "'");
    FieldDescriptor k(*this);
    k.tower_.push_back(std::move(var));
    return k;
}

FieldDescriptor FieldDescriptor::inner() const {
    if (tower_.empty()) throw DomainError("field has no Laurent tower");
    FieldDescriptor k(*this);
    k.tower_.pop_back();
    return k;
}

std::optional<std::size_t> FieldDescriptor::variable_index(std::string_view var) const noexcept {
    for (std::size_t i = 0; i < tower_.size(); ++i)
        if (tower_[i] == var) return i;
    return std::nullopt;
}

bool FieldDescriptor::extends(const FieldDescriptor& other) const noexcept {
    if (base_ != other.base_ || prime_ != other.prime_) return false;
    if (other.tower_.size() > tower_.size()) return false;
    return std::equal(other.tower_.begin(), other.tower_.end(), tower_.begin());
}

std::string FieldDescriptor::render() const {
    std::string out;
    switch (base_) {
        case BaseField::finite: out = "F" + std::to_string(prime_); break;
        case BaseField::rationals: out = "Q"; break;
        case BaseField::reals: out = "R"; break;
        case BaseField::complexes: out = "C"; break;
    }
    for (const auto& v : tower_) out += "((" + v + "))";
    return out;
}

FieldDescriptor parse_field(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, pos); };

    if (pos >= text.size()) throw fail("empty field descriptor");

    FieldDescriptor base = FieldDescriptor::rationals();
    switch (text[pos]) {
        case 'Q':
            ++pos;
            break;
        case 'R':
            base = FieldDescriptor::reals();
            ++pos;
            break;
        case 'C':
            base = FieldDescriptor::complexes();
            ++pos;
            break;
        case 'F': {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw fail("expected prime after 'F'");
            if (pos - start > 18) throw fail("characteristic too large");
            std::int64_t p = 0;
            for (std::size_t i = start; i < pos; ++i) p = p * 10 + (text[i] - '0');
            if (p == 2) throw fail("characteristic 2 is not supported");
            if (!num::is_prime(p)) throw fail("'" + std::to_string(p) + "' is not an odd prime");
            base = FieldDescriptor::finite_field(p);
            break;
        }
        default:
            throw fail("expected base field 'F<p>', 'Q', 'R' or 'C'");
    }

    while (pos < text.size()) {
        if (text.substr(pos, 2) != "((") throw fail("expected '((' to open a Laurent variable");
        pos += 2;
        std::size_t start = pos;
        while (pos < text.size() && (std::islower(static_cast<unsigned char>(text[pos])) ||
                                     std::isdigit(static_cast<unsigned char>(text[pos]))))
            ++pos;
        std::string var(text.substr(start, pos - start));
        if (!valid_variable(var)) throw fail("invalid variable name");
        if (text.substr(pos, 2) != "))") throw fail("expected '))' to close a Laurent variable");
        pos += 2;
        if (base.variable_index(var)) throw fail("duplicate tower variable '" + var + "'");
        base = base.with_variable(std::move(var));
    }
    return base;
}

FieldTraits field_traits(const FieldDescriptor& field) {
    FieldTraits t;
    bool base_real = false, base_pyth = false;
    std::uint64_t s = 0;
    switch (field.base()) {
        case BaseField::finite:
            base_real = false;
            base_pyth = false;
            s = 2;
            break;
        case BaseField::rationals:
            base_real = true;
            base_pyth = false;
            s = 0;  // infinite
            break;
        case BaseField::reals:
            base_real = true;
            base_pyth = true;
            s = 2;
            break;
        case BaseField::complexes:
            base_real = false;
            base_pyth = true;
            s = 1;
            break;
    }
    t.is_real = base_real;
    // F((x)) is Pythagorean iff F is Pythagorean and real: over C((x)),
    // x is a sum of two squares but has odd valuation.
    t.is_pythagorean = field.has_tower() ? (base_pyth && base_real) : base_pyth;
    t.is_quadratically_closed = field.base() == BaseField::complexes && !field.has_tower();
    if (s != 0) {
        if (field.tower().size() >= 63) throw BoundError("tower too deep");
        t.square_class_count = s << field.tower().size();
    }
    return t;
}

FieldElement::FieldElement(FieldDescriptor field, BaseValue unit,
                           std::vector<std::int64_t> exponents)
    : field_(std::move(field)), unit_(std::move(unit)), exponents_(std::move(exponents)) {
    if (exponents_.empty()) exponents_.resize(field_.tower().size(), 0);
    if (exponents_.size() != field_.tower().size())
        throw DomainError("exponent vector does not match tower");

    bool ok_type = false, zero = false;
    switch (field_.base()) {
        case BaseField::finite:
            if (const auto* r = std::get_if<Residue>(&unit_)) {
                ok_type = true;
                zero = num::mod_positive(r->value, field_.prime()) == 0;
            }
            break;
        case BaseField::rationals:
        case BaseField::reals:
            if (const auto* q = std::get_if<num::Rational>(&unit_)) {
                ok_type = true;
                zero = q->is_zero();
            }
            break;
        case BaseField::complexes:
            if (const auto* g = std::get_if<num::Gaussian>(&unit_)) {
                ok_type = true;
                zero = g->is_zero();
            }
            break;
    }
    if (!ok_type) throw DomainError("element payload does not match base field");
    if (zero) throw DomainError("zero is not a valid field element here");
    if (auto* r = std::get_if<Residue>(&unit_)) r->value = num::mod_positive(r->value, field_.prime());
}

FieldElement FieldElement::make(const FieldDescriptor& field, num::Rational value,
                                std::vector<std::int64_t> exponents) {
    switch (field.base()) {
        case BaseField::finite: {
            std::int64_t p = field.prime();
            std::int64_t n = num::mod_positive(value.num, p);
            std::int64_t d = num::mod_positive(value.den, p);
            if (d == 0) throw DomainError("denominator divisible by the characteristic");
            std::int64_t v = n * num::mod_inverse(d, p) % p;
            return FieldElement(field, Residue{v}, std::move(exponents));
        }
        case BaseField::rationals:
        case BaseField::reals:
            return FieldElement(field, value, std::move(exponents));
        case BaseField::complexes:
            return FieldElement(field, num::Gaussian{value, num::Rational{}}, std::move(exponents));
    }
    throw DomainError("unknown base field");
}

FieldElement FieldElement::from_integer(const FieldDescriptor& field, std::int64_t n) {
    return make(field, num::Rational::integer(n));
}

FieldElement FieldElement::gaussian(const FieldDescriptor& field, num::Gaussian value,
                                    std::vector<std::int64_t> exponents) {
    if (field.base() != BaseField::complexes)
        throw DomainError("Gaussian payload requires base field C");
    return FieldElement(field, value, std::move(exponents));
}

FieldElement FieldElement::one(const FieldDescriptor& field) { return from_integer(field, 1); }

FieldElement FieldElement::minus_one(const FieldDescriptor& field) {
    return from_integer(field, -1);
}

FieldElement FieldElement::variable(const FieldDescriptor& field, std::string_view var) {
    auto idx = field.variable_index(var);
    if (!idx) throw DomainError("unknown variable '" + std::string(var) + "' for field " + field.render());
    std::vector<std::int64_t> exps(field.tower().size(), 0);
    exps[*idx] = 1;
    return make(field, num::Rational::integer(1), std::move(exps));
}

FieldElement FieldElement::mul(const FieldElement& other) const {
    if (field_ != other.field_) throw DomainError("field descriptor mismatch");
    std::vector<std::int64_t> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = num::checked_add(exponents_[i], other.exponents_[i]);

    BaseValue u;
    switch (field_.base()) {
        case BaseField::finite: {
            std::int64_t p = field_.prime();
            auto a = std::get<Residue>(unit_).value;
            auto b = std::get<Residue>(other.unit_).value;
            u = Residue{static_cast<std::int64_t>(
                static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                static_cast<unsigned __int128>(p))};
            break;
        }
        case BaseField::rationals:
        case BaseField::reals:
            u = std::get<num::Rational>(unit_) * std::get<num::Rational>(other.unit_);
            break;
        case BaseField::complexes:
            u = std::get<num::Gaussian>(unit_) * std::get<num::Gaussian>(other.unit_);
            break;
    }
    return FieldElement(field_, std::move(u), std::move(exps));
}

FieldElement FieldElement::neg() const {
    BaseValue u;
    switch (field_.base()) {
        case BaseField::finite:
            u = Residue{field_.prime() - std::get<Residue>(unit_).value};
            break;
        case BaseField::rationals:
        case BaseField::reals:
            u = -std::get<num::Rational>(unit_);
            break;
        case BaseField::complexes:
            u = -std::get<num::Gaussian>(unit_);
            break;
    }
    return FieldElement(field_, std::move(u), exponents_);
}

FieldElement FieldElement::invert() const {
    std::vector<std::int64_t> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = -exponents_[i];
    BaseValue u;
    switch (field_.base()) {
        case BaseField::finite:
            u = Residue{num::mod_inverse(std::get<Residue>(unit_).value, field_.prime())};
            break;
        case BaseField::rationals:
        case BaseField::reals:
            u = std::get<num::Rational>(unit_).inverse();
            break;
        case BaseField::complexes:
            u = std::get<num::Gaussian>(unit_).inverse();
            break;
    }
    return FieldElement(field_, std::move(u), std::move(exps));
}

bool FieldElement::is_one() const { return *this == one(field_); }

std::string FieldElement::render() const {
    std::string mono;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        mono += field_.tower()[i];
        if (exponents_[i] != 1) mono += "^" + std::to_string(exponents_[i]);
    }

    std::string unit;
    bool unit_is_one = false, unit_is_minus_one = false;
    switch (field_.base()) {
        case BaseField::finite:
            unit = std::to_string(std::get<Residue>(unit_).value);
            unit_is_one = std::get<Residue>(unit_).value == 1;
            break;
        case BaseField::rationals:
        case BaseField::reals: {
            const auto& q = std::get<num::Rational>(unit_);
            unit = q.render();
            unit_is_one = q == num::Rational::integer(1);
            unit_is_minus_one = q == num::Rational::integer(-1);
            break;
        }
        case BaseField::complexes: {
            const auto& g = std::get<num::Gaussian>(unit_);
            unit = g.render();
            unit_is_one = g == num::Gaussian{num::Rational::integer(1), num::Rational{}};
            unit_is_minus_one = g == num::Gaussian{num::Rational::integer(-1), num::Rational{}};
            if (!unit_is_one && !unit_is_minus_one && !g.im.is_zero() && !mono.empty())
                unit = "(" + unit + ")";
            break;
        }
    }

    if (mono.empty()) return unit;
    if (unit_is_one) return mono;
    if (unit_is_minus_one) return "-" + mono;
    return unit + mono;
}

bool is_square(const FieldElement& a) {
    const auto& f = a.field();
    for (auto e : a.exponents())
        if (e % 2 != 0) return false;

    switch (f.base()) {
        case BaseField::finite:
            return residue_is_square(std::get<Residue>(a.unit()).value, f.prime());
        case BaseField::reals:
            return std::get<num::Rational>(a.unit()).sign() > 0;
        case BaseField::complexes:
            return true;
        case BaseField::rationals: {
            const auto& q = std::get<num::Rational>(a.unit());
            if (q.sign() < 0) return false;
            return num::squarefree_part(num::checked_mul(q.num, q.den)) == 1;
        }
    }
    throw DomainError("unknown base field");
}

SquareClass square_class(const FieldElement& a) {
    const auto& f = a.field();
    std::vector<std::int64_t> exps(a.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = ((a.exponents()[i] % 2) + 2) % 2;

    BaseValue unit;
    switch (f.base()) {
        case BaseField::finite: {
            std::int64_t p = f.prime();
            std::int64_t v = std::get<Residue>(a.unit()).value;
            unit = Residue{residue_is_square(v, p) ? 1 : least_positive_nonresidue(p)};
            break;
        }
        case BaseField::reals:
            unit = num::Rational::integer(std::get<num::Rational>(a.unit()).sign());
            break;
        case BaseField::complexes:
            unit = num::Gaussian{num::Rational::integer(1), num::Rational{}};
            break;
        case BaseField::rationals: {
            const auto& q = std::get<num::Rational>(a.unit());
            unit = num::Rational::integer(num::squarefree_part(num::checked_mul(q.num, q.den)));
            break;
        }
    }
    return SquareClass(FieldElement(f, std::move(unit), std::move(exps)));
}

std::vector<SquareClass> square_class_reps(const FieldDescriptor& field) {
    auto traits = field_traits(field);
    if (!traits.square_class_count)
        throw UnsupportedError("unsupported: infinite square-class group over " + field.render());

    std::vector<FieldElement> base_units;
    switch (field.base()) {
        case BaseField::finite: {
            base_units.push_back(FieldElement::from_integer(field, 1));
            base_units.push_back(
                FieldElement::from_integer(field, least_positive_nonresidue(field.prime())));
            break;
        }
        case BaseField::reals:
            base_units.push_back(FieldElement::from_integer(field, 1));
            base_units.push_back(FieldElement::from_integer(field, -1));
            break;
        case BaseField::complexes:
            base_units.push_back(FieldElement::from_integer(field, 1));
            break;
        case BaseField::rationals:
            throw UnsupportedError("unreachable");
    }

    std::size_t n = field.tower().size();
    std::vector<SquareClass> reps;
    reps.reserve(base_units.size() << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (const auto& u : base_units) {
            std::vector<std::int64_t> exps(n, 0);
            for (std::size_t i = 0; i < n; ++i) exps[i] = (mask >> i) & 1;
            reps.push_back(square_class(FieldElement(field, u.unit(), std::move(exps))));
        }
    }
    return reps;
}

FieldElement lift(const FieldElement& a, const FieldDescriptor& extension) {
    if (!extension.extends(a.field()))
        throw DomainError(extension.render() + " does not extend " + a.field().render());
    std::vector<std::int64_t> exps = a.exponents();
    exps.resize(extension.tower().size(), 0);
    return FieldElement(extension, a.unit(), std::move(exps));
}

}  // namespace qf
