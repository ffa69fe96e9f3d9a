#include "qf/invariants.hpp"

#include <algorithm>
#include <set>

#include "qf/isotropy.hpp"

namespace qf {

namespace {

bool plain_rationals(const FieldDescriptor& f) {
    return f.base() == BaseField::rationals && !f.has_tower();
}

// Entry of a canonicalized form over plain Q, as a signed squarefree integer.
std::int64_t entry_int(const FieldElement& e) {
    const auto& q = std::get<num::Rational>(e.unit());
    return q.num;  // canonical reps have den == 1
}

}  // namespace

Place Place::finite(std::int64_t p) {
    if (!num::is_prime(p)) throw DomainError("finite places are indexed by primes");
    return Place{false, p};
}

int InvariantRecord::hasse_at(const Place& v) const {
    for (const auto& [place, value] : hasse)
        if (place == v) return value;
    return 1;
}

bool InvariantRecord::equal_invariants(const InvariantRecord& other) const {
    if (field != other.field || dim != other.dim) return false;
    if (det.has_value() != other.det.has_value()) return false;
    if (det && *det != *other.det) return false;
    if (signature != other.signature) return false;
    std::set<Place> places;
    for (const auto& [v, s] : hasse) places.insert(v);
    for (const auto& [v, s] : other.hasse) places.insert(v);
    for (const auto& v : places)
        if (hasse_at(v) != other.hasse_at(v)) return false;
    auto child_equal = [](const std::shared_ptr<const InvariantRecord>& a,
                          const std::shared_ptr<const InvariantRecord>& b) {
        if (!a && !b) return true;
        if (!a || !b) return false;
        return a->equal_invariants(*b);
    };
    return child_equal(unit_part, other.unit_part) && child_equal(x_part, other.x_part);
}

std::string InvariantRecord::render() const {
    std::string out = "dim " + std::to_string(dim);
    if (det) out += ", det " + det->render();
    if (signature)
        out += ", signature (" + std::to_string(signature->first) + "," +
               std::to_string(signature->second) + ")";
    if (!hasse.empty()) {
        out += ", hasse [";
        for (std::size_t i = 0; i < hasse.size(); ++i) {
            if (i) out += ", ";
            out += hasse[i].first.render() + ":" + (hasse[i].second > 0 ? "+1" : "-1");
        }
        out += "]";
    }
    if (unit_part || x_part) {
        out += ", unit part {" + (unit_part ? unit_part->render() : std::string("empty")) + "}";
        out += ", " + field.outer_variable() + "-part {" +
               (x_part ? x_part->render() : std::string("empty")) + "}";
    }
    return out;
}

SquareClass determinant_class(const QuadraticForm& q) {
    // Fold through square_class at every step to keep integers small; the
    // class map is multiplicative.
    FieldElement acc = FieldElement::one(q.field());
    for (const auto& e : q.entries()) acc = square_class(acc.mul(e)).representative();
    return square_class(acc);
}

int hilbert_symbol_int(std::int64_t a, std::int64_t b, const Place& v) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;

    std::int64_t p = v.prime;
    auto split = [p](std::int64_t n, std::int64_t& val) {
        val = 0;
        while (n % p == 0) {
            n /= p;
            ++val;
        }
        return n;
    };
    std::int64_t alpha = 0, beta = 0;
    std::int64_t u = split(a, alpha);
    std::int64_t w = split(b, beta);

    if (p == 2) {
        auto eps = [](std::int64_t n) { return num::mod_positive((n - 1) / 2, 2); };
        auto omega = [](std::int64_t n) {
            std::int64_t m = num::mod_positive(n, 8);
            return (m * m - 1) / 8 % 2;
        };
        std::int64_t e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return e % 2 != 0 ? -1 : 1;
    }

    int s = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) s = -s;
    if (beta % 2 != 0) s *= num::legendre(u, p);
    if (alpha % 2 != 0) s *= num::legendre(w, p);
    return s;
}

int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v) {
    if (!plain_rationals(a.field()) || !plain_rationals(b.field()))
        throw UnsupportedError("Hilbert symbols are defined for elements of Q");
    auto to_int = [](const FieldElement& e) {
        const auto& q = std::get<num::Rational>(e.unit());
        return num::checked_mul(q.num, q.den);  // same square class, integral
    };
    return hilbert_symbol_int(to_int(a), to_int(b), v);
}

int hasse_invariant(const QuadraticForm& q, const Place& v) {
    if (!plain_rationals(q.field()))
        throw UnsupportedError("Hasse invariants are defined over Q");
    int s = 1;
    const auto& es = q.entries();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            s *= hilbert_symbol_int(entry_int(es[i]), entry_int(es[j]), v);
    return s;
}

std::pair<std::size_t, std::size_t> signature(const QuadraticForm& q) {
    const auto& f = q.field();
    if ((f.base() != BaseField::reals && f.base() != BaseField::rationals) || f.has_tower())
        throw UnsupportedError("signature requires R or Q with empty tower");
    std::size_t pos = 0, neg = 0;
    for (const auto& e : q.entries())
        (std::get<num::Rational>(e.unit()).sign() > 0 ? pos : neg) += 1;
    return {pos, neg};
}

std::vector<Place> place_support(const QuadraticForm& q) {
    if (!plain_rationals(q.field()))
        throw UnsupportedError("places are defined over Q");
    std::set<std::int64_t> odd;
    for (const auto& e : q.entries())
        for (auto p : num::odd_prime_divisors(entry_int(e))) odd.insert(p);
    std::vector<Place> places{Place::real_place(), Place::finite(2)};
    for (auto p : odd) places.push_back(Place::finite(p));
    return places;
}

InvariantRecord invariant_record(const QuadraticForm& q) {
    InvariantRecord r;
    r.field = q.field();
    r.dim = q.dim();
    r.det = determinant_class(q);

    if (q.field().has_tower()) {
        auto [unit, x] = springer_split(q);
        if (unit)
            r.unit_part = std::make_shared<InvariantRecord>(invariant_record(*unit));
        if (x) r.x_part = std::make_shared<InvariantRecord>(invariant_record(*x));
        return r;
    }

    switch (q.field().base()) {
        case BaseField::rationals:
            for (const auto& v : place_support(q)) r.hasse.emplace_back(v, hasse_invariant(q, v));
            r.signature = signature(q);
            break;
        case BaseField::reals:
            r.signature = signature(q);
            break;
        case BaseField::finite:
        case BaseField::complexes:
            break;
    }
    return r;
}

bool is_isometric(const QuadraticForm& p, const QuadraticForm& q) {
    if (p.field() != q.field()) throw DomainError("field descriptor mismatch in isometry test");
    if (p.dim() != q.dim()) return false;

    const auto& f = p.field();
    if (f.has_tower()) {
        // p isometric to q iff dims agree and p perp -q is hyperbolic, and
        // hyperbolicity over F((x)) decomposes along the residue parts. The
        // parts themselves are canonical only up to Witt equivalence
        // (hyperbolic planes may sit in either part: <x,-x> and <1,-1> are
        // isometric with different parity splits), so compare Witt classes,
        // not part-by-part isometry.
        auto [pu, px] = springer_split(p);
        auto [qu, qx] = springer_split(q);
        auto witt_equivalent = [](const std::optional<QuadraticForm>& a,
                                  const std::optional<QuadraticForm>& b) {
            if (!a && !b) return true;
            if (!a) return is_hyperbolic(*b);
            if (!b) return is_hyperbolic(*a);
            return is_hyperbolic(perp(*a, negate(*b)));
        };
        return witt_equivalent(pu, qu) && witt_equivalent(px, qx);
    }

    switch (f.base()) {
        case BaseField::complexes:
            return true;  // dims already equal
        case BaseField::finite:
            return determinant_class(p) == determinant_class(q);
        case BaseField::reals:
            return signature(p) == signature(q);
        case BaseField::rationals: {
            if (determinant_class(p) != determinant_class(q)) return false;
            if (signature(p) != signature(q)) return false;
            auto support = place_support(p);
            for (const auto& v : place_support(q))
                if (std::find(support.begin(), support.end(), v) == support.end())
                    support.push_back(v);
            for (const auto& v : support)
                if (hasse_invariant(p, v) != hasse_invariant(q, v)) return false;
            return true;
        }
    }
    throw DomainError("unknown base field");
}

bool is_similar(const QuadraticForm& p, const QuadraticForm& q) {
    if (p.field() != q.field()) throw DomainError("field descriptor mismatch in similarity test");
    for (const auto& c : square_class_reps(p.field()))
        if (is_isometric(p, scale(c.representative(), q))) return true;
    return false;
}

InvariantRecord split_hyperbolic(const InvariantRecord& r) {
    if (!plain_rationals(r.field))
        throw UnsupportedError("record-level splitting is implemented over Q");
    if (r.dim < 2) throw DomainError("cannot split a record of dimension < 2");
    if (!is_isotropic(r)) throw DomainError("record is not isotropic");

    std::int64_t d = entry_int(r.det->representative());

    InvariantRecord out;
    out.field = r.field;
    out.dim = r.dim - 2;
    out.det = square_class(FieldElement::from_integer(r.field, -d));
    out.signature = std::pair<std::size_t, std::size_t>{r.signature->first - 1,
                                                        r.signature->second - 1};
    out.hasse.reserve(r.hasse.size());
    for (const auto& [v, s] : r.hasse)
        out.hasse.emplace_back(v, s * hilbert_symbol_int(-1, -d, v));
    return out;
}

}  // namespace qf
