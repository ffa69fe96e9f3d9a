#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/form.hpp"

namespace qf {

/// A place of Q: the real place or a finite place (including p = 2).
struct Place {
    bool real{false};
    std::int64_t prime{0};

    static Place real_place() { return Place{true, 0}; }
    static Place finite(std::int64_t p);

    std::string render() const { return real ? "real" : std::to_string(prime); }

    friend bool operator==(const Place&, const Place&) = default;
    auto operator<=>(const Place&) const = default;
};

/// Classification data sufficient to decide isometry per field:
/// (dim, det) over F_p; signature over R; dim over C; (dim, det, Hasse
/// invariants, signature) over Q; Springer residue parts over towers.
///
/// Hasse convention used throughout: s_v(q) = prod_{i<j} (a_i, a_j)_v.
/// The hasse map lists only the support places {real, 2} and odd primes
/// dividing an entry; every other symbol is +1.
///
/// dim 0 is allowed only for the terminal record of a Witt decomposition
/// (the invariants of the zero form left after splitting off all planes).
struct InvariantRecord {
    FieldDescriptor field = FieldDescriptor::rationals();
    std::size_t dim{0};
    std::optional<SquareClass> det;  // empty only for dim 0
    std::vector<std::pair<Place, int>> hasse;                 // Q base, empty tower
    std::optional<std::pair<std::size_t, std::size_t>> signature;  // R, or real place of Q
    std::shared_ptr<const InvariantRecord> unit_part;         // towers: Springer residue parts
    std::shared_ptr<const InvariantRecord> x_part;

    int hasse_at(const Place& v) const;
    std::string render() const;
    bool equal_invariants(const InvariantRecord& other) const;
};

SquareClass determinant_class(const QuadraticForm& q);

/// (a, b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution in the
/// completion of Q at v. Arguments must be elements of plain Q.
int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v);

/// Same symbol on nonzero integers (square classes of Q embed as signed
/// squarefree integers).
int hilbert_symbol_int(std::int64_t a, std::int64_t b, const Place& v);

/// prod_{i<j} (a_i, a_j)_v over the form's entries.
int hasse_invariant(const QuadraticForm& q, const Place& v);

/// (#positive, #negative) entries; base R or Q with empty tower.
std::pair<std::size_t, std::size_t> signature(const QuadraticForm& q);

/// Support places of a form over Q: the real place, 2, and every odd prime
/// dividing an entry.
std::vector<Place> place_support(const QuadraticForm& q);

InvariantRecord invariant_record(const QuadraticForm& q);

bool is_isometric(const QuadraticForm& p, const QuadraticForm& q);

/// p similar to q: p isometric to a*q for some scalar a. Requires finitely
/// many square classes.
bool is_similar(const QuadraticForm& p, const QuadraticForm& q);

/// Invariants of q' where q = H perp q', for an isotropic record over Q
/// with dim >= 2: dim drops by 2, det flips sign, both signature counts
/// drop by 1, and s_v(q') = s_v(q) * (-1, -det q)_v.
InvariantRecord split_hyperbolic(const InvariantRecord& r);

}  // namespace qf
