#pragma once

#include <optional>
#include <set>

#include "qf/isotropy.hpp"

namespace qf {

/// The value set D(q), similarity factors G(q) and product set
/// H(q) = D(q)D(q) of a form, as sets of square classes. Only available
/// over fields with finitely many square classes. Invariants: G <= H
/// always; 1 in G; and when q represents 1, G <= D <= H.
struct ValueSets {
    QuadraticForm form;
    std::set<SquareClass> d_set;
    std::set<SquareClass> g_set;
    std::set<SquareClass> h_set;
};

/// q represents a: q is isotropic (isotropic forms represent everything)
/// or q perp <-a> is isotropic.
bool represents(const QuadraticForm& q, const FieldElement& a);

/// a in G(q): <1,-a> (x) q is hyperbolic; equivalently a*q isometric to q.
bool in_G(const QuadraticForm& q, const FieldElement& a);

/// a in H(q): <1,-a> (x) q is isotropic.
bool in_H(const QuadraticForm& q, const FieldElement& a);

ValueSets value_sets(const QuadraticForm& q);

/// q is a group form: D(q) is a group, equivalently H(q) <= D(q)
/// (and then H(q) = D(q)).
bool is_group(const QuadraticForm& q);

/// q is round: D(q) = G(q), equivalently 1 in D(q) and H(q) <= G(q).
bool is_round(const QuadraticForm& q);

/// Independent roundness route: q represents 1 and q (x) <b,c> is
/// anisotropic or hyperbolic for every binary form <b,c>.
bool round_via_binary_multiples(const QuadraticForm& q);

/// q isometric to some <1,a1> (x) ... (x) <1,an>. Finite-class fields use
/// exhaustive slot enumeration; over Q only dims 1 and 2 are decided
/// (dim 2 Pfister iff q represents 1).
bool is_pfister_form(const QuadraticForm& q);

bool is_similar_to_pfister(const QuadraticForm& q);

/// Witness class in H(q) \ D(q) when q is not a group form.
std::optional<SquareClass> group_witness(const QuadraticForm& q);

/// Witness for failed roundness: a class in H(q) \ G(q), or nullopt when
/// roundness fails because 1 is not represented.
std::optional<SquareClass> round_witness(const QuadraticForm& q);

}  // namespace qf
