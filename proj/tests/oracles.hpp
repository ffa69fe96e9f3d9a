#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qf/form.hpp"

// Brute-force reference computations for the test suite. Everything here is
// independent of the engine's decision procedures: values are found by
// enumerating vectors, splittings are carried out on explicit Gram matrices,
// local solvability is decided by residue enumeration.
namespace qforacle {

// Diagonal entries of a form over F_p as residues in [1, p).
std::vector<std::int64_t> residue_entries(const qf::QuadraticForm& q);

// Diagonal entries of a form over plain Q as signed squarefree integers.
std::vector<std::int64_t> rational_entries(const qf::QuadraticForm& q);

// All nonzero values q(v) for v in F_p^n \ {0}.
std::set<std::int64_t> fp_represented_values(const std::vector<std::int64_t>& a, std::int64_t p);

bool fp_isotropic(const std::vector<std::int64_t>& a, std::int64_t p);

// Witt index over F_p by explicit hyperbolic-plane splitting: find an
// isotropic vector, complete it to a hyperbolic plane, diagonalise the
// orthogonal complement, recurse.
std::size_t fp_witt_index(std::vector<std::int64_t> a, std::int64_t p);

// Isometry over F_p by a change-of-basis column search: columns c_j with
// q(c_j) = b_j, pairwise orthogonal for diag(a).
bool fp_isometric_by_basis_search(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b, std::int64_t p);

// Bounded lattice search for an isotropic vector with coordinates in
// [-box, box], meet-in-the-middle. Positives are sound; negatives are not
// conclusive.
bool q_lattice_isotropic(const std::vector<std::int64_t>& a, std::int64_t box);

// Primitive solution of sum a_i v_i^2 = 0 mod 2^k (v not all even).
bool q_mod2k_isotropic(const std::vector<std::int64_t>& a, int k);

// Local solvability at every place of Q by brute force: sign check at the
// real place, residue-part vector enumeration mod p at odd places (exact
// for squarefree entries by Hensel lifting), primitive vectors mod 2^6 at
// p = 2. Together with Hasse-Minkowski this decides isotropy.
bool q_locally_isotropic_everywhere(const std::vector<std::int64_t>& a);

}  // namespace qforacle
