#pragma once

#include <optional>
#include <utility>

#include "qf/invariants.hpp"

namespace qf {

/// Witt decomposition q = q_an perp i(q) x <1,-1>. The anisotropic part is
/// explicit wherever the engine can name a diagonal form (F_p, R, C and
/// towers over them); over Q (and towers over Q) only its invariants are
/// produced. The invariants are always present; for hyperbolic forms they
/// describe the zero form (dim 0).
struct WittDecomposition {
    std::size_t witt_index{0};
    std::optional<QuadraticForm> anisotropic_part;
    InvariantRecord anisotropic_invariants;
};

/// Write q over F((x)) as p perp x*q': entries with even outermost exponent
/// land in p (power removed), odd ones in q' (one x removed). Either part
/// may be empty.
std::pair<std::optional<QuadraticForm>, std::optional<QuadraticForm>> springer_split(
    const QuadraticForm& q);

bool is_isotropic(const QuadraticForm& q);

/// Record-level isotropy over plain Q, by the local criteria at the
/// record's support places (for the Hasse convention prod_{i<j}):
///   dim 2: -det is a square;
///   dim 3: (-1, -det)_v = s_v at every support place;
///   dim 4: at every v, det is a non-square in Q_v or s_v = (-1,-1)_v;
///   dim >= 5: indefinite.
bool is_isotropic(const InvariantRecord& r);

std::size_t witt_index(const QuadraticForm& q);

bool is_hyperbolic(const QuadraticForm& q);

WittDecomposition witt_decomposition(const QuadraticForm& q);

/// True when d is a square in the completion of Q at v.
bool is_local_square(std::int64_t d, const Place& v);

}  // namespace qf
