#include "oracles.hpp"

#include <functional>
#include <unordered_map>

#include "qf/numeric.hpp"

namespace qforacle {

namespace {

using qf::num::mod_positive;

// Iterate v over [0, m)^n; fn returns true to stop early.
bool odometer(std::size_t n, std::int64_t m, const std::function<bool(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> v(n, 0);
    while (true) {
        if (fn(v)) return true;
        std::size_t k = 0;
        while (k < n && ++v[k] == m) v[k++] = 0;
        if (k == n) return false;
    }
}

std::int64_t eval_mod(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& v,
                      std::int64_t m) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = (acc + mod_positive(a[i], m) * (v[i] * v[i] % m)) % m;
    return acc;
}

std::int64_t bilinear(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& u,
                      const std::vector<std::int64_t>& v, std::int64_t p) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + a[i] * u[i] % p * v[i]) % p;
    return mod_positive(acc, p);
}

}  // namespace

std::vector<std::int64_t> residue_entries(const qf::QuadraticForm& q) {
    std::vector<std::int64_t> out;
    for (const auto& e : q.entries()) out.push_back(std::get<qf::Residue>(e.unit()).value);
    return out;
}

std::vector<std::int64_t> rational_entries(const qf::QuadraticForm& q) {
    std::vector<std::int64_t> out;
    for (const auto& e : q.entries()) out.push_back(std::get<qf::num::Rational>(e.unit()).num);
    return out;
}

std::set<std::int64_t> fp_represented_values(const std::vector<std::int64_t>& a, std::int64_t p) {
    std::set<std::int64_t> values;
    odometer(a.size(), p, [&](const std::vector<std::int64_t>& v) {
        std::int64_t val = eval_mod(a, v, p);
        if (val != 0) values.insert(val);
        return false;
    });
    return values;
}

bool fp_isotropic(const std::vector<std::int64_t>& a, std::int64_t p) {
    if (a.empty()) return false;
    return odometer(a.size(), p, [&](const std::vector<std::int64_t>& v) {
        bool zero = true;
        for (auto c : v)
            if (c != 0) zero = false;
        return !zero && eval_mod(a, v, p) == 0;
    });
}

std::size_t fp_witt_index(std::vector<std::int64_t> a, std::int64_t p) {
    std::size_t n = a.size();
    if (n < 2 || !fp_isotropic(a, p)) return 0;

    // Find an isotropic vector v.
    std::vector<std::int64_t> iso;
    odometer(n, p, [&](const std::vector<std::int64_t>& v) {
        bool zero = true;
        for (auto c : v)
            if (c != 0) zero = false;
        if (!zero && eval_mod(a, v, p) == 0) {
            iso = v;
            return true;
        }
        return false;
    });

    // Find w with B(v, w) != 0 (exists by non-degeneracy).
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        if (bilinear(a, iso, e, p) != 0) {
            w = e;
            break;
        }
    }

    if (n == 2) return 1;

    // Basis of the orthogonal complement of span(v, w): kernel of the 2 x n
    // system B(v, y) = B(w, y) = 0, found by scanning coordinate vectors and
    // correcting inside the plane. The plane is non-degenerate, so
    // y' = y - alpha v - beta w with alpha, beta solving a 2x2 system.
    std::int64_t bvw = bilinear(a, iso, w, p);
    std::int64_t bww = bilinear(a, w, w, p);
    std::int64_t bvw_inv = qf::num::mod_inverse(bvw, p);

    std::vector<std::vector<std::int64_t>> complement;
    for (std::size_t i = 0; i < n && complement.size() < n - 2; ++i) {
        std::vector<std::int64_t> y(n, 0);
        y[i] = 1;
        // Solve B(v, y') = 0 and B(w, y') = 0 for y' = y - alpha v - beta w:
        //   B(v,y) - beta B(v,w) = 0          (B(v,v) = 0)
        //   B(w,y) - alpha B(w,v) - beta B(w,w) = 0
        std::int64_t beta = bilinear(a, iso, y, p) * bvw_inv % p;
        std::int64_t alpha = (bilinear(a, w, y, p) - beta * bww % p + p * p) % p * bvw_inv % p;
        for (std::size_t j = 0; j < n; ++j)
            y[j] = mod_positive(y[j] - alpha * iso[j] - beta * w[j], p);

        // Keep y if independent from the collected complement vectors
        // (row reduction).
        auto rows = complement;
        rows.push_back(y);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            std::int64_t inv = qf::num::mod_inverse(rows[rank][col], p);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                std::int64_t factor = rows[r][col] * inv % p;
                for (std::size_t cc = 0; cc < n; ++cc)
                    rows[r][cc] = mod_positive(rows[r][cc] - factor * rows[rank][cc], p);
            }
            ++rank;
        }
        if (rank == rows.size()) complement.push_back(y);
    }

    // Gram matrix of the complement, then symmetric diagonalisation mod p.
    std::size_t m = complement.size();
    std::vector<std::vector<std::int64_t>> gram(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram[i][j] = bilinear(a, complement[i], complement[j], p);

    std::vector<std::int64_t> diag_entries;
    for (std::size_t k = 0; k < m; ++k) {
        if (gram[k][k] == 0) {
            std::size_t l = k + 1;
            while (l < m && gram[l][l] == 0) ++l;
            if (l < m) {
                std::swap(gram[k], gram[l]);
                for (auto& row : gram) std::swap(row[k], row[l]);
            } else {
                // All remaining diagonal entries vanish; make one nonzero
                // via e_k + e_l with B(e_k, e_l) != 0.
                for (l = k + 1; l < m; ++l)
                    if (gram[k][l] != 0) break;
                for (std::size_t j = 0; j < m; ++j)
                    gram[k][j] = mod_positive(gram[k][j] + gram[l][j], p);
                for (std::size_t j = 0; j < m; ++j)
                    gram[j][k] = mod_positive(gram[j][k] + gram[j][l], p);
            }
        }
        std::int64_t inv = qf::num::mod_inverse(gram[k][k], p);
        for (std::size_t r = k + 1; r < m; ++r) {
            if (gram[r][k] == 0) continue;
            std::int64_t factor = gram[r][k] * inv % p;
            for (std::size_t cc = 0; cc < m; ++cc)
                gram[r][cc] = mod_positive(gram[r][cc] - factor * gram[k][cc], p);
            for (std::size_t cc = 0; cc < m; ++cc)
                gram[cc][r] = mod_positive(gram[cc][r] - factor * gram[cc][k], p);
        }
        diag_entries.push_back(gram[k][k]);
    }

    return 1 + fp_witt_index(diag_entries, p);
}

bool fp_isometric_by_basis_search(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b, std::int64_t p) {
    if (a.size() != b.size()) return false;
    std::size_t n = a.size();
    std::vector<std::vector<std::int64_t>> columns;

    std::function<bool()> search = [&]() -> bool {
        if (columns.size() == n) return true;
        std::size_t j = columns.size();
        bool found = odometer(n, p, [&](const std::vector<std::int64_t>& c) {
            bool zero = true;
            for (auto x : c)
                if (x != 0) zero = false;
            if (zero) return false;
            if (eval_mod(a, c, p) != mod_positive(b[j], p)) return false;
            for (const auto& prev : columns)
                if (bilinear(a, prev, c, p) != 0) return false;
            columns.push_back(c);
            if (search()) return true;
            columns.pop_back();
            return false;
        });
        return found;
    };
    return search();
}

bool q_lattice_isotropic(const std::vector<std::int64_t>& a, std::int64_t box) {
    std::size_t n = a.size();
    std::size_t n1 = n / 2;
    std::int64_t m = 2 * box + 1;

    // value of the first half -> achieved by a nonzero assignment?
    std::unordered_map<std::int64_t, bool> half;
    odometer(n1, m, [&](const std::vector<std::int64_t>& v) {
        std::int64_t val = 0;
        bool zero = true;
        for (std::size_t i = 0; i < n1; ++i) {
            std::int64_t c = v[i] - box;
            if (c != 0) zero = false;
            val += a[i] * c * c;
        }
        auto [it, inserted] = half.emplace(val, !zero);
        if (!inserted && !zero) it->second = true;
        return false;
    });

    return odometer(n - n1, m, [&](const std::vector<std::int64_t>& v) {
        std::int64_t val = 0;
        bool zero = true;
        for (std::size_t i = 0; i < n - n1; ++i) {
            std::int64_t c = v[i] - box;
            if (c != 0) zero = false;
            val += a[n1 + i] * c * c;
        }
        auto it = half.find(-val);
        if (it == half.end()) return false;
        return !zero || it->second;
    });
}

bool q_mod2k_isotropic(const std::vector<std::int64_t>& a, int k) {
    std::int64_t m = std::int64_t{1} << k;
    return odometer(a.size(), m, [&](const std::vector<std::int64_t>& v) {
        bool primitive = false;
        for (auto c : v)
            if (c % 2 != 0) primitive = true;
        return primitive && eval_mod(a, v, m) == 0;
    });
}

bool q_locally_isotropic_everywhere(const std::vector<std::int64_t>& a) {
    bool has_pos = false, has_neg = false;
    for (auto e : a) (e > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) return false;

    std::set<std::int64_t> odd_primes;
    for (auto e : a)
        for (auto p : qf::num::odd_prime_divisors(e)) odd_primes.insert(p);

    for (auto p : odd_primes) {
        // Springer over Q_p for squarefree entries: isotropic iff a residue
        // part is isotropic mod p.
        std::vector<std::int64_t> units, multiples;
        for (auto e : a) {
            if (e % p == 0)
                multiples.push_back(mod_positive(e / p, p));
            else
                units.push_back(mod_positive(e, p));
        }
        if (!fp_isotropic(units, p) && !fp_isotropic(multiples, p)) return false;
    }

    return q_mod2k_isotropic(a, 6);
}

}  // namespace qforacle
