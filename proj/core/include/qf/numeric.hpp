#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qf::num {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

// Throw BoundError on overflow instead of wrapping; all arithmetic in the
// engine is exact or refused.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;
std::int64_t mod_positive(std::int64_t a, std::int64_t p) noexcept;  // result in [0, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);            // p prime, p does not divide a
bool is_prime(std::int64_t n) noexcept;
int legendre(std::int64_t a, std::int64_t p);  // p odd prime, p does not divide a
std::int64_t isqrt(std::int64_t n) noexcept;

inline constexpr std::int64_t kDefaultFactorBound = 1'000'000;

// Signed squarefree part of n (n nonzero). Trial division up to `bound`;
// residual cofactors that cannot be classified exactly raise BoundError
// rather than guessing.
std::int64_t squarefree_part(std::int64_t n, std::int64_t bound = kDefaultFactorBound);

// Odd primes dividing n, ascending. n is expected squarefree and small;
// an unsplittable residual raises BoundError.
std::vector<std::int64_t> odd_prime_divisors(std::int64_t n, std::int64_t bound = kDefaultFactorBound);

/// Exact rational on int64, always in lowest terms with positive denominator.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    static Rational make(std::int64_t n, std::int64_t d);
    static Rational integer(std::int64_t n) noexcept { return Rational{n, 1}; }

    bool is_zero() const noexcept { return num == 0; }
    int sign() const noexcept { return num > 0 ? 1 : num < 0 ? -1 : 0; }

    Rational operator*(const Rational& o) const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const noexcept { return Rational{-num, den}; }
    Rational inverse() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    // Structural order on normalized (num, den); used for container keys only.
    auto operator<=>(const Rational&) const = default;

    std::string render() const;
};

/// Gaussian rational a + bi; the exact proxy for complex field elements.
struct Gaussian {
    Rational re{};
    Rational im{};

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

    Gaussian operator*(const Gaussian& o) const;
    Gaussian operator-() const noexcept { return Gaussian{-re, -im}; }
    Gaussian inverse() const;

    friend bool operator==(const Gaussian&, const Gaussian&) = default;
    auto operator<=>(const Gaussian&) const = default;

    std::string render() const;
};

}  // namespace qf::num
