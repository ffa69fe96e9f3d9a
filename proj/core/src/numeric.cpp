#include "qf/numeric.hpp"

#include <cmath>
#include <cstdlib>

#include "qf/errors.hpp"

namespace qf::num {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw BoundError("integer overflow in exact arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw BoundError("integer overflow in exact arithmetic");
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::int64_t mod_positive(std::int64_t a, std::int64_t p) noexcept {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r = mod_positive(a, p);
    if (r == 0) throw DomainError("division by zero residue");
    return static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(r),
                                             static_cast<std::uint64_t>(p - 2),
                                             static_cast<std::uint64_t>(p)));
}

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = mod_positive(a, p);
    if (r == 0) throw DomainError("legendre symbol of a multiple of p");
    return pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2),
                   static_cast<std::uint64_t>(p)) == 1
               ? 1
               : -1;
}

std::int64_t isqrt(std::int64_t n) noexcept {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t icbrt(std::int64_t n) noexcept {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t squarefree_part(std::int64_t n, std::int64_t bound) {
    if (n == 0) throw DomainError("squarefree part of zero");
    std::int64_t sign = n < 0 ? -1 : 1;
    std::int64_t m = n < 0 ? -n : n;
    std::int64_t sf = 1;
    for (std::int64_t d = 2; d <= bound && d * d <= m; d = d == 2 ? 3 : d + 2) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e & 1) sf = checked_mul(sf, d);
    }
    if (m > 1) {
        // Residual cofactor has no prime factor <= bound. Possible shapes
        // within int64: p, p*q, p^2, (pq)^2, p^3. Squares and cubes are
        // detected directly; anything else below bound^3 is squarefree.
        std::int64_t s = isqrt(m);
        std::int64_t c = icbrt(m);
        if (s * s == m) {
            // even multiplicity, contributes nothing
        } else if (c > 1 && c * c * c == m) {
            sf = checked_mul(sf, c);
        } else if (bound >= 2'000'000 || m <= bound * bound * bound) {
            sf = checked_mul(sf, m);
        } else {
            throw BoundError("cannot classify square class within factoring bound");
        }
    }
    return sign * sf;
}

std::vector<std::int64_t> odd_prime_divisors(std::int64_t n, std::int64_t bound) {
    if (n == 0) throw DomainError("prime support of zero");
    std::int64_t m = n < 0 ? -n : n;
    std::vector<std::int64_t> primes;
    for (std::int64_t d = 3; d <= bound && d * d <= m; d += 2) {
        if (m % d != 0) continue;
        primes.push_back(d);
        while (m % d == 0) m /= d;
    }
    while (m % 2 == 0) m /= 2;
    if (m > 1) {
        // No factor <= bound was found, so a residual <= bound^2 is prime.
        if (bound < 2'000'000 && m > bound * bound)
            throw BoundError("cannot factor prime support within bound");
        primes.push_back(m);
    }
    return primes;
}

Rational Rational::make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational{n, d};
}

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    std::int64_t g1 = gcd(num, o.den);
    std::int64_t g2 = gcd(o.num, den);
    return Rational::make(checked_mul(num / g1, o.num / g2), checked_mul(den / g2, o.den / g1));
}

Rational Rational::operator+(const Rational& o) const {
    return Rational::make(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                          checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational::make(den, num);
}

std::string Rational::render() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Gaussian Gaussian::operator*(const Gaussian& o) const {
    return Gaussian{re * o.re - im * o.im, re * o.im + im * o.re};
}

Gaussian Gaussian::inverse() const {
    Rational norm = re * re + im * im;
    if (norm.is_zero()) throw DomainError("inverse of zero");
    Rational n_inv = norm.inverse();
    return Gaussian{re * n_inv, -im * n_inv};
}

std::string Gaussian::render() const {
    if (im.is_zero()) return re.render();
    std::string imag = im == Rational::integer(1)    ? "i"
                       : im == Rational::integer(-1) ? "-i"
                                                     : im.render() + "i";
    if (re.is_zero()) return imag;
    if (im.sign() > 0) return re.render() + "+" + imag;
    return re.render() + imag;
}

}  // namespace qf::num
