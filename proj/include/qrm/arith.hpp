#ifndef QRM_ARITH_HPP
#define QRM_ARITH_HPP

// Small integer helpers shared by the exact-arithmetic headers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qrm {

inline mpz_class isqrt(const mpz_class& n)
{
    if (sgn(n) < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const mpz_class& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_squarefree(std::int64_t n)
{
    if (n < 1) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
        if (n % p == 0) {
            n /= p;
        }
    }
    return true;
}

inline int mobius(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("mobius: n must be positive");
    }
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

inline std::vector<std::int64_t> divisors_of(std::int64_t n)
{
    std::vector<std::int64_t> small, large;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            small.push_back(k);
            if (k * k != n) {
                large.push_back(n / k);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail {

inline mpz_class pollard_brent(const mpz_class& n)
{
    if (mpz_even_p(n.get_mpz_t())) {
        return 2;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        std::size_t r = 1;
        const std::size_t m = 64;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) {
                step(y);
            }
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

inline void factor_into(mpz_class n, std::vector<mpz_class>& primes)
{
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

} // namespace detail

/// Prime factorization of a positive integer as (prime, exponent) pairs in
/// increasing prime order. Trial division for small primes, then Pollard-Brent.
inline std::vector<std::pair<mpz_class, int>> factorize_integer(mpz_class n)
{
    if (sgn(n) <= 0) {
        throw std::invalid_argument("factorize_integer: n must be positive");
    }
    std::vector<mpz_class> primes;
    for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<mpz_class, int>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

inline std::vector<mpz_class> divisors_of(const mpz_class& n)
{
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factorize_integer(n)) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace qrm

#endif // QRM_ARITH_HPP
