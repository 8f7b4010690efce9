#include "aspectra/modular.hpp"

#include "aspectra/error.hpp"

#include <utility>

namespace aspectra::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent > 0) {
        if (exponent & 1U)
            result = mul(result, base, p);
        base = mul(base, base, p);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw ArityMismatch("zero has no inverse mod p");
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t reduce(const Rational& q, std::uint64_t p)
{
    const mpz_class modulus(std::to_string(p));
    mpz_class num = q.get_num() % modulus;
    if (num < 0)
        num += modulus;
    mpz_class den = q.get_den() % modulus;
    if (den == 0)
        throw ArityMismatch("denominator vanishes modulo the chosen prime");
    const auto to_u64 = [](const mpz_class& z) { return std::stoull(z.get_str()); };
    return mul(to_u64(num), inverse(to_u64(den), p), p);
}

std::uint64_t determinant(std::vector<std::uint64_t> m, std::size_t dim, std::uint64_t p)
{
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && m[pivot * dim + col] == 0)
            ++pivot;
        if (pivot == dim)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < dim; ++c)
                std::swap(m[pivot * dim + c], m[col * dim + c]);
            det = sub(0, det, p);
        }
        const std::uint64_t pv = m[col * dim + col];
        det = mul(det, pv, p);
        const std::uint64_t inv = inverse(pv, p);
        for (std::size_t r = col + 1; r < dim; ++r) {
            const std::uint64_t f = mul(m[r * dim + col], inv, p);
            if (f == 0)
                continue;
            for (std::size_t c = col; c < dim; ++c)
                m[r * dim + c] = sub(m[r * dim + c], mul(f, m[col * dim + c], p), p);
        }
    }
    return det;
}

} // namespace aspectra::modp
