#pragma once

// Arithmetic modulo a 64-bit prime, used for polynomial identity testing.

#include "aspectra/rational.hpp"

#include <cstdint>
#include <vector>

namespace aspectra::modp {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    const std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Image of a rational in Z/p; throws ArityMismatch if p divides the denominator.
std::uint64_t reduce(const Rational& q, std::uint64_t p);

/// Determinant of a row-major dim x dim matrix over Z/p.
std::uint64_t determinant(std::vector<std::uint64_t> m, std::size_t dim, std::uint64_t p);

} // namespace aspectra::modp
