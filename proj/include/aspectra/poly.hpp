#pragma once

// Sparse multivariate polynomials with exact rational coefficients, matrices
// of them, and their determinants (symbolic, and by modular evaluation).

#include "aspectra/json.hpp"
#include "aspectra/rational.hpp"
#include "aspectra/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aspectra {

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order: total degree first, then the first differing
/// exponent (larger exponent on x_1 is larger).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}
    static MultiPoly constant(std::size_t arity, const Rational& c);
    /// x_{index}, 0-based.
    static MultiPoly variable(std::size_t arity, std::size_t index);

    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    /// Adds c * x^e; the zero coefficient is never stored.
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scale(const Rational& s) const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    bool operator==(const MultiPoly& other) const { return arity_ == other.arity_ && terms_ == other.terms_; }

    /// Exact quotient; throws ArityMismatch when `divisor` does not divide.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    Rational eval(std::span<const Rational> point) const;
    std::uint64_t eval_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const;

    /// Sets every variable not listed in `keep` to zero and renumbers the
    /// kept ones in the given order.
    MultiPoly restrict_to(std::span<const std::size_t> keep) const;

    /// {"arity": k, "terms": [{"exp": [...], "coeff": "num/den"}, ...]},
    /// terms ascending in graded-lex order.
    Json to_json() const;
    static MultiPoly from_json(const Json& j);
    std::string to_string() const;

private:
    void check_arity(const MultiPoly& other) const;

    std::size_t arity_;
    Terms terms_;
};

class PolyMatrix {
public:
    PolyMatrix(std::size_t dim, std::size_t arity);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t arity() const noexcept { return arity_; }
    MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    PolyMatrix operator*(const PolyMatrix& other) const;
    /// Largest total degree of any entry.
    int max_entry_degree() const;

private:
    std::size_t dim_;
    std::size_t arity_;
    std::vector<MultiPoly> entries_;
};

/// Cofactor (Laplace) expansion along the first row.
MultiPoly det_cofactor(const PolyMatrix& m);
/// Fraction-free elimination with exact polynomial division, after each row
/// is scaled to a primitive integer row.
MultiPoly det_bareiss(const PolyMatrix& m);
/// Cofactor expansion up to dimension 4, elimination beyond.
MultiPoly det_symbolic(const PolyMatrix& m);

/// det(m) evaluated at a point mod p, via elimination over Z/p.
std::uint64_t det_mod(const PolyMatrix& m, std::span<const std::uint64_t> point, std::uint64_t prime);

struct PitResult {
    bool equal = true;
    std::size_t trials = 0;
    std::uint64_t prime = 0;
    /// Bound on the probability that unequal determinants were reported equal:
    /// (degree / prime)^trials.  Zero when the verdict is "unequal" (certain).
    double false_equal_bound = 0.0;
    /// A point where the determinants differ, when one was found.
    std::optional<std::vector<std::uint64_t>> witness;
};

/// Schwartz-Zippel comparison of det(a) and det(b) at random points mod prime.
/// Throws ArityMismatch for a prime that is not prime or not above the degree.
PitResult pit_equal(const PolyMatrix& a, const PolyMatrix& b, std::size_t trials, std::uint64_t prime, Rng& rng);

} // namespace aspectra
