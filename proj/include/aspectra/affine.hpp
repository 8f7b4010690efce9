#pragma once

// Window-notation model of A~_n as the affine symmetric group: bijections
// f of Z with f(i + n+1) = f(i) + n+1 and sum f(1..n+1) = (n+1)(n+2)/2.
// Products compose as functions, (pq)(x) = p(q(x)).

#include "aspectra/words.hpp"

#include <cstdint>
#include <vector>

namespace aspectra {

class FinitePermutation {
public:
    /// One-line notation over 1..m; throws RankError unless a bijection.
    explicit FinitePermutation(std::vector<int> images);
    static FinitePermutation identity(int size);
    /// The transposition exchanging i and j (1-based).
    static FinitePermutation transposition(int size, int i, int j);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    FinitePermutation operator*(const FinitePermutation& other) const;
    FinitePermutation inverse() const;
    bool is_identity() const;
    /// Cycle lengths in non-increasing order, fixed points included.
    std::vector<int> cycle_type() const;
    /// Cycles with each cycle starting at its smallest element, ordered by start.
    std::vector<std::vector<int>> cycles() const;
    int sign() const;

    bool operator==(const FinitePermutation&) const = default;

private:
    std::vector<int> images_;
};

/// Sum-zero integer vector in Z^{n+1}.
struct TranslationVector {
    std::vector<std::int64_t> coords;

    bool is_zero() const;
    TranslationVector operator+(const TranslationVector& other) const;
    /// Permutation action: (s . t)[s(i)] = t[i].
    TranslationVector permuted(const FinitePermutation& s) const;
    bool operator==(const TranslationVector&) const = default;
};

class AffinePermutation {
public:
    /// Throws RankError when the window violates the residue or sum invariant.
    AffinePermutation(int rank, std::vector<std::int64_t> window);
    static AffinePermutation identity(int rank);

    int rank() const noexcept { return rank_; }
    const std::vector<std::int64_t>& window() const noexcept { return window_; }
    std::int64_t operator()(std::int64_t x) const;

    AffinePermutation operator*(const AffinePermutation& other) const;
    AffinePermutation inverse() const;
    bool is_identity() const;

    bool operator==(const AffinePermutation&) const = default;

private:
    struct Unchecked {};
    AffinePermutation(int rank, std::vector<std::int64_t> window, Unchecked);
    bool invariants_hold() const;

    int rank_;
    std::vector<std::int64_t> window_;
};

/// a_i for i <= n swaps i and i+1; a_{n+1} swaps n+1 and n+2.
AffinePermutation generator_image(int i, int n);

/// Product of letter images in word order; g-letters expand through their
/// defining words in the lattice module.
AffinePermutation eval_word(const Word& word);

/// Reduces window values mod n+1; a homomorphism onto S_{n+1}.
FinitePermutation quotient_to_finite(const AffinePermutation& p);

/// coords[i] = (f(s^-1(i)) - i)/(n+1) with s the finite part.
TranslationVector translation_vector(const AffinePermutation& p);

/// The pure translation with the given coordinates.
AffinePermutation translation(int rank, const TranslationVector& t);

/// The element of <a_1..a_n> with the given finite part.
AffinePermutation finite_lift(int rank, const FinitePermutation& s);

/// A reduced word in a_1..a_n for s, found by repeatedly removing the last
/// descent (adjacent-transposition sorting).
Word reduced_word(int rank, const FinitePermutation& s);

inline bool equal(const AffinePermutation& p, const AffinePermutation& q) { return p == q; }

} // namespace aspectra

template <>
struct std::hash<aspectra::AffinePermutation> {
    std::size_t operator()(const aspectra::AffinePermutation& p) const noexcept;
};
