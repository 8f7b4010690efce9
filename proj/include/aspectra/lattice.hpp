#pragma once

// The cyclic words p_i, the lattice generators g_j = p_j^-1 p_{j+1}, the
// relations between them and the Coxeter letters, and coordinates on the
// abelian normal subgroup N = <g_1..g_n>.

#include "aspectra/affine.hpp"
#include "aspectra/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aspectra {

/// p_i = a_{i+1} ... a_{n+1} a_1 ... a_{i-1}; i is taken mod n+1.
Word p_word(int i, int n);

/// Defining a-word of g_j = p_j^-1 p_{j+1}.  j = n+1 gives the redundant
/// generator p_{n+1}^-1 p_1.
Word g_word(int j, int n);

/// Replaces every lattice letter by its defining a-word.
Word expand_lattice(const Word& word);

/// Exponent vector over the basis g_1..g_n.
struct LatticeElement {
    std::vector<std::int64_t> exponents;

    static LatticeElement zero(int n) { return {std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)}; }
    static LatticeElement basis(int n, int j);

    std::int64_t& operator[](int j) { return exponents[static_cast<std::size_t>(j - 1)]; }
    std::int64_t operator[](int j) const { return exponents[static_cast<std::size_t>(j - 1)]; }
    bool is_zero() const;
    LatticeElement operator+(const LatticeElement& other) const;
    LatticeElement operator-() const;
    bool operator==(const LatticeElement&) const = default;
};

/// g_1^{l_1} ... g_n^{l_n} as letters, each power written out.
Word lattice_word(const LatticeElement& element, int n);

/// Sum of exponents of the lattice letters of a word (a-letters are ignored).
LatticeElement lattice_content(const Word& word);

/// Image of g^l in the affine model.
AffinePermutation lattice_image(const LatticeElement& element, int n);

/// Solves g_1^{l_1}...g_n^{l_n} = m exactly over Z.  Throws NotATranslation
/// when m has a nontrivial finite part.
LatticeElement coordinates(const AffinePermutation& m);

/// Exponents of x g^l x^-1 for an arbitrary word x.
LatticeElement conjugate_lattice(const Word& x, const LatticeElement& element);

/// Commutation used by the move calculus once lattice letters are present:
/// Coxeter pairs per the diagram, all lattice pairs (N is abelian), and a_k
/// with g_j when k is not j-1, j, j+1 mod n+1.
bool letters_commute(const Letter& x, const Letter& y, int rank);

struct RelationPair {
    Word lhs;
    Word rhs;
    std::string label;
};

/// a_i p_j = ... (Direct) or a_i p_j^-1 = ... (Inverse).
enum class PSide { Direct, Inverse };
RelationPair rewrite_a_p(int i, int j, int n, PSide side = PSide::Direct);

/// Direct: p_i p_j = p_{j+1} p_{i-1}.  InverseBoth: p_j^-1 p_i^-1 = p_{i-1}^-1 p_{j+1}^-1.
/// Mixed: p_j^-1 p_i = p_{i-1} p_{j-1}^-1.
enum class PPForm { Direct, InverseBoth, Mixed };
RelationPair rewrite_p_p(int i, int j, int n, PPForm form = PPForm::Direct);

/// Which letter the relation's left side starts with.
enum class LetterOrder { CoxeterFirst, LatticeFirst };

/// a_k g_j^s = X^s a_k (CoxeterFirst) or g_j^s a_k = a_k X^s (LatticeFirst),
/// where X = a_k g_j a_k is g_j^-1, g_{j-1} g_j, g_j g_{j+1} or g_j.
RelationPair rewrite_a_g(int k, int j, int n, LetterOrder order = LetterOrder::CoxeterFirst, int sign = 1);

/// The commutation of a consecutive block a_p..a_k (k > p) with g_j.
/// CoxeterFirst has left side block.g_j^s; LatticeFirst has g_j^s.block.
/// Covers p <= j <= k and j outside [p-1, k+1]; throws RelationNotApplicable
/// for j = p-1 and j = k+1, which the tabulated cases leave out.
RelationPair rewrite_block_g(const Word& block, int j, LetterOrder order = LetterOrder::CoxeterFirst,
                             int sign = 1);

} // namespace aspectra
