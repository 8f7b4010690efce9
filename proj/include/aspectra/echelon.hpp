#pragma once

// Normal forms up to conjugacy: the echelon form delta_1...delta_n of a word
// in a_1..a_n, its block-compacted variant, and the echelon form for A~_n
// (block part times a constrained lattice part).

#include "aspectra/affine.hpp"
#include "aspectra/json.hpp"
#include "aspectra/lattice.hpp"
#include "aspectra/words.hpp"

#include <optional>
#include <vector>

namespace aspectra {

/// A consecutive run a_start ... a_end.
struct Block {
    int start = 1;
    int end = 1;

    int length() const noexcept { return end - start + 1; }
    bool operator==(const Block&) const = default;
};

class EchelonForm {
public:
    /// `present[i-1]` says whether delta_i = a_i.
    EchelonForm(int rank, std::vector<bool> present);

    /// Recognizes words that already have the delta_1...delta_n shape.
    static std::optional<EchelonForm> recognize(const Word& word);

    int rank() const noexcept { return rank_; }
    bool present(int i) const { return present_[static_cast<std::size_t>(i - 1)]; }
    std::vector<Block> blocks() const;
    Word word() const;

    bool operator==(const EchelonForm&) const = default;

private:
    int rank_;
    std::vector<bool> present_;
};

class BlockEchelonForm {
public:
    /// Throws RankError unless blocks lie in 1..n and consecutive blocks are
    /// separated by exactly one absent letter.
    BlockEchelonForm(int rank, std::vector<Block> blocks);

    int rank() const noexcept { return rank_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    Word word() const;
    EchelonForm echelon() const;

    bool operator==(const BlockEchelonForm&) const = default;

private:
    int rank_;
    std::vector<Block> blocks_;
};

class TildeEchelonForm {
public:
    TildeEchelonForm(BlockEchelonForm block_part, LatticeElement lattice_part);

    const BlockEchelonForm& block_part() const noexcept { return block_part_; }
    const LatticeElement& lattice_part() const noexcept { return lattice_part_; }
    int rank() const noexcept { return block_part_.rank(); }

    /// Block letters followed by g_1^{l_1} ... g_n^{l_n}.
    Word word() const;

    /// Interior indices of blocks of length > 1 carry exponent 0, and the
    /// index of each length-1 block carries an exponent in {-1, 0, 1}.
    bool satisfies_invariants() const;

    /// {"blocks": [[p,k],...], "exponents": [l_1..l_n]}
    Json to_json() const;

    bool operator==(const TildeEchelonForm&) const = default;

private:
    BlockEchelonForm block_part_;
    LatticeElement lattice_part_;
};

template <class Form>
struct Traced {
    Form form;
    MoveTrace trace;
};

struct Decomposition {
    Word finite_part;
    LatticeElement lattice_part;
};

/// w = x m with x a reduced word in a_1..a_n and m in N.
Decomposition decompose(const Word& word);

/// A permutation p with p s p^-1 = t; s and t must share a cycle type.
FinitePermutation conjugating_permutation(const FinitePermutation& s, const FinitePermutation& t);

/// Echelon form of a word in a_1..a_n.  Words already in echelon shape are
/// returned unchanged; otherwise the form is built from the cycle type:
/// blocks of lengths lambda_t - 1 for the parts lambda_t >= 2 in
/// non-increasing order, starting at a_1 and separated by one gap.
EchelonForm a_echelon(const Word& x);
Traced<EchelonForm> a_echelon_traced(const Word& x);

/// Closes every gap between consecutive blocks down to one absent letter,
/// keeping the start of the first block.
BlockEchelonForm block_echelon(const EchelonForm& e);
Traced<BlockEchelonForm> block_echelon_traced(const EchelonForm& e);

/// Conjugates the word to block form times a lattice element, then runs the
/// clockwise transformations (blocks of length > 1) and the exponent
/// reduction (blocks of length 1) block by block, left to right.
TildeEchelonForm tilde_echelon(const Word& word);
Traced<TildeEchelonForm> tilde_echelon_traced(const Word& word);

} // namespace aspectra
