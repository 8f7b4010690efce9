#pragma once

// Group words over the Coxeter letters a_1..a_{n+1} and the lattice letters
// g_1..g_n of the affine group of type A~_n, and the admissible-move calculus
// acting on them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aspectra {

/// Throws RankError unless n >= 2.
void require_rank(int n);

/// Maps any integer index onto the representative in 1..n+1 (mod n+1).
int wrap_index(int index, int n);

/// True when Coxeter generators a_i, a_j are joined in the cycle diagram of A~_n.
bool cycle_adjacent(int i, int j, int n);

enum class LetterKind : std::uint8_t { Coxeter, Lattice };

struct Letter {
    LetterKind kind = LetterKind::Coxeter;
    int index = 1;
    /// Always +1 for Coxeter letters.
    int sign = 1;

    static Letter a(int i) { return {LetterKind::Coxeter, i, 1}; }
    static Letter g(int j, int sign = 1) { return {LetterKind::Lattice, j, sign}; }

    bool coxeter() const noexcept { return kind == LetterKind::Coxeter; }
    bool lattice() const noexcept { return kind == LetterKind::Lattice; }
    Letter inverse() const noexcept { return coxeter() ? *this : Letter{kind, index, -sign}; }

    auto operator<=>(const Letter&) const = default;
};

std::string render_letter(const Letter& letter);

class Word {
public:
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);

    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Formal inverse: reversed letters, lattice signs flipped.
    Word inverse() const;
    Word slice(std::size_t pos, std::size_t count) const;
    /// True when every letter is one of a_1..a_n.
    bool finite_alphabet() const;
    bool has_lattice_letters() const;

    Word operator+(const Word& other) const;
    Word& operator+=(const Word& other);
    Word& push_back(const Letter& letter);

    bool operator==(const Word& other) const = default;

private:
    int rank_;
    std::vector<Letter> letters_;
};

struct ParseOptions {
    /// Cancel adjacent inverse pairs after tokenizing. Off by default.
    bool free_reduce = false;
};

/// Parses the whitespace-separated token grammar ("a1 a2 g1^-2").
Word parse_word(std::string_view text, int rank, ParseOptions options = {});

/// Canonical text: single tokens, runs of equal lattice letters folded to powers.
std::string render_word(const Word& word);

/// Removes a_i a_i and g_j^s g_j^-s pairs until none remain.
Word free_reduce(const Word& word);

enum class MoveKind : std::uint8_t {
    Cancel,
    Commute,
    Circular,
    Braid,
    /// Macro move: replaces a subword by an equal word from a derived relation.
    Relation,
    /// Macro move: w -> c w c^-1.
    Conjugate,
};

std::string_view move_kind_name(MoveKind kind);

/// Positions are 1-based, as in the written calculus.  For Circular the
/// position is the split k: the first k letters move to the back.
struct AdmissibleMove {
    MoveKind kind = MoveKind::Cancel;
    std::size_t position = 1;
    /// Relation: replaced subword.  Unused otherwise.
    std::vector<Letter> lhs;
    /// Relation: replacement.  Conjugate: the conjugator c.
    std::vector<Letter> rhs;
    std::string label;

    static AdmissibleMove cancel(std::size_t p) { return {MoveKind::Cancel, p, {}, {}, {}}; }
    static AdmissibleMove commute(std::size_t p) { return {MoveKind::Commute, p, {}, {}, {}}; }
    static AdmissibleMove circular(std::size_t split) { return {MoveKind::Circular, split, {}, {}, {}}; }
    static AdmissibleMove braid(std::size_t p) { return {MoveKind::Braid, p, {}, {}, {}}; }
    static AdmissibleMove relation(std::size_t p, const Word& lhs, const Word& rhs, std::string label);
    static AdmissibleMove conjugate(const Word& conjugator, std::string label);

    /// Cancel, Commute, Braid and Relation preserve the group element.
    bool preserves_element() const noexcept
    {
        return kind != MoveKind::Circular && kind != MoveKind::Conjugate;
    }

    bool operator==(const AdmissibleMove&) const = default;
};

std::string describe_move(const AdmissibleMove& move, int rank);

/// Decides whether two adjacent letters may be swapped by a Commute move.
using CommutePredicate = std::function<bool(const Letter&, const Letter&, int rank)>;

/// Coxeter-matrix commutation only: distinct a_i, a_j with m_ij = 2.
bool coxeter_commute(const Letter& x, const Letter& y, int rank);

/// Throws MoveNotApplicable naming the failed precondition.
Word apply_move(const Word& word, const AdmissibleMove& move,
                const CommutePredicate& commutes = coxeter_commute);

/// All applicable Cancel, Commute, Circular and Braid moves, ordered by kind
/// then position.  Macro moves are never enumerated.
std::vector<AdmissibleMove> enumerate_moves(const Word& word,
                                            const CommutePredicate& commutes = coxeter_commute);

class MoveTrace {
public:
    explicit MoveTrace(Word initial) : initial_(std::move(initial)) {}

    const Word& initial() const noexcept { return initial_; }
    const Word& result() const noexcept { return steps_.empty() ? initial_ : steps_.back().second; }
    const std::vector<std::pair<AdmissibleMove, Word>>& steps() const noexcept { return steps_; }

    /// Applies the move to the current result and records it.
    const Word& apply(const AdmissibleMove& move, const CommutePredicate& commutes = coxeter_commute);

private:
    Word initial_;
    std::vector<std::pair<AdmissibleMove, Word>> steps_;
};

} // namespace aspectra

template <>
struct std::hash<aspectra::Word> {
    std::size_t operator()(const aspectra::Word& w) const noexcept;
};
