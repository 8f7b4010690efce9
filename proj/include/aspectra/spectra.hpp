#pragma once

// Probe sets, pencil determinants det(x_1 rho(w_1) + ... + x_k rho(w_k) - I),
// and the checks relating equal determinants to equal characters.

#include "aspectra/affine.hpp"
#include "aspectra/echelon.hpp"
#include "aspectra/json.hpp"
#include "aspectra/poly.hpp"
#include "aspectra/reps.hpp"
#include "aspectra/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aspectra {

enum class ProbeKind { K, ScriptK, Custom };

std::string probe_kind_name(ProbeKind kind);

struct ProbeSet {
    int rank = 2;
    ProbeKind kind = ProbeKind::Custom;
    /// Variable x_{i+1} belongs to words[i].
    std::vector<Word> words;

    /// "K(n)", "scriptK(n)" or "custom(n)".
    std::string tag() const;
    Json to_json() const;
    bool operator==(const ProbeSet&) const = default;
};

/// Block echelon words over a_1..a_n with blocks of length 1 or 2 (graded-lex
/// order of their index sequences), then g_1..g_n, then g_1^-1..g_n^-1.
ProbeSet probe_set_K(int n);
/// One block echelon word per partition of n+1 (the empty word for the
/// identity class), then g_1..g_n and their inverses.
ProbeSet probe_set_script_K(int n);
/// Throws RankError on duplicate elements or mixed ranks.
ProbeSet custom_probe_set(int n, std::vector<Word> words);

/// The partition of n+1 whose class a representative of probe_set_script_K
/// stands for, in the same order as the representatives.
std::vector<std::vector<int>> partitions(int m);

struct SymbolicLimits {
    std::size_t max_dim = 10;
    std::size_t max_vars = 10;
};

/// sum_i x_i A_i - I.
PolyMatrix pencil(const std::vector<Matrix>& tuple);
PolyMatrix pencil(const MatrixRep& rho, const ProbeSet& set);

struct SpectralDivisor {
    MultiPoly poly;
    std::size_t dim = 0;
    std::string probe_tag;

    Json to_json() const;
};

/// Throws FeasibilityExceeded beyond the symbolic limits.
SpectralDivisor pencil_divisor(const MatrixRep& rho, const ProbeSet& set, SymbolicLimits limits = {});
MultiPoly tuple_divisor(const std::vector<Matrix>& tuple);

struct DivisorComparison {
    bool equal = false;
    std::size_t dim1 = 0;
    std::size_t dim2 = 0;
    int degree1 = 0;
    int degree2 = 0;
};

/// Throws ProbeSetMismatch when the divisors come from different probe sets.
DivisorComparison compare_divisors(const SpectralDivisor& a, const SpectralDivisor& b);
bool divisors_equal(const SpectralDivisor& a, const SpectralDivisor& b);

/// Sum of Tr(A_{j_1} ... A_{j_k}) over the distinct arrangements of the
/// multiset with multiplicities m.  Throws FeasibilityExceeded if |m| > bound
/// and ArityMismatch if m and the tuple differ in length.
Rational trace_sum(const std::vector<Matrix>& tuple, const std::vector<unsigned>& m, unsigned bound = 6);

/// All elements of length <= max_length in a_1..a_{n+1}, one shortest word
/// each, in breadth-first order.  parent[i] is the entry whose word is
/// words[i] minus its last letter (-1 for the empty word).
struct WordBall {
    int rank = 2;
    std::vector<Word> words;
    std::vector<int> parent;
};

WordBall word_ball(int n, std::size_t max_length);
/// rho of every ball element, built incrementally along parents.
std::vector<Matrix> ball_images(const MatrixRep& rho, const WordBall& ball);

struct CharacterComparison {
    bool equal = true;
    std::size_t words_checked = 0;
    /// First ball word (in ball order) where the characters differ.
    std::optional<Word> witness;
};

CharacterComparison compare_characters(const MatrixRep& r1, const MatrixRep& r2, const WordBall& ball);

enum class Method { Symbolic, Pit };

std::string method_name(Method method);

struct VerifyConfig {
    Method method = Method::Symbolic;
    std::size_t char_budget = 8;
    std::size_t pit_trials = 4;
    std::uint64_t pit_prime = (std::uint64_t{1} << 61) - 1;
    SymbolicLimits limits{};
    bool timings = false;
};

struct Report {
    std::string probe_tag;
    std::size_t dim1 = 0;
    std::size_t dim2 = 0;
    Method method = Method::Symbolic;
    bool divisor_equal = false;
    std::size_t char_budget = 0;
    bool char_equal = false;
    std::optional<Word> char_witness;
    std::size_t words_checked = 0;
    std::optional<PitResult> pit;
    std::vector<std::string> violations;
    bool critical = false;
    double divisor_seconds = 0;
    double character_seconds = 0;

    bool consistent() const { return violations.empty(); }
    Json to_json(bool timings = false) const;
};

/// Compares the divisors on the probe set and the characters on the ball of
/// the configured radius; divisors equal with characters unequal is a
/// CRITICAL violation.  The ball may be passed in to share it across calls.
Report verify_character_determination(const MatrixRep& r1, const MatrixRep& r2, const ProbeSet& set,
                                      const VerifyConfig& config, Rng& rng, const WordBall* ball = nullptr);

/// The alphabet K_1 built from an A~-echelon form, with multiplicities: the
/// s-words and single letters once each, g_j^{sign l_j} |l_j| times.
struct SignatureAlphabet {
    int rank = 2;
    std::vector<Word> letters;
    std::vector<unsigned> multiplicity;
    /// The form the alphabet was built from (its word is one arrangement).
    Word source = Word(2);

    std::size_t total() const;
};

SignatureAlphabet k1_alphabet(const TildeEchelonForm& form);

struct SignatureReport {
    /// Whether every distinct arrangement was checked.
    bool exhaustive = true;
    std::size_t sampled = 0;
    std::vector<std::string> violations;
    bool consistent() const { return violations.empty(); }
    Json to_json() const;
};

/// Checks that arrangements of the multiset have the battery characters of
/// the source word.  All distinct arrangements are checked when there are at
/// most `samples` of them, otherwise `samples` random ones.
SignatureReport signature_conjugacy_check(const SignatureAlphabet& alphabet, std::size_t samples, Rng& rng);

} // namespace aspectra
