#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner.  Each returns its violations and a JSON summary.

#include "aspectra/json.hpp"
#include "aspectra/poly.hpp"
#include "aspectra/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aspectra {

struct SuiteResult {
    std::string name;
    std::vector<std::string> violations;
    Json details = Json::object();
    bool critical = false;

    bool passed() const { return violations.empty(); }
    Json to_json() const;
};

/// One pencil comparison decided both symbolically and by PIT.
struct PencilCheck {
    std::string label;
    bool symbolic_equal = false;
    PitResult pit;
};

struct PitSettings {
    std::size_t trials = 4;
    std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
};

/// Worker count from ASPECTRA_THREADS (default: hardware concurrency).
std::size_t worker_count();

/// Coxeter relations and every tabulated relation between a_i, p_j and g_j,
/// each checked in the affine model and in the Tits representation.
SuiteResult relations_suite(const std::vector<int>& ranks);

/// N abelian and normal; a_1..a_n generate S_{n+1} in the quotient and
/// a_{n+1} maps to the transposition (1, n+1) modulo N.
SuiteResult normality_suite(const std::vector<int>& ranks);

/// All 24 elements of A_3 through a_echelon, then `random_words` seeded words
/// over the given ranks through tilde_echelon.
SuiteResult echelon_suite(const std::vector<int>& ranks, std::uint64_t seed, std::size_t random_words = 500,
                          std::size_t max_length = 12);

/// Random 3x3 rational tuples against simultaneous conjugates: equal trace
/// sums for every signature up to `max_weight`, equal divisors.
SuiteResult lemma21_suite(std::uint64_t seed, std::size_t tuples = 20, unsigned max_weight = 4,
                          std::vector<PencilCheck>* checks = nullptr, PitSettings pit = {});

struct Theorem52Options {
    ProbeKind kind = ProbeKind::K;
    std::vector<int> ranks{2, 3};
    std::size_t conjugators = 5;
    std::size_t char_budget = 8;
    /// Radius within which unequal characters must already differ.
    std::size_t witness_budget = 4;
    SymbolicLimits limits{10, 12};
    PitSettings pit{};
    bool positive = true;
    bool contrapositive = true;
};

/// Battery representations against rational conjugates (divisors and
/// characters equal), and for n = 2 the inequivalent equal-dimension pairs
/// (characters differ, so divisors must differ).  details["verdicts"] lists
/// one {label, divisorEqual, charEqual} per comparison.
SuiteResult theorem52_suite(const Theorem52Options& options, std::uint64_t seed,
                            std::vector<PencilCheck>* checks = nullptr);

/// Arrangements of K_1 multisets drawn from A~-echelon forms of seeded random
/// words, keeping those with 1 <= |m| <= max_total.
SuiteResult proof_step_suite(const std::vector<int>& ranks, std::uint64_t seed, std::size_t multisets = 100,
                             std::size_t max_total = 4);

/// PIT and symbolic verdicts agree and every bound is at most max_bound.
SuiteResult pit_agreement_suite(const std::vector<PencilCheck>& checks, double max_bound = 1e-60);

} // namespace aspectra
