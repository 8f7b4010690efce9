#include "aspectra/suites.hpp"

#include "aspectra/affine.hpp"
#include "aspectra/echelon.hpp"
#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"

#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace aspectra {

Json SuiteResult::to_json() const
{
    return Json{{"suite", name}, {"passed", passed()}, {"critical", critical}, {"violations", violations},
                {"details", details}};
}

std::size_t worker_count()
{
    if (const char* env = std::getenv("ASPECTRA_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value >= 1)
            return static_cast<std::size_t>(value);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Runs f(0..count-1) on up to worker_count() threads; results are written by
// index so the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, F f)
{
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t)
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto& thread : threads)
        thread.join();
    if (failure)
        std::rethrow_exception(failure);
}

Word letters(int n, std::initializer_list<int> indices)
{
    Word out(n);
    for (int i : indices)
        out.push_back(Letter::a(i));
    return out;
}

Word block_word(int n, int p, int k)
{
    Word out(n);
    for (int i = p; i <= k; ++i)
        out.push_back(Letter::a(i));
    return out;
}

Word power(const Word& x, int times)
{
    Word out(x.rank());
    for (int t = 0; t < times; ++t)
        out += x;
    return out;
}

Word random_mixed_word(int n, std::size_t min_length, std::size_t max_length, Rng& rng)
{
    Word out(n);
    const auto length = min_length + rng.below(max_length - min_length + 1);
    for (std::size_t i = 0; i < length; ++i) {
        const auto pick = rng.below(static_cast<std::uint64_t>(2 * n + 1));
        if (pick <= static_cast<std::uint64_t>(n))
            out.push_back(Letter::a(static_cast<int>(pick) + 1));
        else
            out.push_back(Letter::g(static_cast<int>(pick) - n, rng.below(2) == 0 ? 1 : -1));
    }
    return out;
}

class RelationChecker {
public:
    explicit RelationChecker(int n) : tits_(tits_rep(n)) {}

    void check(const Word& lhs, const Word& rhs, const std::string& label, SuiteResult& result)
    {
        ++count_;
        const bool affine = eval_word(lhs) == eval_word(rhs);
        const bool tits = tits_.eval(lhs) == tits_.eval(rhs);
        if (!affine || !tits)
            result.violations.push_back("n=" + std::to_string(tits_.rank()) + " " + label + ": '" +
                                        render_word(lhs) + "' vs '" + render_word(rhs) + "' fails in " +
                                        (affine ? "the Tits representation" : "the affine model"));
    }

    void check(const RelationPair& r, SuiteResult& result) { check(r.lhs, r.rhs, r.label, result); }

    std::size_t count() const { return count_; }

private:
    MatrixRep tits_;
    std::size_t count_ = 0;
};

} // namespace

SuiteResult relations_suite(const std::vector<int>& ranks)
{
    SuiteResult result;
    result.name = "relations";
    Json per_rank = Json::object();
    for (int n : ranks) {
        RelationChecker checker(n);
        const Word empty(n);
        for (int i = 1; i <= n + 1; ++i) {
            checker.check(letters(n, {i, i}), empty, "a_i^2 = 1", result);
            for (int j = i + 1; j <= n + 1; ++j) {
                const int order = cycle_adjacent(i, j, n) ? 3 : 2;
                checker.check(power(letters(n, {i, j}), order), empty, "(a_i a_j)^m = 1", result);
            }
        }
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n + 1; ++j) {
                checker.check(rewrite_a_p(i, j, n, PSide::Direct), result);
                checker.check(rewrite_a_p(i, j, n, PSide::Inverse), result);
                for (auto form : {PPForm::Direct, PPForm::InverseBoth, PPForm::Mixed})
                    checker.check(rewrite_p_p(i, j, n, form), result);
            }
        for (int k = 1; k <= n + 1; ++k)
            for (int j = 1; j <= n; ++j)
                for (auto order : {LetterOrder::CoxeterFirst, LetterOrder::LatticeFirst})
                    for (int sign : {1, -1})
                        checker.check(rewrite_a_g(k, j, n, order, sign), result);
        std::size_t block_cases = 0;
        for (int p = 1; p <= n; ++p)
            for (int k = p + 1; k <= std::min(n, p + 3); ++k)
                for (int j = 1; j <= n; ++j) {
                    if (j == p - 1 || j == k + 1)
                        continue;
                    for (auto order : {LetterOrder::CoxeterFirst, LetterOrder::LatticeFirst})
                        for (int sign : {1, -1}) {
                            checker.check(rewrite_block_g(block_word(n, p, k), j, order, sign), result);
                            ++block_cases;
                        }
                }
        per_rank[std::to_string(n)] = Json{{"relations", checker.count()}, {"blockCases", block_cases}};
    }
    result.details["checked"] = per_rank;
    return result;
}

SuiteResult normality_suite(const std::vector<int>& ranks)
{
    SuiteResult result;
    result.name = "normality";
    Json per_rank = Json::object();
    for (int n : ranks) {
        const std::string prefix = "n=" + std::to_string(n) + ": ";
        const MatrixRep tits = tits_rep(n);
        std::size_t checks = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                ++checks;
                const Word ij = g_word(i, n) + g_word(j, n);
                const Word ji = g_word(j, n) + g_word(i, n);
                if (eval_word(ij) != eval_word(ji) || tits.eval(ij) != tits.eval(ji))
                    result.violations.push_back(prefix + "g" + std::to_string(i) + " and g" + std::to_string(j) +
                                                " do not commute");
            }
        for (int k = 1; k <= n + 1; ++k)
            for (int j = 1; j <= n; ++j) {
                ++checks;
                const Word conj = letters(n, {k}) + g_word(j, n) + letters(n, {k});
                if (!quotient_to_finite(eval_word(conj)).is_identity())
                    result.violations.push_back(prefix + "a" + std::to_string(k) + " g" + std::to_string(j) + " a" +
                                                std::to_string(k) + " leaves N");
            }

        // The images of a_1..a_n generate S_{n+1}.
        std::vector<FinitePermutation> generators;
        for (int i = 1; i <= n; ++i)
            generators.push_back(quotient_to_finite(generator_image(i, n)));
        std::set<std::vector<int>> seen{FinitePermutation::identity(n + 1).images()};
        std::deque<FinitePermutation> queue{FinitePermutation::identity(n + 1)};
        while (!queue.empty()) {
            const FinitePermutation s = queue.front();
            queue.pop_front();
            for (const auto& gen : generators) {
                const FinitePermutation t = s * gen;
                if (seen.insert(t.images()).second)
                    queue.push_back(t);
            }
        }
        std::size_t factorial = 1;
        for (int k = 2; k <= n + 1; ++k)
            factorial *= static_cast<std::size_t>(k);
        if (seen.size() != factorial)
            result.violations.push_back(prefix + "a_1..a_n generate " + std::to_string(seen.size()) +
                                        " permutations, expected " + std::to_string(factorial));

        const auto top = generator_image(n + 1, n);
        const auto swap = FinitePermutation::transposition(n + 1, 1, n + 1);
        if (quotient_to_finite(top) != swap)
            result.violations.push_back(prefix + "a_{n+1} does not map to (1, n+1)");
        try {
            coordinates(top * finite_lift(n, swap).inverse());
        } catch (const NotATranslation&) {
            result.violations.push_back(prefix + "a_{n+1} differs from (1, n+1) by a non-translation");
        }
        Word descending(n);
        for (int i = n; i >= 2; --i)
            descending.push_back(Letter::a(i));
        if (eval_word(descending + p_word(n + 1, n) + g_word(n + 1, n)) != top)
            result.violations.push_back(prefix + "a_{n+1} = a_n...a_2 p_{n+1} (p_{n+1}^-1 p_1) fails");

        per_rank[std::to_string(n)] = Json{{"checks", checks}, {"quotientOrder", seen.size()}};
    }
    result.details["checked"] = per_rank;
    return result;
}

namespace {

std::vector<Word> reachable_words(const Word& start)
{
    std::unordered_set<Word> seen{start};
    std::deque<Word> queue{start};
    std::vector<Word> out;
    while (!queue.empty()) {
        Word x = std::move(queue.front());
        queue.pop_front();
        for (const auto& move : enumerate_moves(x)) {
            Word y = apply_move(x, move);
            if (seen.insert(y).second)
                queue.push_back(y);
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool replay(const MoveTrace& trace)
{
    Word current = trace.initial();
    for (const auto& [move, result] : trace.steps()) {
        const Word next = apply_move(current, move, letters_commute);
        if (next != result)
            return false;
        if (move.preserves_element() && eval_word(next) != eval_word(current))
            return false;
        current = next;
    }
    return true;
}

} // namespace

SuiteResult echelon_suite(const std::vector<int>& ranks, std::uint64_t seed, std::size_t random_words,
                          std::size_t max_length)
{
    SuiteResult result;
    result.name = "echelon";
    const auto battery3 = battery(3);
    std::size_t finite_checked = 0;
    std::vector<int> images{1, 2, 3, 4};
    do {
        const FinitePermutation s(images);
        const Word x = reduced_word(3, s);
        const auto traced = a_echelon_traced(x);
        const Word y = traced.form.word();
        const std::string label = "A_3 element '" + render_word(x) + "': ";
        ++finite_checked;
        if (!EchelonForm::recognize(y))
            result.violations.push_back(label + "output '" + render_word(y) + "' is not of echelon shape");
        const auto type = quotient_to_finite(eval_word(y)).cycle_type();
        if (type != s.cycle_type())
            result.violations.push_back(label + "cycle type changed");
        if (y.size() > x.size())
            result.violations.push_back(label + "output is longer than the input");
        if (traced.trace.result() != y || !replay(traced.trace))
            result.violations.push_back(label + "trace does not replay");
        for (const auto& rho : battery3)
            if (character(rho, x) != character(rho, y))
                result.violations.push_back(label + "character differs under " + rho.name());
        bool reached = false;
        for (const Word& z : reachable_words(x))
            if (EchelonForm::recognize(z) && quotient_to_finite(eval_word(z)).cycle_type() == type) {
                reached = true;
                break;
            }
        if (!reached)
            result.violations.push_back(label + "no echelon word of the same cycle type is reachable by moves");
    } while (std::next_permutation(images.begin(), images.end()));

    Rng rng(seed);
    std::vector<std::vector<MatrixRep>> batteries;
    for (int n : ranks)
        batteries.push_back(battery(n));
    std::size_t random_checked = 0;
    for (std::size_t t = 0; t < random_words && !ranks.empty(); ++t) {
        const std::size_t r = t % ranks.size();
        const int n = ranks[r];
        const Word x = random_mixed_word(n, 0, max_length, rng);
        const auto traced = tilde_echelon_traced(x);
        const Word y = traced.form.word();
        const std::string label = "n=" + std::to_string(n) + " word '" + render_word(x) + "': ";
        ++random_checked;
        if (!traced.form.satisfies_invariants())
            result.violations.push_back(label + "output violates the echelon invariants");
        if (traced.trace.result() != y || !replay(traced.trace))
            result.violations.push_back(label + "trace does not replay");
        for (const auto& rho : batteries[r])
            if (character(rho, x) != character(rho, y))
                result.violations.push_back(label + "character differs under " + rho.name());
    }
    result.details = Json{{"finiteElements", finite_checked}, {"randomWords", random_checked},
                          {"maxLength", max_length}, {"seed", seed}};
    return result;
}

namespace {

Matrix random_rational_matrix(std::size_t dim, Rng& rng)
{
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            Rational q(rng.between(-4, 4), rng.between(1, 3));
            q.canonicalize();
            m(r, c) = q;
        }
    return m;
}

void signatures(std::size_t length, unsigned max_weight, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out)
{
    if (current.size() == length) {
        if (std::accumulate(current.begin(), current.end(), 0U) >= 1)
            out.push_back(current);
        return;
    }
    const unsigned used = std::accumulate(current.begin(), current.end(), 0U);
    for (unsigned k = 0; k + used <= max_weight; ++k) {
        current.push_back(k);
        signatures(length, max_weight, current, out);
        current.pop_back();
    }
}

} // namespace

SuiteResult lemma21_suite(std::uint64_t seed, std::size_t tuples, unsigned max_weight,
                          std::vector<PencilCheck>* checks, PitSettings pit)
{
    SuiteResult result;
    result.name = "lemma21";
    Rng rng(seed);
    constexpr std::size_t kTupleSize = 3;
    constexpr std::size_t kDim = 3;
    std::vector<std::vector<unsigned>> sigs;
    std::vector<unsigned> current;
    signatures(kTupleSize, max_weight, current, sigs);
    std::size_t trace_checks = 0;
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Matrix> a;
        for (std::size_t k = 0; k < kTupleSize; ++k)
            a.push_back(random_rational_matrix(kDim, rng));
        const Matrix c = random_invertible(kDim, rng);
        const Matrix c_inv = c.inverse();
        std::vector<Matrix> b;
        for (const Matrix& m : a)
            b.push_back(c_inv * m * c);
        const std::string label = "tuple " + std::to_string(t);
        for (const auto& m : sigs) {
            ++trace_checks;
            if (trace_sum(a, m) != trace_sum(b, m)) {
                std::string sig;
                for (unsigned k : m)
                    sig += (sig.empty() ? "" : ",") + std::to_string(k);
                result.violations.push_back(label + ": trace sums differ for signature (" + sig + ")");
            }
        }
        const bool equal = tuple_divisor(a) == tuple_divisor(b);
        if (!equal)
            result.violations.push_back(label + ": divisors differ");
        if (checks) {
            Rng pit_rng = rng.split();
            checks->push_back({"lemma21 " + label, equal, pit_equal(pencil(a), pencil(b), pit.trials, pit.prime, pit_rng)});
        }
    }
    result.details = Json{{"tuples", tuples}, {"signatures", sigs.size()}, {"traceSumChecks", trace_checks},
                          {"maxWeight", max_weight}, {"seed", seed}};
    return result;
}

namespace {

struct Comparison {
    std::string label;
    MatrixRep r1;
    MatrixRep r2;
    bool expect_equal = true;
    std::uint64_t pit_seed = 0;
    const ProbeSet* set = nullptr;
    const WordBall* ball = nullptr;
    const WordBall* witness_ball = nullptr;
};

struct ComparisonOutcome {
    Report report;
    std::optional<PencilCheck> check;
    bool witness_short = true;
};

} // namespace

SuiteResult theorem52_suite(const Theorem52Options& options, std::uint64_t seed, std::vector<PencilCheck>* checks)
{
    SuiteResult result;
    result.name = options.kind == ProbeKind::K ? "theorem52" : "theorem32";
    Rng rng(seed);

    std::vector<ProbeSet> sets;
    std::vector<WordBall> balls;
    std::vector<WordBall> witness_balls;
    for (int n : options.ranks) {
        sets.push_back(options.kind == ProbeKind::K ? probe_set_K(n) : probe_set_script_K(n));
        balls.push_back(word_ball(n, options.char_budget));
        witness_balls.push_back(word_ball(n, options.witness_budget));
    }

    std::vector<Comparison> jobs;
    for (std::size_t r = 0; r < options.ranks.size(); ++r) {
        const int n = options.ranks[r];
        for (const auto& rho : battery(n))
            for (std::size_t c = 0; options.positive && c < options.conjugators; ++c) {
                const Matrix conj = random_invertible(rho.dim(), rng);
                jobs.push_back({"n=" + std::to_string(n) + " " + rho.name() + " vs conjugate " + std::to_string(c),
                                rho, conjugate(rho, conj), true, rng.next(), &sets[r], &balls[r], nullptr});
            }
        if (n == 2 && options.contrapositive) {
            const std::pair<const char*, const char*> pairs[] = {
                {"sum(perm:trivial,perm:trivial,perm:trivial)", "sum(perm:trivial,perm:standard)"},
                {"sum(perm:sign,perm:sign)", "perm:standard"},
                {"sum(perm:trivial,perm:sign)", "perm:standard"},
            };
            for (const auto& [a, b] : pairs)
                jobs.push_back({"n=2 " + std::string(a) + " vs " + b, parse_rep_spec(a, n), parse_rep_spec(b, n),
                                false, rng.next(), &sets[r], &balls[r], &witness_balls[r]});
        }
    }

    std::vector<ComparisonOutcome> outcomes(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Comparison& job = jobs[i];
        VerifyConfig config;
        config.char_budget = options.char_budget;
        config.limits = options.limits;
        Rng job_rng(job.pit_seed);
        ComparisonOutcome& out = outcomes[i];
        out.report = verify_character_determination(job.r1, job.r2, *job.set, config, job_rng, job.ball);
        if (job.witness_ball) {
            out.witness_short = !compare_characters(job.r1, job.r2, *job.witness_ball).equal;
        }
        if (job.r1.dim() == job.r2.dim())
            out.check = PencilCheck{job.label + " on " + job.set->tag(), out.report.divisor_equal,
                                    pit_equal(pencil(job.r1, *job.set), pencil(job.r2, *job.set), options.pit.trials,
                                              options.pit.prime, job_rng)};
    });

    Json verdicts = Json::array();
    Json critical_dump;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Comparison& job = jobs[i];
        const Report& report = outcomes[i].report;
        verdicts.push_back(Json{{"label", job.label},
                                {"divisorEqual", report.divisor_equal},
                                {"charEqual", report.char_equal},
                                {"wordsChecked", report.words_checked}});
        if (report.critical) {
            result.critical = true;
            result.violations.insert(result.violations.end(), report.violations.begin(), report.violations.end());
            critical_dump = Json{{"label", job.label},
                                                  {"report", report.to_json()},
                                                  {"rep1", job.r1.name()},
                                                  {"rep2", job.r2.name()}};
            break;
        }
        if (job.expect_equal && !(report.divisor_equal && report.char_equal))
            result.violations.push_back(job.label + ": expected equal divisors and characters");
        if (!job.expect_equal) {
            if (report.char_equal || !outcomes[i].witness_short)
                result.violations.push_back(job.label + ": characters do not differ within length " +
                                            std::to_string(options.witness_budget));
            if (report.divisor_equal)
                result.violations.push_back(job.label + ": divisors are equal");
        }
        if (checks && outcomes[i].check)
            checks->push_back(*outcomes[i].check);
    }
    Json set_sizes = Json::object();
    for (const ProbeSet& set : sets)
        set_sizes[set.tag()] = set.words.size();
    Json ball_sizes = Json::object();
    for (const WordBall& ball : balls)
        ball_sizes[std::to_string(ball.rank)] = ball.words.size();
    result.details = Json{{"probeSets", set_sizes}, {"ballSizes", ball_sizes}, {"charBudget", options.char_budget},
                          {"seed", seed}, {"verdicts", verdicts}};
    if (result.critical)
        result.details["criticalDump"] = critical_dump;
    return result;
}

SuiteResult proof_step_suite(const std::vector<int>& ranks, std::uint64_t seed, std::size_t multisets,
                             std::size_t max_total)
{
    SuiteResult result;
    result.name = "proof-step";
    Rng rng(seed);
    Json per_rank = Json::object();
    for (int n : ranks) {
        std::size_t accepted = 0;
        std::size_t arrangements = 0;
        std::size_t attempts = 0;
        std::size_t with_long_block = 0;
        while (accepted < multisets && attempts < 200 * multisets) {
            ++attempts;
            const Word x = random_mixed_word(n, 1, 8, rng);
            const TildeEchelonForm form = tilde_echelon(x);
            const SignatureAlphabet alphabet = k1_alphabet(form);
            const std::size_t total = alphabet.total();
            if (total < 1 || total > max_total)
                continue;
            ++accepted;
            for (const Block& block : form.block_part().blocks())
                if (block.length() >= 3) {
                    ++with_long_block;
                    break;
                }
            const SignatureReport report = signature_conjugacy_check(alphabet, 24, rng);
            arrangements += report.sampled;
            for (const auto& v : report.violations)
                result.violations.push_back("n=" + std::to_string(n) + " from '" + render_word(x) + "': " + v);
        }
        if (accepted < multisets)
            result.violations.push_back("n=" + std::to_string(n) + ": only " + std::to_string(accepted) +
                                        " multisets found");
        per_rank[std::to_string(n)] = Json{{"multisets", accepted}, {"arrangements", arrangements},
                                           {"withLongBlock", with_long_block}};
    }
    result.details = Json{{"ranks", per_rank}, {"maxTotal", max_total}, {"seed", seed}};
    return result;
}

SuiteResult pit_agreement_suite(const std::vector<PencilCheck>& checks, double max_bound)
{
    SuiteResult result;
    result.name = "pit-agreement";
    double worst = 0;
    for (const auto& check : checks) {
        if (check.pit.equal != check.symbolic_equal)
            result.violations.push_back(check.label + ": PIT says " + (check.pit.equal ? "equal" : "unequal") +
                                        ", symbolic says " + (check.symbolic_equal ? "equal" : "unequal"));
        if (check.pit.false_equal_bound > max_bound)
            result.violations.push_back(check.label + ": false-equal bound " +
                                        std::to_string(check.pit.false_equal_bound) + " too large");
        worst = std::max(worst, check.pit.false_equal_bound);
    }
    result.details = Json{{"comparisons", checks.size()}, {"worstBound", worst}, {"maxBound", max_bound}};
    return result;
}

} // namespace aspectra
