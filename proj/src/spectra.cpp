#include "aspectra/spectra.hpp"

#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace aspectra {

namespace {

std::vector<int> index_sequence(const Word& word)
{
    std::vector<int> out;
    for (const Letter& letter : word.letters())
        out.push_back(letter.index);
    return out;
}

bool graded_lex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    const auto ia = index_sequence(a);
    const auto ib = index_sequence(b);
    return ia < ib;
}

void append_lattice_letters(std::vector<Word>& words, int n)
{
    for (int sign : {1, -1})
        for (int j = 1; j <= n; ++j)
            words.push_back(Word(n, {Letter::g(j, sign)}));
}

void enumerate_short_blocks(int n, int start, std::vector<Block>& current, std::vector<Word>& out)
{
    for (int length = 1; length <= 2; ++length) {
        const int end = start + length - 1;
        if (end > n)
            break;
        current.push_back({start, end});
        out.push_back(BlockEchelonForm(n, current).word());
        enumerate_short_blocks(n, end + 2, current, out);
        current.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

Word class_representative(int n, const std::vector<int>& partition)
{
    std::vector<Block> blocks;
    int start = 1;
    for (int part : partition) {
        if (part < 2)
            continue;
        blocks.push_back({start, start + part - 2});
        start += part;
    }
    return BlockEchelonForm(n, blocks).word();
}

void require_unique(const std::vector<Word>& words)
{
    std::unordered_set<AffinePermutation> seen;
    for (const Word& word : words)
        if (!seen.insert(eval_word(word)).second)
            throw RankError("probe set contains the element " + render_word(word) + " twice");
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::string probe_kind_name(ProbeKind kind)
{
    switch (kind) {
    case ProbeKind::K: return "K";
    case ProbeKind::ScriptK: return "scriptK";
    case ProbeKind::Custom: return "custom";
    }
    return "?";
}

std::string ProbeSet::tag() const { return probe_kind_name(kind) + "(" + std::to_string(rank) + ")"; }

Json ProbeSet::to_json() const
{
    Json entries = Json::array();
    for (const Word& word : words)
        entries.push_back(render_word(word));
    return Json{{"kind", probe_kind_name(kind)}, {"n", rank}, {"size", words.size()}, {"words", entries}};
}

ProbeSet probe_set_K(int n)
{
    require_rank(n);
    std::vector<Word> a_part;
    std::vector<Block> current;
    for (int start = 1; start <= n; ++start)
        enumerate_short_blocks(n, start, current, a_part);
    std::sort(a_part.begin(), a_part.end(), graded_lex_less);
    a_part.erase(std::unique(a_part.begin(), a_part.end()), a_part.end());
    append_lattice_letters(a_part, n);
    require_unique(a_part);
    return {n, ProbeKind::K, std::move(a_part)};
}

std::vector<std::vector<int>> partitions(int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_rec(m, m, current, out);
    std::stable_sort(out.begin(), out.end(), [m](const auto& a, const auto& b) {
        const int n = m - 1;
        return graded_lex_less(class_representative(n, a), class_representative(n, b));
    });
    return out;
}

ProbeSet probe_set_script_K(int n)
{
    require_rank(n);
    std::vector<Word> words;
    for (const auto& partition : partitions(n + 1))
        words.push_back(class_representative(n, partition));
    append_lattice_letters(words, n);
    require_unique(words);
    return {n, ProbeKind::ScriptK, std::move(words)};
}

ProbeSet custom_probe_set(int n, std::vector<Word> words)
{
    require_rank(n);
    for (const Word& word : words)
        if (word.rank() != n)
            throw RankError("probe word " + render_word(word) + " has rank " + std::to_string(word.rank()));
    require_unique(words);
    return {n, ProbeKind::Custom, std::move(words)};
}

PolyMatrix pencil(const std::vector<Matrix>& tuple)
{
    if (tuple.empty())
        throw ArityMismatch("pencil needs at least one matrix");
    const std::size_t dim = tuple.front().rows();
    const std::size_t arity = tuple.size();
    PolyMatrix m(dim, arity);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            MultiPoly entry(arity);
            for (std::size_t v = 0; v < arity; ++v) {
                if (tuple[v].rows() != dim || tuple[v].cols() != dim)
                    throw ArityMismatch("pencil matrices differ in shape");
                const Rational& a = tuple[v](r, c);
                if (a != 0) {
                    Exponents e(arity, 0);
                    e[v] = 1;
                    entry.add_term(e, a);
                }
            }
            if (r == c)
                entry.add_term(Exponents(arity, 0), -1);
            m(r, c) = std::move(entry);
        }
    return m;
}

PolyMatrix pencil(const MatrixRep& rho, const ProbeSet& set)
{
    if (rho.rank() != set.rank)
        throw RankError("representation rank " + std::to_string(rho.rank()) + " differs from probe set rank " +
                        std::to_string(set.rank));
    std::vector<Matrix> tuple;
    for (const Word& word : set.words)
        tuple.push_back(rho.eval(word));
    return pencil(tuple);
}

Json SpectralDivisor::to_json() const
{
    return Json{{"probeSet", probe_tag}, {"dim", dim}, {"degree", poly.total_degree()}, {"polynomial", poly.to_json()}};
}

SpectralDivisor pencil_divisor(const MatrixRep& rho, const ProbeSet& set, SymbolicLimits limits)
{
    if (rho.dim() > limits.max_dim || set.words.size() > limits.max_vars)
        throw FeasibilityExceeded("symbolic determinant of dimension " + std::to_string(rho.dim()) + " in " +
                                  std::to_string(set.words.size()) + " variables exceeds the limits (dimension <= " +
                                  std::to_string(limits.max_dim) + ", variables <= " +
                                  std::to_string(limits.max_vars) + "); use --method pit");
    return {det_symbolic(pencil(rho, set)), rho.dim(), set.tag()};
}

MultiPoly tuple_divisor(const std::vector<Matrix>& tuple) { return det_symbolic(pencil(tuple)); }

DivisorComparison compare_divisors(const SpectralDivisor& a, const SpectralDivisor& b)
{
    if (a.probe_tag != b.probe_tag)
        throw ProbeSetMismatch("divisors over different probe sets: " + a.probe_tag + " vs " + b.probe_tag);
    DivisorComparison out;
    out.dim1 = a.dim;
    out.dim2 = b.dim;
    out.degree1 = a.poly.total_degree();
    out.degree2 = b.poly.total_degree();
    out.equal = a.dim == b.dim && a.poly == b.poly;
    return out;
}

bool divisors_equal(const SpectralDivisor& a, const SpectralDivisor& b) { return compare_divisors(a, b).equal; }

Rational trace_sum(const std::vector<Matrix>& tuple, const std::vector<unsigned>& m, unsigned bound)
{
    if (m.size() != tuple.size())
        throw ArityMismatch("signature length differs from the tuple length");
    const unsigned total = std::accumulate(m.begin(), m.end(), 0U);
    if (total > bound)
        throw FeasibilityExceeded("signature weight " + std::to_string(total) + " exceeds the bound " +
                                  std::to_string(bound));
    std::vector<std::size_t> sequence;
    for (std::size_t i = 0; i < m.size(); ++i)
        sequence.insert(sequence.end(), m[i], i);
    if (sequence.empty())
        throw ArityMismatch("trace sums need a signature with |m| >= 1");
    Rational sum = 0;
    do {
        Matrix product = tuple[sequence.front()];
        for (std::size_t k = 1; k < sequence.size(); ++k)
            product = product * tuple[sequence[k]];
        sum += product.trace();
    } while (std::next_permutation(sequence.begin(), sequence.end()));
    return sum;
}

WordBall word_ball(int n, std::size_t max_length)
{
    require_rank(n);
    WordBall ball;
    ball.rank = n;
    std::vector<AffinePermutation> elements{AffinePermutation::identity(n)};
    std::unordered_set<AffinePermutation> seen{elements.front()};
    ball.words.push_back(Word(n));
    ball.parent.push_back(-1);
    std::size_t level_begin = 0;
    for (std::size_t length = 1; length <= max_length; ++length) {
        const std::size_t level_end = ball.words.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (int i = 1; i <= n + 1; ++i) {
                AffinePermutation next = elements[k] * generator_image(i, n);
                if (!seen.insert(next).second)
                    continue;
                Word word = ball.words[k];
                word.push_back(Letter::a(i));
                ball.words.push_back(std::move(word));
                ball.parent.push_back(static_cast<int>(k));
                elements.push_back(std::move(next));
            }
        level_begin = level_end;
    }
    return ball;
}

std::vector<Matrix> ball_images(const MatrixRep& rho, const WordBall& ball)
{
    if (rho.rank() != ball.rank)
        throw RankError("representation rank differs from the word ball rank");
    std::vector<Matrix> images;
    images.reserve(ball.words.size());
    for (std::size_t k = 0; k < ball.words.size(); ++k) {
        if (ball.parent[k] < 0)
            images.push_back(Matrix::identity(rho.dim()));
        else
            images.push_back(images[static_cast<std::size_t>(ball.parent[k])] *
                             rho.image(ball.words[k].letters().back().index));
    }
    return images;
}

CharacterComparison compare_characters(const MatrixRep& r1, const MatrixRep& r2, const WordBall& ball)
{
    CharacterComparison out;
    const auto images1 = ball_images(r1, ball);
    const auto images2 = ball_images(r2, ball);
    for (std::size_t k = 0; k < ball.words.size(); ++k) {
        ++out.words_checked;
        if (images1[k].trace() != images2[k].trace()) {
            out.equal = false;
            out.witness = ball.words[k];
            break;
        }
    }
    return out;
}

std::string method_name(Method method) { return method == Method::Symbolic ? "symbolic" : "pit"; }

Json Report::to_json(bool timings) const
{
    Json j{{"probeSet", probe_tag},
           {"dims", {dim1, dim2}},
           {"divisorEqual", divisor_equal},
           {"method", method_name(method)},
           {"charBudget", char_budget},
           {"charEqual", char_equal},
           {"wordsChecked", words_checked},
           {"charWitness", char_witness ? Json(render_word(*char_witness)) : Json(nullptr)}};
    if (pit)
        j["pit"] = Json{{"equal", pit->equal},
                        {"trials", pit->trials},
                        {"prime", pit->prime},
                        {"falseEqualBound", pit->false_equal_bound}};
    j["violations"] = violations;
    j["critical"] = critical;
    if (timings)
        j["timings"] = Json{{"divisorSeconds", divisor_seconds}, {"characterSeconds", character_seconds}};
    return j;
}

Report verify_character_determination(const MatrixRep& r1, const MatrixRep& r2, const ProbeSet& set,
                                      const VerifyConfig& config, Rng& rng, const WordBall* ball)
{
    if (r1.rank() != r2.rank() || r1.rank() != set.rank)
        throw RankError("representations and probe set must share one rank");
    Report report;
    report.probe_tag = set.tag();
    report.dim1 = r1.dim();
    report.dim2 = r2.dim();
    report.method = config.method;
    report.char_budget = config.char_budget;

    auto start = std::chrono::steady_clock::now();
    if (config.method == Method::Symbolic) {
        const SpectralDivisor d1 = pencil_divisor(r1, set, config.limits);
        const SpectralDivisor d2 = pencil_divisor(r2, set, config.limits);
        report.divisor_equal = divisors_equal(d1, d2);
    } else if (r1.dim() != r2.dim()) {
        report.divisor_equal = false;
    } else {
        report.pit = pit_equal(pencil(r1, set), pencil(r2, set), config.pit_trials, config.pit_prime, rng);
        report.divisor_equal = report.pit->equal;
    }
    report.divisor_seconds = seconds_since(start);

    start = std::chrono::steady_clock::now();
    std::optional<WordBall> own_ball;
    if (ball == nullptr || ball->rank != r1.rank() ||
        (!ball->words.empty() && ball->words.back().size() > config.char_budget)) {
        own_ball = word_ball(r1.rank(), config.char_budget);
        ball = &*own_ball;
    }
    const CharacterComparison chars = compare_characters(r1, r2, *ball);
    report.char_equal = chars.equal;
    report.char_witness = chars.witness;
    report.words_checked = chars.words_checked;
    report.character_seconds = seconds_since(start);

    if (report.divisor_equal && !report.char_equal) {
        report.critical = true;
        report.violations.push_back("CRITICAL: divisors equal on " + report.probe_tag + " but characters of " +
                                    r1.name() + " and " + r2.name() + " differ at '" +
                                    render_word(*chars.witness) + "'");
    }
    return report;
}

std::size_t SignatureAlphabet::total() const
{
    return std::accumulate(multiplicity.begin(), multiplicity.end(), std::size_t{0});
}

SignatureAlphabet k1_alphabet(const TildeEchelonForm& form)
{
    const int n = form.rank();
    SignatureAlphabet out;
    out.rank = n;
    out.source = form.word();
    auto add = [&out](Word word, unsigned count) {
        out.letters.push_back(std::move(word));
        out.multiplicity.push_back(count);
    };
    auto block_word = [n](int p, int k) {
        Word word(n);
        for (int i = p; i <= k; ++i)
            word.push_back(Letter::a(i));
        return word;
    };

    Word s(n);
    for (const Block& block : form.block_part().blocks()) {
        if (block.length() < 3) {
            s += block_word(block.start, block.end);
            continue;
        }
        s += block_word(block.start, block.start + 1);
        add(std::move(s), 1);
        for (int i = block.start + 2; i < block.end; ++i)
            add(Word(n, {Letter::a(i)}), 1);
        s = Word(n, {Letter::a(block.end)});
    }
    if (!s.empty())
        add(std::move(s), 1);
    for (int j = 1; j <= n; ++j) {
        const std::int64_t l = form.lattice_part()[j];
        if (l != 0)
            add(Word(n, {Letter::g(j, l > 0 ? 1 : -1)}), static_cast<unsigned>(l > 0 ? l : -l));
    }
    return out;
}

Json SignatureReport::to_json() const
{
    return Json{{"exhaustive", exhaustive}, {"sampled", sampled}, {"violations", violations}};
}

SignatureReport signature_conjugacy_check(const SignatureAlphabet& alphabet, std::size_t samples, Rng& rng)
{
    SignatureReport report;
    const int n = alphabet.rank;
    const auto reps = battery(n);

    std::unordered_set<AffinePermutation> k_elements;
    for (const Word& word : probe_set_K(n).words)
        k_elements.insert(eval_word(word));
    for (const Word& letter : alphabet.letters)
        if (!k_elements.contains(eval_word(letter)))
            report.violations.push_back("alphabet element '" + render_word(letter) + "' is not in K(" +
                                        std::to_string(n) + ")");

    std::vector<Rational> expected;
    for (const auto& rho : reps)
        expected.push_back(character(rho, alphabet.source));

    std::vector<std::size_t> sequence;
    for (std::size_t i = 0; i < alphabet.letters.size(); ++i)
        sequence.insert(sequence.end(), alphabet.multiplicity[i], i);
    if (sequence.empty())
        return report;

    auto check = [&](const std::vector<std::size_t>& arrangement) {
        Word word(n);
        for (std::size_t idx : arrangement)
            word += alphabet.letters[idx];
        ++report.sampled;
        for (std::size_t r = 0; r < reps.size(); ++r)
            if (character(reps[r], word) != expected[r]) {
                report.violations.push_back("arrangement '" + render_word(word) + "' differs from '" +
                                            render_word(alphabet.source) + "' under " + reps[r].name());
                return;
            }
    };

    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> current = sequence;
    std::sort(current.begin(), current.end());
    do {
        all.push_back(current);
        if (all.size() > samples)
            break;
    } while (std::next_permutation(current.begin(), current.end()));

    if (all.size() <= samples) {
        for (const auto& arrangement : all)
            check(arrangement);
    } else {
        report.exhaustive = false;
        for (std::size_t t = 0; t < samples; ++t) {
            current = sequence;
            for (std::size_t i = current.size(); i > 1; --i)
                std::swap(current[i - 1], current[rng.below(i)]);
            check(current);
        }
    }
    return report;
}

} // namespace aspectra
