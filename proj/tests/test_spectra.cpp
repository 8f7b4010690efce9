#include "aspectra/affine.hpp"
#include "aspectra/echelon.hpp"
#include "aspectra/error.hpp"
#include "aspectra/modular.hpp"
#include "aspectra/spectra.hpp"

#include <doctest.h>

#include <map>
#include <numeric>

using namespace aspectra;

namespace {

Word w(const char* text, int n) { return parse_word(text, n); }

std::vector<std::string> rendered(const ProbeSet& set)
{
    std::vector<std::string> out;
    for (const Word& word : set.words)
        out.push_back(render_word(word));
    return out;
}

MultiPoly x(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
MultiPoly one(std::size_t arity) { return MultiPoly::constant(arity, 1); }

Matrix random_matrix(std::size_t dim, Rng& rng)
{
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            m(r, c) = rng.between(-3, 3);
    return m;
}

// Every signature of the given length with weight between 1 and max_weight.
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

std::vector<Matrix> images(const MatrixRep& rho, const ProbeSet& set)
{
    std::vector<Matrix> out;
    for (const Word& word : set.words)
        out.push_back(rho.eval(word));
    return out;
}

} // namespace

TEST_CASE("probe set K")
{
    const ProbeSet k2 = probe_set_K(2);
    CHECK(rendered(k2) == std::vector<std::string>{"a1", "a2", "a1 a2", "g1", "g2", "g1^-1", "g2^-1"});
    const ProbeSet k3 = probe_set_K(3);
    CHECK(k3.words.size() == 12);
    CHECK(rendered(k3) == std::vector<std::string>{"a1", "a2", "a3", "a1 a2", "a1 a3", "a2 a3", "g1", "g2", "g3",
                                                   "g1^-1", "g2^-1", "g3^-1"});
    for (int n = 2; n <= 6; ++n)
        for (const Word& word : probe_set_K(n).words)
            if (word.finite_alphabet()) {
                const auto e = EchelonForm::recognize(word);
                REQUIRE(e.has_value());
                for (const Block& block : e->blocks())
                    CHECK(block.length() <= 2);
            }
    CHECK(k3.tag() == "K(3)");
}

TEST_CASE("probe set scriptK")
{
    const ProbeSet s2 = probe_set_script_K(2);
    CHECK(rendered(s2) == std::vector<std::string>{"", "a1", "a1 a2", "g1", "g2", "g1^-1", "g2^-1"});
    for (int n = 2; n <= 5; ++n) {
        const ProbeSet s = probe_set_script_K(n);
        const auto parts = partitions(n + 1);
        REQUIRE(s.words.size() == parts.size() + 2 * static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto type = quotient_to_finite(eval_word(s.words[i])).cycle_type();
            CHECK(type == parts[i]);
        }
    }
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(6).size() == 11);
}

TEST_CASE("custom probe sets reject duplicates")
{
    CHECK_THROWS_AS(custom_probe_set(2, {w("a1 a2 a1", 2), w("a2 a1 a2", 2)}), RankError);
    CHECK_NOTHROW(custom_probe_set(2, {w("a1", 2), w("a2", 2)}));
}

TEST_CASE("pencil divisor examples")
{
    const ProbeSet k = probe_set_K(2);
    const auto trivial = perm_quotient_rep(2, QuotientRep::Trivial);
    const auto d = pencil_divisor(trivial, k);
    MultiPoly expected = -one(7);
    for (std::size_t i = 0; i < 7; ++i)
        expected += x(7, i);
    CHECK(d.poly == expected);

    const ProbeSet a12 = custom_probe_set(2, {w("a1", 2), w("a2", 2)});
    const auto sign = perm_quotient_rep(2, QuotientRep::Sign);
    CHECK(pencil_divisor(sign, a12).poly == -x(2, 0) - x(2, 1) - one(2));

    const auto standard = perm_quotient_rep(2, QuotientRep::Standard);
    const MultiPoly s = pencil_divisor(standard, a12).poly;
    CHECK(s.total_degree() == 2);
    CHECK(s.constant_term() == 1);
    // 2x2 oracle: det(P) = p00 p11 - p01 p10.
    const PolyMatrix p = pencil(standard, a12);
    CHECK(s == p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0));
}

TEST_CASE("constant term law and degree bound")
{
    for (int n = 2; n <= 3; ++n) {
        SymbolicLimits limits{10, 12};
        for (const ProbeSet& set : {probe_set_K(n), probe_set_script_K(n)})
            for (const auto& rho : battery(n)) {
                const auto d = pencil_divisor(rho, set, limits);
                CHECK(d.poly.constant_term() == (rho.dim() % 2 == 0 ? 1 : -1));
                CHECK(d.poly.total_degree() <= static_cast<int>(rho.dim()));
            }
    }
}

TEST_CASE("feasibility limits")
{
    const auto tits = tits_rep(3);
    CHECK_THROWS_AS(pencil_divisor(tits, probe_set_K(3)), FeasibilityExceeded);
    CHECK_NOTHROW(pencil_divisor(tits, probe_set_K(3), {10, 12}));
    const auto regular = perm_quotient_rep(3, QuotientRep::Regular);
    CHECK_THROWS_AS(pencil_divisor(regular, probe_set_script_K(3)), FeasibilityExceeded);
}

TEST_CASE("divisor comparison")
{
    const ProbeSet a1 = custom_probe_set(2, {w("a1", 2)});
    const auto trivial = perm_quotient_rep(2, QuotientRep::Trivial);
    const auto sign = perm_quotient_rep(2, QuotientRep::Sign);
    const auto dt = pencil_divisor(trivial, a1);
    CHECK(divisors_equal(dt, dt));
    CHECK(!divisors_equal(dt, pencil_divisor(sign, a1)));
    CHECK_THROWS_AS(divisors_equal(dt, pencil_divisor(trivial, probe_set_K(2))), ProbeSetMismatch);

    const auto cmp = compare_divisors(pencil_divisor(tits_rep(2), probe_set_K(2)), pencil_divisor(trivial, probe_set_K(2)));
    CHECK(!cmp.equal);
    CHECK(cmp.dim1 == 3);
    CHECK(cmp.dim2 == 1);

    Rng rng(4);
    for (const auto& rho : battery(2)) {
        const auto conj = conjugate(rho, random_invertible(rho.dim(), rng));
        CHECK(divisors_equal(pencil_divisor(rho, probe_set_K(2)), pencil_divisor(conj, probe_set_K(2))));
    }
}

TEST_CASE("subset monotonicity by specialization")
{
    Rng rng(6);
    const ProbeSet k = probe_set_K(2);
    const std::vector<std::size_t> keep{0, 2, 5};
    std::vector<Word> sub_words;
    for (std::size_t i : keep)
        sub_words.push_back(k.words[i]);
    const ProbeSet sub = custom_probe_set(2, sub_words);
    for (const auto& rho : battery(2)) {
        const auto conj = conjugate(rho, random_invertible(rho.dim(), rng));
        const auto full1 = pencil_divisor(rho, k);
        const auto full2 = pencil_divisor(conj, k);
        REQUIRE(divisors_equal(full1, full2));
        CHECK(full1.poly.restrict_to(keep) == pencil_divisor(rho, sub).poly);
        CHECK(full2.poly.restrict_to(keep) == pencil_divisor(conj, sub).poly);
    }
}

TEST_CASE("trace sums")
{
    Rng rng(10);
    const Matrix a = random_matrix(3, rng);
    const Matrix b = random_matrix(3, rng);
    CHECK(trace_sum({a, b}, {1, 0}) == a.trace());
    CHECK(trace_sum({a, b}, {2, 1}) == 3 * (a * a * b).trace());
    CHECK(trace_sum({a, b}, {1, 1}) == 2 * (a * b).trace());
    CHECK_THROWS_AS(trace_sum({a, b}, {4, 3}), FeasibilityExceeded);
    CHECK_THROWS_AS(trace_sum({a, b}, {1}), ArityMismatch);
    CHECK_THROWS_AS(trace_sum({a, b}, {0, 0}), ArityMismatch);

    const Matrix c = random_invertible(3, rng);
    const Matrix ci = c.inverse();
    const std::vector<Matrix> tuple{a, b, random_matrix(3, rng)};
    std::vector<Matrix> conj;
    for (const Matrix& m : tuple)
        conj.push_back(ci * m * c);
    std::vector<std::vector<unsigned>> sigs;
    std::vector<unsigned> current;
    signatures(3, 4, current, sigs);
    for (const auto& m : sigs)
        CHECK(trace_sum(tuple, m) == trace_sum(conj, m));
}

TEST_CASE("equal divisors give equal trace sums")
{
    // Pairs of battery representations of dimension <= 3 with equal divisors
    // on K(2), including every pair of a representation and a conjugate.
    Rng rng(13);
    const ProbeSet k = probe_set_K(2);
    std::vector<MatrixRep> reps;
    for (const auto& rho : battery(2))
        if (rho.dim() <= 3) {
            reps.push_back(rho);
            reps.push_back(conjugate(rho, random_invertible(rho.dim(), rng)));
        }
    std::vector<std::vector<unsigned>> sigs;
    std::vector<unsigned> current;
    signatures(k.words.size(), 4, current, sigs);
    int pairs = 0;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (reps[i].dim() != reps[j].dim())
                continue;
            if (!divisors_equal(pencil_divisor(reps[i], k), pencil_divisor(reps[j], k)))
                continue;
            ++pairs;
            const auto t1 = images(reps[i], k);
            const auto t2 = images(reps[j], k);
            for (const auto& m : sigs)
                CHECK(trace_sum(t1, m) == trace_sum(t2, m));
        }
    CHECK(pairs >= 4);
}

TEST_CASE("word ball matches a search in the Tits representation")
{
    for (int n = 2; n <= 3; ++n) {
        const auto tits = tits_rep(n);
        for (std::size_t radius = 0; radius <= 5; ++radius) {
            const WordBall ball = word_ball(n, radius);
            // Independent count: distinct Tits matrices of words of length <= radius.
            std::vector<Matrix> frontier{Matrix::identity(static_cast<std::size_t>(n + 1))};
            std::vector<Matrix> all = frontier;
            for (std::size_t len = 1; len <= radius; ++len) {
                std::vector<Matrix> next;
                for (const Matrix& m : frontier)
                    for (int i = 1; i <= n + 1; ++i) {
                        Matrix p = m * tits.image(i);
                        if (std::find(all.begin(), all.end(), p) == all.end()) {
                            all.push_back(p);
                            next.push_back(std::move(p));
                        }
                    }
                frontier = std::move(next);
            }
            CHECK(ball.words.size() == all.size());
            const auto imgs = ball_images(tits, ball);
            for (std::size_t k = 0; k < ball.words.size(); ++k)
                CHECK(imgs[k] == tits.eval(ball.words[k]));
        }
    }
}

TEST_CASE("verify_character_determination")
{
    Rng rng(21);
    const ProbeSet k = probe_set_K(2);
    const VerifyConfig config;
    const WordBall ball = word_ball(2, 8);

    const auto tits = tits_rep(2);
    auto report = verify_character_determination(tits, tits, k, config, rng, &ball);
    CHECK(report.divisor_equal);
    CHECK(report.char_equal);
    CHECK(report.consistent());

    const auto t3 = parse_rep_spec("sum(perm:trivial,perm:trivial,perm:trivial)", 2);
    const auto ts = parse_rep_spec("sum(perm:trivial,perm:standard)", 2);
    report = verify_character_determination(t3, ts, k, config, rng, &ball);
    CHECK(!report.char_equal);
    CHECK(!report.divisor_equal);
    CHECK(report.consistent());
    REQUIRE(report.char_witness.has_value());
    CHECK(report.char_witness->size() <= 4);

    const auto conj = conjugate(tits, random_invertible(3, rng));
    report = verify_character_determination(tits, conj, k, config, rng, &ball);
    CHECK(report.divisor_equal);
    CHECK(report.char_equal);

    VerifyConfig pit = config;
    pit.method = Method::Pit;
    report = verify_character_determination(tits, conj, k, pit, rng, &ball);
    CHECK(report.divisor_equal);
    REQUIRE(report.pit.has_value());
    CHECK(report.pit->false_equal_bound <= 1e-60);
    report = verify_character_determination(t3, ts, k, pit, rng, &ball);
    CHECK(!report.divisor_equal);

    const Json j = report.to_json();
    CHECK(j.contains("probeSet"));
    CHECK(j.contains("violations"));
    CHECK(!j.contains("timings"));
    CHECK(report.to_json(true).contains("timings"));
}

TEST_CASE("K1 alphabets")
{
    const TildeEchelonForm form(BlockEchelonForm(2, {{1, 2}}), LatticeElement{{2, 0}});
    const auto alphabet = k1_alphabet(form);
    REQUIRE(alphabet.letters.size() == 2);
    CHECK(alphabet.letters[0] == w("a1 a2", 2));
    CHECK(alphabet.letters[1] == w("g1", 2));
    CHECK(alphabet.multiplicity == std::vector<unsigned>{1, 2});
    Rng rng(1);
    const auto report = signature_conjugacy_check(alphabet, 50, rng);
    CHECK(report.consistent());
    CHECK(report.exhaustive);
    CHECK(report.sampled == 3);

    const TildeEchelonForm single(BlockEchelonForm(3, {{2, 2}}), LatticeElement{{0, 0, 0}});
    CHECK(signature_conjugacy_check(k1_alphabet(single), 50, rng).consistent());

    const TildeEchelonForm long_block(BlockEchelonForm(5, {{1, 4}}), LatticeElement{{-1, 0, 0, 0, 1}});
    const auto a5 = k1_alphabet(long_block);
    std::vector<std::string> names;
    for (const Word& letter : a5.letters)
        names.push_back(render_word(letter));
    CHECK(names == std::vector<std::string>{"a1 a2", "a3", "a4", "g1^-1", "g5"});
}
