#include "aspectra/affine.hpp"
#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"
#include "aspectra/rng.hpp"

#include <doctest.h>

using namespace aspectra;

namespace {

Word random_word(int n, std::size_t max_len, Rng& rng)
{
    Word out(n);
    const auto len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(Letter::a(static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1))) + 1));
    return out;
}

} // namespace

TEST_CASE("generator windows")
{
    CHECK(generator_image(1, 2).window() == std::vector<std::int64_t>{2, 1, 3});
    CHECK(generator_image(3, 2).window() == std::vector<std::int64_t>{0, 2, 4});
    CHECK(eval_word(Word(3)).window() == std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("window invariants are enforced")
{
    CHECK_THROWS_AS(AffinePermutation(2, {1, 2, 2}), RankError);
    CHECK_THROWS_AS(AffinePermutation(2, {1, 2, 6}), RankError);
    CHECK_NOTHROW(AffinePermutation(2, {4, 2, 0}));
}

TEST_CASE("Coxeter relations hold in the affine model")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n + 1; ++i) {
            const auto ai = generator_image(i, n);
            CHECK((ai * ai).is_identity());
            for (int j = i + 1; j <= n + 1; ++j) {
                auto prod = ai * generator_image(j, n);
                const int order = cycle_adjacent(i, j, n) ? 3 : 2;
                auto power = AffinePermutation::identity(n);
                for (int k = 0; k < order; ++k) {
                    CHECK((k == 0 || !power.is_identity()));
                    power = power * prod;
                }
                CHECK(power.is_identity());
            }
        }
}

TEST_CASE("quotient to S_{n+1}")
{
    for (int n = 2; n <= 5; ++n) {
        CHECK(quotient_to_finite(generator_image(n + 1, n)) == FinitePermutation::transposition(n + 1, 1, n + 1));
        for (int j = 1; j <= n; ++j)
            CHECK(quotient_to_finite(eval_word(g_word(j, n))).is_identity());
    }
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Word u = random_word(3, 10, rng);
        const Word v = random_word(3, 10, rng);
        CHECK(quotient_to_finite(eval_word(u + v)) ==
              quotient_to_finite(eval_word(u)) * quotient_to_finite(eval_word(v)));
        CHECK(eval_word(u + v) == eval_word(u) * eval_word(v));
        CHECK((eval_word(u) * eval_word(u).inverse()).is_identity());
    }
}

TEST_CASE("g_1 is a nontrivial translation")
{
    const Word g1 = parse_word("a3 a2 a3 a1", 2);
    CHECK(g_word(1, 2) == g1);
    const auto t = eval_word(g1);
    CHECK(quotient_to_finite(t).is_identity());
    CHECK(!translation_vector(t).is_zero());
}

TEST_CASE("translation vectors")
{
    CHECK(translation_vector(AffinePermutation::identity(3)).is_zero());
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j) {
            TranslationVector expected{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)};
            expected.coords[static_cast<std::size_t>(j - 1)] = 1;
            expected.coords[static_cast<std::size_t>(j)] = -1;
            CHECK(translation_vector(eval_word(g_word(j, n))) == expected);
        }
    const auto g1 = eval_word(g_word(1, 3));
    const auto g2 = eval_word(g_word(2, 3));
    CHECK(translation_vector(g1 * g2) == translation_vector(g1) + translation_vector(g2));
    CHECK(translation(3, translation_vector(g1 * g2)) == g1 * g2);
}

TEST_CASE("conjugation permutes translation vectors")
{
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const auto x = eval_word(random_word(n, 8, rng));
        const auto t = eval_word(g_word(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))), n));
        const auto conj = x * t * x.inverse();
        CHECK(quotient_to_finite(conj).is_identity());
        CHECK(translation_vector(conj) == translation_vector(t).permuted(quotient_to_finite(x)));
    }
}

TEST_CASE("finite permutations")
{
    const FinitePermutation s({2, 3, 1, 5, 4});
    CHECK(s.cycle_type() == std::vector<int>{3, 2});
    CHECK(s.cycles() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(s.sign() == -1);
    CHECK((s * s.inverse()).is_identity());
    CHECK(FinitePermutation::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(FinitePermutation({1, 1, 2}), RankError);
}

TEST_CASE("reduced words lift finite permutations")
{
    std::vector<int> images{1, 2, 3, 4};
    do {
        const FinitePermutation s(images);
        const Word x = reduced_word(3, s);
        CHECK(x.finite_alphabet());
        CHECK(quotient_to_finite(eval_word(x)) == s);
        CHECK(eval_word(x) == finite_lift(3, s));
        int inversions = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                inversions += images[i] > images[j];
        CHECK(static_cast<int>(x.size()) == inversions);
    } while (std::next_permutation(images.begin(), images.end()));
}
