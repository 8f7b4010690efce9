#include "aspectra/affine.hpp"
#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"
#include "aspectra/reps.hpp"

#include <doctest.h>

using namespace aspectra;

namespace {

Word w(const char* text, int n) { return parse_word(text, n); }

bool holds(const RelationPair& r) { return eval_word(r.lhs) == eval_word(r.rhs); }

Word block(int p, int k, int n)
{
    Word out(n);
    for (int i = p; i <= k; ++i)
        out.push_back(Letter::a(i));
    return out;
}

} // namespace

TEST_CASE("p words")
{
    CHECK(p_word(1, 2) == w("a2 a3", 2));
    CHECK(p_word(3, 2) == w("a1 a2", 2));
    CHECK(p_word(2, 4) == w("a3 a4 a5 a1", 4));
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n + 1; ++i)
            CHECK(p_word(i, n).size() == static_cast<std::size_t>(n));
}

TEST_CASE("a-p relation examples")
{
    auto r = rewrite_a_p(2, 2, 3);
    CHECK(r.lhs == w("a2", 3) + p_word(2, 3));
    CHECK(r.rhs == p_word(1, 3) + w("a1", 3));
    r = rewrite_a_p(3, 2, 3);
    CHECK(r.rhs == p_word(3, 3) + w("a2", 3));
    r = rewrite_a_p(1, 3, 3);
    CHECK(r.rhs == p_word(3, 3) + w("a4", 3));
    CHECK(holds(r));
    CHECK(holds(rewrite_a_p(2, 2, 3)));
}

TEST_CASE("all a-p and p-p relations hold for n <= 5")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n + 1; ++j) {
                CHECK(holds(rewrite_a_p(i, j, n, PSide::Direct)));
                CHECK(holds(rewrite_a_p(i, j, n, PSide::Inverse)));
                CHECK(holds(rewrite_p_p(i, j, n, PPForm::Direct)));
                CHECK(holds(rewrite_p_p(i, j, n, PPForm::InverseBoth)));
                CHECK(holds(rewrite_p_p(i, j, n, PPForm::Mixed)));
            }
}

TEST_CASE("the inverse corollary's middle case as printed is false")
{
    // Read literally, the case j + 1 = i gives a_i p_j^-1 = p_{j-1}^-1 a_{i+1}.
    int failures = 0;
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n + 1; ++i) {
            const int j = wrap_index(i - 1, n);
            const Word lhs = Word(n, {Letter::a(i)}) + p_word(j, n).inverse();
            const Word rhs = p_word(wrap_index(j - 1, n), n).inverse() + Word(n, {Letter::a(wrap_index(i + 1, n))});
            failures += eval_word(lhs) != eval_word(rhs);
        }
    CHECK(failures > 0);
}

TEST_CASE("p-p relation examples")
{
    auto r = rewrite_p_p(2, 1, 3);
    CHECK(r.lhs == r.rhs);
    r = rewrite_p_p(1, 3, 3);
    CHECK(r.rhs == p_word(4, 3) + p_word(4, 3));
    r = rewrite_p_p(1, 1, 2);
    CHECK(r.rhs == p_word(2, 2) + p_word(3, 2));
}

TEST_CASE("a-g relation examples")
{
    auto r = rewrite_a_g(1, 1, 3);
    CHECK(r.lhs == w("a1 g1", 3));
    CHECK(r.rhs == w("g1^-1 a1", 3));
    r = rewrite_a_g(2, 1, 3);
    CHECK(r.rhs == w("g1 g2 a2", 3));
    r = rewrite_a_g(4, 1, 4);
    CHECK(r.rhs == w("g1 a4", 4));
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n + 1; ++k)
            for (int j = 1; j <= n; ++j)
                for (int sign : {1, -1}) {
                    CHECK(holds(rewrite_a_g(k, j, n, LetterOrder::CoxeterFirst, sign)));
                    CHECK(holds(rewrite_a_g(k, j, n, LetterOrder::LatticeFirst, sign)));
                }
}

TEST_CASE("block-g relation examples")
{
    auto r = rewrite_block_g(w("a1 a2", 3), 1);
    CHECK(r.lhs == w("a1 a2 g1", 3));
    CHECK(r.rhs == w("g2 a1 a2", 3));
    r = rewrite_block_g(w("a1 a2", 3), 2);
    CHECK(r.rhs == w("g1^-1 g2^-1 a1 a2", 3));
    r = rewrite_block_g(w("a2 a3", 6), 5, LetterOrder::LatticeFirst);
    CHECK(r.lhs == w("g5 a2 a3", 6));
    CHECK(r.rhs == w("a2 a3 g5", 6));
}

TEST_CASE("block-g relations hold wherever they apply")
{
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p <= n; ++p)
            for (int k = p + 1; k <= std::min(n, p + 3); ++k)
                for (int j = 1; j <= n; ++j) {
                    if (j == p - 1 || j == k + 1) {
                        CHECK_THROWS_AS(rewrite_block_g(block(p, k, n), j), RelationNotApplicable);
                        continue;
                    }
                    for (auto order : {LetterOrder::CoxeterFirst, LetterOrder::LatticeFirst})
                        for (int sign : {1, -1})
                            CHECK(holds(rewrite_block_g(block(p, k, n), j, order, sign)));
                }
    CHECK_THROWS_AS(rewrite_block_g(w("a1 a3", 3), 1), RelationNotApplicable);
}

TEST_CASE("N is abelian and normal")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j)
                CHECK(eval_word(g_word(i, n) + g_word(j, n)) == eval_word(g_word(j, n) + g_word(i, n)));
            for (int k = 1; k <= n + 1; ++k) {
                const Word conj = Word(n, {Letter::a(k)}) + g_word(i, n) + Word(n, {Letter::a(k)});
                CHECK(quotient_to_finite(eval_word(conj)).is_identity());
            }
        }
}

TEST_CASE("coordinates")
{
    CHECK(coordinates(AffinePermutation::identity(3)).is_zero());
    CHECK(coordinates(eval_word(w("g2", 4))) == LatticeElement{{0, 1, 0, 0}});
    CHECK(coordinates(eval_word(w("g1 g2 g1", 3))) == LatticeElement{{2, 1, 0}});
    CHECK(coordinates(eval_word(g_word(4, 3))) == LatticeElement{{-1, -1, -1}});
    CHECK_THROWS_AS(coordinates(generator_image(1, 3)), NotATranslation);
    const LatticeElement l{{3, -2, 5}};
    CHECK(coordinates(lattice_image(l, 3)) == l);
    CHECK(eval_word(lattice_word(l, 3)) == lattice_image(l, 3));
}

TEST_CASE("lattice letters in the Tits representation")
{
    const MatrixRep tits = tits_rep(3);
    const Word x = w("a2 g1 g3^-1 a4", 3);
    CHECK(tits.eval(x) == tits.eval_expanded(x));
}
