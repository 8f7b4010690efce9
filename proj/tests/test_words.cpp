#include "aspectra/affine.hpp"
#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"
#include "aspectra/reps.hpp"
#include "aspectra/rng.hpp"
#include "aspectra/words.hpp"

#include <doctest.h>

#include <algorithm>

using namespace aspectra;

namespace {

Word w(const char* text, int n) { return parse_word(text, n); }

Word random_a_word(int n, std::size_t max_len, Rng& rng)
{
    Word out(n);
    const auto len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(Letter::a(static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1))) + 1));
    return out;
}

bool has_kind(const std::vector<AdmissibleMove>& moves, MoveKind kind)
{
    return std::any_of(moves.begin(), moves.end(), [&](const AdmissibleMove& m) { return m.kind == kind; });
}

} // namespace

TEST_CASE("parse_word tokenizes letters")
{
    const Word x = w("a1 a2 a1", 2);
    CHECK(x.letters() == std::vector<Letter>{Letter::a(1), Letter::a(2), Letter::a(1)});
    CHECK(w("g1^-2", 3).letters() == std::vector<Letter>{Letter::g(1, -1), Letter::g(1, -1)});
    CHECK(w("", 2).empty());
    CHECK(w("a3^-1", 2).letters() == std::vector<Letter>{Letter::a(3)});
}

TEST_CASE("parse_word rejects malformed input")
{
    CHECK_THROWS_WITH_AS(w("a4", 2), doctest::Contains("index 4 > n+1 = 3"), RankError);
    CHECK_THROWS_AS(w("g3", 2), RankError);
    CHECK_THROWS_AS(w("a1^2", 2), ParseError);
    CHECK_THROWS_AS(w("g1^0", 2), ParseError);
    CHECK_THROWS_AS(w("b1", 2), ParseError);
    CHECK_THROWS_AS(w("a", 2), ParseError);
    CHECK_THROWS_AS(w("a0", 2), RankError);
    CHECK_THROWS_AS(parse_word("a1", 1), RankError);
    try {
        w("a1 x2", 2);
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("free reduction is opt-in")
{
    CHECK(w("a1 a1", 2).size() == 2);
    CHECK(parse_word("a1 a1 a2", 2, {.free_reduce = true}) == w("a2", 2));
    CHECK(parse_word("g1 a2 a2 g1^-1", 2, {.free_reduce = true}).empty());
}

TEST_CASE("render and parse round-trip")
{
    for (const char* text : {"a1 a2 a1", "g1^2 a3 g2^-1", "", "a2 g1 g2 g1"}) {
        const Word x = w(text, 3);
        CHECK(parse_word(render_word(x), 3) == x);
    }
    CHECK(render_word(w("g1 g1 g2^-1", 2)) == "g1^2 g2^-1");
}

TEST_CASE("apply_move examples")
{
    CHECK(apply_move(w("a2 a2 a1", 2), AdmissibleMove::cancel(1)) == w("a1", 2));
    CHECK(apply_move(w("a1 a2 a1", 2), AdmissibleMove::braid(1)) == w("a2 a1 a2", 2));
    CHECK(apply_move(w("a1 a2 a3", 3), AdmissibleMove::circular(2)) == w("a3 a1 a2", 3));
    CHECK(apply_move(w("a1 a3", 3), AdmissibleMove::commute(1)) == w("a3 a1", 3));
}

TEST_CASE("apply_move checks preconditions")
{
    CHECK_THROWS_AS(apply_move(w("a1 a2", 2), AdmissibleMove::cancel(1)), MoveNotApplicable);
    CHECK_THROWS_AS(apply_move(w("a1 a2", 2), AdmissibleMove::commute(1)), MoveNotApplicable);
    CHECK_THROWS_AS(apply_move(w("a1 a3 a1", 3), AdmissibleMove::braid(1)), MoveNotApplicable);
    CHECK_THROWS_AS(apply_move(w("a1 a2", 2), AdmissibleMove::circular(2)), MoveNotApplicable);
    CHECK_THROWS_AS(apply_move(w("a1 a2", 2), AdmissibleMove::cancel(2)), MoveNotApplicable);
    CHECK_THROWS_AS(apply_move(w("g1 g1", 2), AdmissibleMove::cancel(1)), MoveNotApplicable);
}

TEST_CASE("enumerate_moves")
{
    auto moves = enumerate_moves(w("a1 a1", 2));
    CHECK(moves.front() == AdmissibleMove::cancel(1));

    moves = enumerate_moves(w("a1 a3", 3));
    CHECK(std::find(moves.begin(), moves.end(), AdmissibleMove::commute(1)) != moves.end());

    moves = enumerate_moves(w("a1 a2", 2));
    REQUIRE(moves.size() == 1);
    CHECK(moves.front() == AdmissibleMove::circular(1));
    CHECK(!has_kind(moves, MoveKind::Braid));

    // n = 2: a1 and a3 are adjacent on the cycle.
    CHECK(!has_kind(enumerate_moves(w("a1 a3", 2)), MoveKind::Commute));
}

TEST_CASE("lattice letters use the supplied commutation predicate")
{
    const Word x = w("a3 g1", 4);
    CHECK(!has_kind(enumerate_moves(x), MoveKind::Commute));
    CHECK(has_kind(enumerate_moves(x, letters_commute), MoveKind::Commute));
    CHECK(!has_kind(enumerate_moves(w("a1 g1", 4), letters_commute), MoveKind::Commute));
    CHECK(eval_word(apply_move(x, AdmissibleMove::commute(1), letters_commute)) == eval_word(x));
}

TEST_CASE("moves preserve the element, circular moves the character")
{
    Rng rng(11);
    const auto reps = battery(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Word x = random_a_word(3, 9, rng);
        const auto before = eval_word(x);
        for (const auto& move : enumerate_moves(x)) {
            const Word y = apply_move(x, move);
            if (move.kind == MoveKind::Cancel)
                CHECK(y.size() + 2 == x.size());
            else
                CHECK(y.size() == x.size());
            if (move.preserves_element()) {
                CHECK(eval_word(y) == before);
            } else {
                for (const auto& rho : reps)
                    CHECK(character(rho, y) == character(rho, x));
            }
        }
    }
}

TEST_CASE("MoveTrace records each step")
{
    MoveTrace trace(w("a1 a2 a1 a1", 2));
    trace.apply(AdmissibleMove::cancel(3));
    trace.apply(AdmissibleMove::circular(1));
    REQUIRE(trace.steps().size() == 2);
    CHECK(trace.steps()[0].second == w("a1 a2", 2));
    CHECK(trace.result() == w("a2 a1", 2));
    CHECK(trace.initial() == w("a1 a2 a1 a1", 2));
}

TEST_CASE("index helpers wrap into 1..n+1")
{
    CHECK(wrap_index(0, 3) == 4);
    CHECK(wrap_index(5, 3) == 1);
    CHECK(wrap_index(-1, 3) == 3);
    CHECK(cycle_adjacent(1, 4, 3));
    CHECK(!cycle_adjacent(1, 3, 3));
    CHECK_THROWS_AS(require_rank(1), RankError);
}
