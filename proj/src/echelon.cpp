#include "aspectra/echelon.hpp"

#include "aspectra/error.hpp"

#include <algorithm>
#include <cassert>

namespace aspectra {

EchelonForm::EchelonForm(int rank, std::vector<bool> present) : rank_(rank), present_(std::move(present))
{
    require_rank(rank);
    if (present_.size() != static_cast<std::size_t>(rank))
        throw RankError("echelon form needs exactly n flags");
}

std::optional<EchelonForm> EchelonForm::recognize(const Word& word)
{
    if (!word.finite_alphabet())
        return std::nullopt;
    std::vector<bool> present(static_cast<std::size_t>(word.rank()), false);
    int last = 0;
    for (const auto& l : word.letters()) {
        if (l.index <= last)
            return std::nullopt;
        last = l.index;
        present[static_cast<std::size_t>(l.index - 1)] = true;
    }
    return EchelonForm(word.rank(), std::move(present));
}

std::vector<Block> EchelonForm::blocks() const
{
    std::vector<Block> out;
    for (int i = 1; i <= rank_; ++i) {
        if (!present(i))
            continue;
        if (!out.empty() && out.back().end == i - 1)
            out.back().end = i;
        else
            out.push_back({i, i});
    }
    return out;
}

Word EchelonForm::word() const
{
    Word w(rank_);
    for (int i = 1; i <= rank_; ++i)
        if (present(i))
            w.push_back(Letter::a(i));
    return w;
}

BlockEchelonForm::BlockEchelonForm(int rank, std::vector<Block> blocks) : rank_(rank), blocks_(std::move(blocks))
{
    require_rank(rank);
    for (std::size_t t = 0; t < blocks_.size(); ++t) {
        const Block& b = blocks_[t];
        if (b.start < 1 || b.end > rank || b.end < b.start)
            throw RankError("block outside a_1..a_n");
        if (t > 0 && b.start != blocks_[t - 1].end + 2)
            throw RankError("consecutive blocks must be separated by exactly one absent letter");
    }
}

Word BlockEchelonForm::word() const
{
    Word w(rank_);
    for (const auto& b : blocks_)
        for (int i = b.start; i <= b.end; ++i)
            w.push_back(Letter::a(i));
    return w;
}

EchelonForm BlockEchelonForm::echelon() const
{
    std::vector<bool> present(static_cast<std::size_t>(rank_), false);
    for (const auto& b : blocks_)
        for (int i = b.start; i <= b.end; ++i)
            present[static_cast<std::size_t>(i - 1)] = true;
    return EchelonForm(rank_, std::move(present));
}

TildeEchelonForm::TildeEchelonForm(BlockEchelonForm block_part, LatticeElement lattice_part)
    : block_part_(std::move(block_part)), lattice_part_(std::move(lattice_part))
{
    if (lattice_part_.exponents.size() != static_cast<std::size_t>(block_part_.rank()))
        throw RankError("lattice part must have n exponents");
}

Word TildeEchelonForm::word() const { return block_part_.word() + lattice_word(lattice_part_, rank()); }

bool TildeEchelonForm::satisfies_invariants() const
{
    for (const auto& b : block_part_.blocks()) {
        if (b.length() == 1) {
            const auto e = lattice_part_[b.start];
            if (e < -1 || e > 1)
                return false;
        } else {
            for (int i = b.start + 1; i <= b.end; ++i)
                if (lattice_part_[i] != 0)
                    return false;
        }
    }
    return true;
}

Json TildeEchelonForm::to_json() const
{
    Json blocks = Json::array();
    for (const auto& b : block_part_.blocks())
        blocks.push_back({b.start, b.end});
    return Json{{"blocks", blocks}, {"exponents", lattice_part_.exponents}};
}

Decomposition decompose(const Word& word)
{
    const int n = word.rank();
    const auto image = eval_word(word);
    Word x = reduced_word(n, quotient_to_finite(image));
    const auto m = eval_word(x).inverse() * image;
    return {std::move(x), coordinates(m)};
}

FinitePermutation conjugating_permutation(const FinitePermutation& s, const FinitePermutation& t)
{
    if (s.size() != t.size() || s.cycle_type() != t.cycle_type())
        throw RankError("permutations are not conjugate");
    auto by_length = [](std::vector<std::vector<int>> cs) {
        std::stable_sort(cs.begin(), cs.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        return cs;
    };
    const auto cs = by_length(s.cycles());
    const auto ct = by_length(t.cycles());
    std::vector<int> images(static_cast<std::size_t>(s.size()));
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t i = 0; i < cs[c].size(); ++i)
            images[static_cast<std::size_t>(cs[c][i] - 1)] = ct[c][i];
    return FinitePermutation(std::move(images));
}

namespace {

EchelonForm canonical_echelon(int n, const std::vector<int>& cycle_type)
{
    std::vector<bool> present(static_cast<std::size_t>(n), false);
    int next = 1;
    for (int part : cycle_type) {
        if (part < 2)
            continue;
        for (int i = 0; i < part - 1; ++i)
            present[static_cast<std::size_t>(next + i - 1)] = true;
        next += part;
    }
    return EchelonForm(n, std::move(present));
}

// Records w -> c w c^-1 -> target, where target equals c w c^-1 as an element.
void record_conjugation(MoveTrace& trace, const Word& conjugator, const Word& target, const char* label)
{
    if (!conjugator.empty())
        trace.apply(AdmissibleMove::conjugate(conjugator, "conjugate"));
    const Word& current = trace.result();
    if (current != target)
        trace.apply(AdmissibleMove::relation(1, current, target, label));
}

// Rewrites the word held by a trace whose layout is blocks then lattice letters.
class ClockwiseEngine {
public:
    ClockwiseEngine(MoveTrace& trace, std::vector<Block> blocks)
        : trace_(trace), blocks_(std::move(blocks)), n_(trace.result().rank())
    {
        for (const auto& b : blocks_)
            coxeter_count_ += static_cast<std::size_t>(b.length());
    }

    LatticeElement exponents() const { return lattice_content(trace_.result()); }

    // Moves `count` letters g_j^sign from the tail around to the front and
    // pushes them back through every block.
    void cycle_letters(int j, int sign, std::size_t count)
    {
        const Word& current = trace_.result();
        const Word tail = current.slice(coxeter_count_, current.size() - coxeter_count_);
        LatticeElement rest = lattice_content(tail);
        rest[j] -= sign * static_cast<std::int64_t>(count);
        Word reordered = lattice_word(rest, n_);
        for (std::size_t c = 0; c < count; ++c)
            reordered.push_back(Letter::g(j, sign));
        if (reordered != tail)
            trace_.apply(AdmissibleMove::relation(coxeter_count_ + 1, tail, reordered, "lattice letters commute"));
        trace_.apply(AdmissibleMove::circular(trace_.result().size() - count));
        push_through_blocks();
        collect();
    }

private:
    void push_through_blocks()
    {
        for (;;) {
            const Word& w = trace_.result();
            std::size_t q = w.size();
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i].lattice() && w[i + 1].coxeter()) {
                    q = i;
                    break;
                }
            if (q == w.size())
                return;
            std::size_t before = 0;
            for (std::size_t i = 0; i <= q; ++i)
                if (w[i].coxeter())
                    ++before;
            const Block* block = nullptr;
            std::size_t offset = 0;
            for (const auto& b : blocks_) {
                if (offset == before) {
                    block = &b;
                    break;
                }
                offset += static_cast<std::size_t>(b.length());
            }
            assert(block != nullptr);
            const Letter g = w[q];
            RelationPair rel = block->length() == 1
                                   ? rewrite_a_g(block->start, g.index, n_, LetterOrder::LatticeFirst, g.sign)
                                   : rewrite_block_g(w.slice(q + 1, static_cast<std::size_t>(block->length())),
                                                     g.index, LetterOrder::LatticeFirst, g.sign);
            trace_.apply(AdmissibleMove::relation(q + 1, rel.lhs, rel.rhs, rel.label));
        }
    }

    void collect()
    {
        const Word& current = trace_.result();
        const Word tail = current.slice(coxeter_count_, current.size() - coxeter_count_);
        const Word canonical = lattice_word(lattice_content(tail), n_);
        if (canonical != tail)
            trace_.apply(AdmissibleMove::relation(coxeter_count_ + 1, tail, canonical, "collect lattice letters"));
    }

    MoveTrace& trace_;
    std::vector<Block> blocks_;
    int n_;
    std::size_t coxeter_count_ = 0;
};

} // namespace

Traced<EchelonForm> a_echelon_traced(const Word& x)
{
    if (!x.finite_alphabet())
        throw RankError("echelon form is defined for words in a_1..a_n only");
    MoveTrace trace(x);
    if (auto e = EchelonForm::recognize(x))
        return {*e, std::move(trace)};
    const int n = x.rank();
    const auto s = quotient_to_finite(eval_word(x));
    EchelonForm e = canonical_echelon(n, s.cycle_type());
    const auto t = quotient_to_finite(eval_word(e.word()));
    record_conjugation(trace, reduced_word(n, conjugating_permutation(s, t)), e.word(), "equal in A_n");
    return {std::move(e), std::move(trace)};
}

EchelonForm a_echelon(const Word& x) { return a_echelon_traced(x).form; }

Traced<BlockEchelonForm> block_echelon_traced(const EchelonForm& e)
{
    const int n = e.rank();
    std::vector<Block> blocks = e.blocks();
    for (std::size_t t = 1; t < blocks.size(); ++t) {
        const int len = blocks[t].length();
        blocks[t].start = blocks[t - 1].end + 2;
        blocks[t].end = blocks[t].start + len - 1;
    }
    BlockEchelonForm out(n, std::move(blocks));
    MoveTrace trace(e.word());
    if (out.word() != e.word()) {
        const auto s = quotient_to_finite(eval_word(e.word()));
        const auto t = quotient_to_finite(eval_word(out.word()));
        record_conjugation(trace, reduced_word(n, conjugating_permutation(s, t)), out.word(), "equal in A_n");
    }
    return {std::move(out), std::move(trace)};
}

BlockEchelonForm block_echelon(const EchelonForm& e) { return block_echelon_traced(e).form; }

Traced<TildeEchelonForm> tilde_echelon_traced(const Word& word)
{
    const int n = word.rank();
    MoveTrace trace(word);

    // w = x m  ~  (c x c^-1)(c m c^-1) with c x c^-1 in block echelon form.
    const Decomposition d = decompose(word);
    const BlockEchelonForm target = block_echelon(a_echelon(d.finite_part));
    const auto s = quotient_to_finite(eval_word(d.finite_part));
    const auto t = quotient_to_finite(eval_word(target.word()));
    const Word conjugator = reduced_word(n, conjugating_permutation(s, t));
    const LatticeElement moved = conjugate_lattice(conjugator, d.lattice_part);
    record_conjugation(trace, conjugator, target.word() + lattice_word(moved, n), "semidirect decomposition");

    ClockwiseEngine engine(trace, target.blocks());
    for (const auto& b : target.blocks()) {
        if (b.length() == 1) {
            for (auto e = engine.exponents()[b.start]; e > 1 || e < -1; e = engine.exponents()[b.start])
                engine.cycle_letters(b.start, e > 0 ? 1 : -1, 1);
            continue;
        }
        for (;;) {
            const auto ell = engine.exponents();
            int j = 0;
            for (int i = b.end; i > b.start; --i)
                if (ell[i] != 0) {
                    j = i;
                    break;
                }
            if (j == 0)
                break;
            const auto e = ell[j];
            engine.cycle_letters(j, e > 0 ? 1 : -1, static_cast<std::size_t>(e > 0 ? e : -e));
        }
    }
    TildeEchelonForm form(target, engine.exponents());
    assert(form.word() == trace.result());
    assert(form.satisfies_invariants());
    return {std::move(form), std::move(trace)};
}

TildeEchelonForm tilde_echelon(const Word& word) { return tilde_echelon_traced(word).form; }

} // namespace aspectra
