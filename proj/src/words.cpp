#include "aspectra/words.hpp"

#include "aspectra/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace aspectra {

void require_rank(int n)
{
    if (n < 2)
        throw RankError("rank n must be at least 2, got " + std::to_string(n));
}

int wrap_index(int index, int n)
{
    const int m = n + 1;
    int r = index % m;
    if (r <= 0)
        r += m;
    return r;
}

bool cycle_adjacent(int i, int j, int n)
{
    const int m = n + 1;
    const int d = ((i - j) % m + m) % m;
    return d == 1 || d == n;
}

std::string render_letter(const Letter& letter)
{
    std::string s = (letter.coxeter() ? "a" : "g") + std::to_string(letter.index);
    if (letter.lattice() && letter.sign < 0)
        s += "^-1";
    return s;
}

namespace {

void check_letter(const Letter& letter, int rank)
{
    if (letter.coxeter()) {
        if (letter.index < 1 || letter.index > rank + 1)
            throw RankError("index " + std::to_string(letter.index) + " of a-letter outside 1.." +
                            std::to_string(rank + 1));
        if (letter.sign != 1)
            throw RankError("Coxeter letters carry no sign");
    } else {
        if (letter.index < 1 || letter.index > rank)
            throw RankError("index " + std::to_string(letter.index) + " of g-letter outside 1.." +
                            std::to_string(rank));
        if (letter.sign != 1 && letter.sign != -1)
            throw RankError("lattice letter sign must be +1 or -1");
    }
}

} // namespace

Word::Word(int rank) : rank_(rank) { require_rank(rank); }

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters))
{
    require_rank(rank);
    for (const auto& l : letters_)
        check_letter(l, rank_);
}

Word Word::inverse() const
{
    Word out(rank_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back(it->inverse());
    return out;
}

Word Word::slice(std::size_t pos, std::size_t count) const
{
    Word out(rank_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return out;
}

bool Word::finite_alphabet() const
{
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](const Letter& l) { return l.coxeter() && l.index <= rank_; });
}

bool Word::has_lattice_letters() const
{
    return std::any_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.lattice(); });
}

Word Word::operator+(const Word& other) const
{
    Word out = *this;
    out += other;
    return out;
}

Word& Word::operator+=(const Word& other)
{
    if (other.rank_ != rank_)
        throw RankError("cannot concatenate words of different rank");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word& Word::push_back(const Letter& letter)
{
    check_letter(letter, rank_);
    letters_.push_back(letter);
    return *this;
}

Word parse_word(std::string_view text, int rank, ParseOptions options)
{
    require_rank(rank);
    Word word(rank);
    std::size_t i = 0;
    const auto at_space = [&](std::size_t k) {
        return k >= text.size() || std::isspace(static_cast<unsigned char>(text[k]));
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        const char head = text[i];
        if (head != 'a' && head != 'g')
            throw ParseError(std::string("expected 'a' or 'g', found '") + head + "'", i);
        ++i;
        const std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == digits)
            throw ParseError("expected generator index after '" + std::string(1, head) + "'", i);
        int index = 0;
        if (std::from_chars(text.data() + digits, text.data() + i, index).ec != std::errc{})
            throw ParseError("generator index out of range", digits);
        long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t e0 = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                ++i;
            std::size_t d0 = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == d0)
                throw ParseError("expected signed integer exponent", i);
            const char* first = text.data() + (text[e0] == '+' ? e0 + 1 : e0);
            if (std::from_chars(first, text.data() + i, exponent).ec != std::errc{})
                throw ParseError("exponent out of range", e0);
        }
        if (!at_space(i))
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);

        if (head == 'a') {
            if (index < 1 || index > rank + 1)
                throw RankError("index " + std::to_string(index) + " > n+1 = " + std::to_string(rank + 1) +
                                " (token at position " + std::to_string(start) + ")");
            if (exponent != 1 && exponent != -1)
                throw ParseError("a-letters are involutions; exponent must be 1 or -1", start);
            word.push_back(Letter::a(index));
        } else {
            if (index < 1 || index > rank)
                throw RankError("index " + std::to_string(index) + " > n = " + std::to_string(rank) +
                                " for lattice letter (token at position " + std::to_string(start) + ")");
            if (exponent == 0)
                throw ParseError("lattice exponent must be nonzero", start);
            if (exponent > 1000000 || exponent < -1000000)
                throw ParseError("lattice exponent too large", start);
            const int sign = exponent > 0 ? 1 : -1;
            for (long k = 0; k < (exponent > 0 ? exponent : -exponent); ++k)
                word.push_back(Letter::g(index, sign));
        }
    }
    return options.free_reduce ? free_reduce(word) : word;
}

std::string render_word(const Word& word)
{
    std::string out;
    const auto& ls = word.letters();
    for (std::size_t i = 0; i < ls.size();) {
        if (!out.empty())
            out += ' ';
        const Letter& l = ls[i];
        if (l.coxeter()) {
            out += render_letter(l);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < ls.size() && ls[j] == l)
            ++j;
        const long power = static_cast<long>(j - i) * l.sign;
        out += "g" + std::to_string(l.index);
        if (power != 1)
            out += "^" + std::to_string(power);
        i = j;
    }
    return out;
}

Word free_reduce(const Word& word)
{
    std::vector<Letter> stack;
    for (const auto& l : word.letters()) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(word.rank(), std::move(stack));
}

std::string_view move_kind_name(MoveKind kind)
{
    switch (kind) {
    case MoveKind::Cancel: return "cancel";
    case MoveKind::Commute: return "commute";
    case MoveKind::Circular: return "circular";
    case MoveKind::Braid: return "braid";
    case MoveKind::Relation: return "relation";
    case MoveKind::Conjugate: return "conjugate";
    }
    return "?";
}

AdmissibleMove AdmissibleMove::relation(std::size_t p, const Word& lhs, const Word& rhs, std::string label)
{
    return {MoveKind::Relation, p, lhs.letters(), rhs.letters(), std::move(label)};
}

AdmissibleMove AdmissibleMove::conjugate(const Word& conjugator, std::string label)
{
    return {MoveKind::Conjugate, 1, {}, conjugator.letters(), std::move(label)};
}

std::string describe_move(const AdmissibleMove& move, int rank)
{
    std::string s(move_kind_name(move.kind));
    switch (move.kind) {
    case MoveKind::Relation:
        s += "@" + std::to_string(move.position) + " [" + render_word(Word(rank, move.lhs)) + "] -> [" +
             render_word(Word(rank, move.rhs)) + "]";
        break;
    case MoveKind::Conjugate:
        s += " by [" + render_word(Word(rank, move.rhs)) + "]";
        break;
    default:
        s += "(" + std::to_string(move.position) + ")";
    }
    if (!move.label.empty())
        s += " {" + move.label + "}";
    return s;
}

bool coxeter_commute(const Letter& x, const Letter& y, int rank)
{
    return x.coxeter() && y.coxeter() && x.index != y.index && !cycle_adjacent(x.index, y.index, rank);
}

namespace {

[[noreturn]] void not_applicable(const AdmissibleMove& move, const std::string& why)
{
    throw MoveNotApplicable(std::string(move_kind_name(move.kind)) + " at " + std::to_string(move.position) +
                            ": " + why);
}

} // namespace

Word apply_move(const Word& word, const AdmissibleMove& move, const CommutePredicate& commutes)
{
    const auto& ls = word.letters();
    const std::size_t len = ls.size();
    const std::size_t p = move.position;
    std::vector<Letter> out;
    switch (move.kind) {
    case MoveKind::Cancel:
        if (p < 1 || p + 1 > len)
            not_applicable(move, "position outside word");
        if (!ls[p - 1].coxeter() || ls[p - 1] != ls[p])
            not_applicable(move, "letters are not an identical pair of Coxeter letters");
        out = ls;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(p - 1), out.begin() + static_cast<std::ptrdiff_t>(p + 1));
        break;
    case MoveKind::Commute:
        if (p < 1 || p + 1 > len)
            not_applicable(move, "position outside word");
        if (ls[p - 1] == ls[p] || !commutes(ls[p - 1], ls[p], word.rank()))
            not_applicable(move, "letters " + render_letter(ls[p - 1]) + " and " + render_letter(ls[p]) +
                                     " do not commute");
        out = ls;
        std::swap(out[p - 1], out[p]);
        break;
    case MoveKind::Circular:
        if (p < 1 || p >= len)
            not_applicable(move, "split must lie strictly inside the word");
        out.assign(ls.begin() + static_cast<std::ptrdiff_t>(p), ls.end());
        out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p));
        break;
    case MoveKind::Braid: {
        if (p < 1 || p + 2 > len)
            not_applicable(move, "position outside word");
        const Letter &x = ls[p - 1], &y = ls[p], &z = ls[p + 1];
        if (!x.coxeter() || !y.coxeter() || x != z || !cycle_adjacent(x.index, y.index, word.rank()))
            not_applicable(move, "not an a_i a_j a_i pattern with adjacent i, j");
        out = ls;
        out[p - 1] = y;
        out[p] = x;
        out[p + 1] = y;
        break;
    }
    case MoveKind::Relation: {
        if (p < 1 || p - 1 + move.lhs.size() > len)
            not_applicable(move, "relation left side runs past the word");
        if (!std::equal(move.lhs.begin(), move.lhs.end(), ls.begin() + static_cast<std::ptrdiff_t>(p - 1)))
            not_applicable(move, "subword does not match the relation left side");
        out.assign(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p - 1));
        out.insert(out.end(), move.rhs.begin(), move.rhs.end());
        out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(p - 1 + move.lhs.size()), ls.end());
        break;
    }
    case MoveKind::Conjugate: {
        const Word c(word.rank(), move.rhs);
        return c + word + c.inverse();
    }
    }
    return Word(word.rank(), std::move(out));
}

std::vector<AdmissibleMove> enumerate_moves(const Word& word, const CommutePredicate& commutes)
{
    const auto& ls = word.letters();
    const std::size_t len = ls.size();
    std::vector<AdmissibleMove> moves;
    for (std::size_t p = 1; p + 1 <= len; ++p)
        if (ls[p - 1].coxeter() && ls[p - 1] == ls[p])
            moves.push_back(AdmissibleMove::cancel(p));
    for (std::size_t p = 1; p + 1 <= len; ++p)
        if (ls[p - 1] != ls[p] && commutes(ls[p - 1], ls[p], word.rank()))
            moves.push_back(AdmissibleMove::commute(p));
    for (std::size_t k = 1; k < len; ++k)
        moves.push_back(AdmissibleMove::circular(k));
    for (std::size_t p = 1; p + 2 <= len; ++p) {
        const Letter &x = ls[p - 1], &y = ls[p], &z = ls[p + 1];
        if (x.coxeter() && y.coxeter() && x == z && cycle_adjacent(x.index, y.index, word.rank()))
            moves.push_back(AdmissibleMove::braid(p));
    }
    return moves;
}

const Word& MoveTrace::apply(const AdmissibleMove& move, const CommutePredicate& commutes)
{
    Word next = apply_move(result(), move, commutes);
    steps_.emplace_back(move, std::move(next));
    return steps_.back().second;
}

} // namespace aspectra

std::size_t std::hash<aspectra::Word>::operator()(const aspectra::Word& w) const noexcept
{
    std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
    for (const auto& l : w.letters()) {
        const std::size_t v = (static_cast<std::size_t>(l.index) << 2) | (l.lattice() ? 2U : 0U) | (l.sign < 0 ? 1U : 0U);
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
