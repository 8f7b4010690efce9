#include "aspectra/lattice.hpp"

#include "aspectra/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

namespace aspectra {

namespace {

void require_index(int i, int lo, int hi, const char* what)
{
    if (i < lo || i > hi)
        throw RankError(std::string(what) + " index " + std::to_string(i) + " outside " + std::to_string(lo) +
                        ".." + std::to_string(hi));
}

Word a_letter(int i, int n) { return Word(n, {Letter::a(wrap_index(i, n))}); }

// g_{j} for any integer j, with j = 0 = n+1 written in the basis.
LatticeElement g_element(int j, int n)
{
    const int w = wrap_index(j, n);
    if (w <= n)
        return LatticeElement::basis(n, w);
    LatticeElement e = LatticeElement::zero(n);
    for (auto& x : e.exponents)
        x = -1;
    return e;
}

LatticeElement scaled(LatticeElement e, int sign)
{
    return sign > 0 ? e : -e;
}

std::vector<TranslationVector> basis_translations(int n)
{
    std::vector<TranslationVector> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const auto img = eval_word(g_word(j, n));
        assert(quotient_to_finite(img).is_identity());
        basis.push_back(translation_vector(img));
    }
    return basis;
}

// Exact solve of A x = b over Z by unimodular row operations.
std::optional<std::vector<std::int64_t>> solve_integer(std::vector<std::vector<std::int64_t>> a,
                                                       std::vector<std::int64_t> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c over rows r..end until a single nonzero remains.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (best == rows || std::llabs(a[i][c]) < std::llabs(a[best][c])))
                    best = i;
            if (best == rows)
                break;
            std::swap(a[r], a[best]);
            std::swap(b[r], b[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0)
                    continue;
                const std::int64_t q = a[i][c] / a[r][c];
                for (std::size_t k = c; k < cols; ++k)
                    a[i][k] -= q * a[r][k];
                b[i] -= q * b[r];
                if (a[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a[r][c] != 0) {
            pivot_cols.push_back(c);
            ++r;
        }
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    if (pivot_cols.size() != cols)
        return std::nullopt;
    std::vector<std::int64_t> x(cols, 0);
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t c = pivot_cols[k];
        std::int64_t rhs = b[k];
        for (std::size_t j = c + 1; j < cols; ++j)
            rhs -= a[k][j] * x[j];
        if (rhs % a[k][c] != 0)
            return std::nullopt;
        x[c] = rhs / a[k][c];
    }
    return x;
}

} // namespace

Word p_word(int i, int n)
{
    require_rank(n);
    const int base = wrap_index(i, n);
    Word w(n);
    for (int k = 1; k <= n; ++k)
        w.push_back(Letter::a(wrap_index(base + k, n)));
    return w;
}

Word g_word(int j, int n)
{
    require_rank(n);
    require_index(j, 1, n + 1, "lattice generator");
    return p_word(j, n).inverse() + p_word(j + 1, n);
}

Word expand_lattice(const Word& word)
{
    Word out(word.rank());
    for (const auto& l : word.letters()) {
        if (l.coxeter()) {
            out.push_back(l);
        } else {
            const Word def = g_word(l.index, word.rank());
            out += l.sign > 0 ? def : def.inverse();
        }
    }
    return out;
}

LatticeElement LatticeElement::basis(int n, int j)
{
    require_index(j, 1, n, "lattice basis");
    auto e = zero(n);
    e[j] = 1;
    return e;
}

bool LatticeElement::is_zero() const
{
    return std::all_of(exponents.begin(), exponents.end(), [](std::int64_t x) { return x == 0; });
}

LatticeElement LatticeElement::operator+(const LatticeElement& other) const
{
    assert(exponents.size() == other.exponents.size());
    LatticeElement out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        out.exponents[i] += other.exponents[i];
    return out;
}

LatticeElement LatticeElement::operator-() const
{
    LatticeElement out = *this;
    for (auto& x : out.exponents)
        x = -x;
    return out;
}

Word lattice_word(const LatticeElement& element, int n)
{
    if (element.exponents.size() != static_cast<std::size_t>(n))
        throw RankError("lattice element must have n exponents");
    Word w(n);
    for (int j = 1; j <= n; ++j) {
        const std::int64_t e = element[j];
        for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k)
            w.push_back(Letter::g(j, e > 0 ? 1 : -1));
    }
    return w;
}

LatticeElement lattice_content(const Word& word)
{
    auto e = LatticeElement::zero(word.rank());
    for (const auto& l : word.letters())
        if (l.lattice())
            e[l.index] += l.sign;
    return e;
}

AffinePermutation lattice_image(const LatticeElement& element, int n)
{
    const auto basis = basis_translations(n);
    TranslationVector sum{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)};
    for (int j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < sum.coords.size(); ++i)
            sum.coords[i] += element[j] * basis[static_cast<std::size_t>(j - 1)].coords[i];
    return translation(n, sum);
}

LatticeElement coordinates(const AffinePermutation& m)
{
    if (!quotient_to_finite(m).is_identity())
        throw NotATranslation("element has a nontrivial finite part and does not lie in N");
    const int n = m.rank();
    const auto basis = basis_translations(n);
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(n + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= n; ++i)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                basis[static_cast<std::size_t>(j)].coords[static_cast<std::size_t>(i)];
    auto x = solve_integer(std::move(a), translation_vector(m).coords);
    if (!x)
        throw NotATranslation("translation is not in the lattice spanned by g_1..g_n");
    return LatticeElement{std::move(*x)};
}

LatticeElement conjugate_lattice(const Word& x, const LatticeElement& element)
{
    const auto ex = eval_word(x);
    return coordinates(ex * lattice_image(element, x.rank()) * ex.inverse());
}

bool letters_commute(const Letter& x, const Letter& y, int rank)
{
    if (x.coxeter() && y.coxeter())
        return coxeter_commute(x, y, rank);
    if (x.lattice() && y.lattice())
        return x != y;
    const Letter& a = x.coxeter() ? x : y;
    const Letter& g = x.coxeter() ? y : x;
    const int k = a.index;
    const int j = g.index;
    return k != wrap_index(j - 1, rank) && k != wrap_index(j, rank) && k != wrap_index(j + 1, rank);
}

RelationPair rewrite_a_p(int i, int j, int n, PSide side)
{
    require_rank(n);
    require_index(i, 1, n + 1, "Coxeter");
    require_index(j, 1, n + 1, "p");
    const bool same = wrap_index(i, n) == wrap_index(j, n);
    if (side == PSide::Direct) {
        // a_i p_j = p_{j-1} a_{i-1} (i = j), p_{j+1} a_{i-1} (j+1 = i), p_j a_{i-1} otherwise.
        const Word lhs = a_letter(i, n) + p_word(j, n);
        const Word tail = a_letter(i - 1, n);
        if (same)
            return {lhs, p_word(j - 1, n) + tail, "a_i p_j = p_{j-1} a_{i-1} (i = j)"};
        if (wrap_index(j + 1, n) == wrap_index(i, n))
            return {lhs, p_word(j + 1, n) + tail, "a_i p_j = p_{j+1} a_{i-1} (j+1 = i)"};
        return {lhs, p_word(j, n) + tail, "a_i p_j = p_j a_{i-1}"};
    }
    // Inverting the direct relations: the middle case holds for j = i+1.
    const Word lhs = a_letter(i, n) + p_word(j, n).inverse();
    const Word tail = a_letter(i + 1, n);
    if (same)
        return {lhs, p_word(j + 1, n).inverse() + tail, "a_i p_j^-1 = p_{j+1}^-1 a_{i+1} (i = j)"};
    if (wrap_index(i + 1, n) == wrap_index(j, n))
        return {lhs, p_word(j - 1, n).inverse() + tail, "a_i p_j^-1 = p_{j-1}^-1 a_{i+1} (j = i+1)"};
    return {lhs, p_word(j, n).inverse() + tail, "a_i p_j^-1 = p_j^-1 a_{i+1}"};
}

RelationPair rewrite_p_p(int i, int j, int n, PPForm form)
{
    require_rank(n);
    require_index(i, 1, n + 1, "p");
    require_index(j, 1, n + 1, "p");
    switch (form) {
    case PPForm::Direct:
        return {p_word(i, n) + p_word(j, n), p_word(j + 1, n) + p_word(i - 1, n), "p_i p_j = p_{j+1} p_{i-1}"};
    case PPForm::InverseBoth:
        return {p_word(j, n).inverse() + p_word(i, n).inverse(),
                p_word(i - 1, n).inverse() + p_word(j + 1, n).inverse(),
                "p_j^-1 p_i^-1 = p_{i-1}^-1 p_{j+1}^-1"};
    case PPForm::Mixed:
        return {p_word(j, n).inverse() + p_word(i, n), p_word(i - 1, n) + p_word(j - 1, n).inverse(),
                "p_j^-1 p_i = p_{i-1} p_{j-1}^-1"};
    }
    throw RelationNotApplicable("unknown p-p relation form");
}

RelationPair rewrite_a_g(int k, int j, int n, LetterOrder order, int sign)
{
    require_rank(n);
    require_index(k, 1, n + 1, "Coxeter");
    require_index(j, 1, n, "lattice");
    if (sign != 1 && sign != -1)
        throw RelationNotApplicable("sign must be +1 or -1");

    LatticeElement conj = LatticeElement::zero(n);
    std::string label;
    if (k == wrap_index(j, n)) {
        conj = -g_element(j, n);
        label = "a_i g_i = g_i^-1 a_i";
    } else if (k == wrap_index(j - 1, n)) {
        conj = g_element(j - 1, n) + g_element(j, n);
        label = "a_{i-1} g_i = g_{i-1} g_i a_{i-1}";
    } else if (k == wrap_index(j + 1, n)) {
        conj = g_element(j, n) + g_element(j + 1, n);
        label = "a_{i+1} g_i = g_i g_{i+1} a_{i+1}";
    } else {
        conj = g_element(j, n);
        label = "a_k g_j = g_j a_k";
    }
    const Word a = a_letter(k, n);
    const Word g(n, {Letter::g(j, sign)});
    const Word x = lattice_word(scaled(conj, sign), n);
    if (order == LetterOrder::CoxeterFirst)
        return {a + g, x + a, label};
    return {g + a, a + x, label + " (lattice first)"};
}

RelationPair rewrite_block_g(const Word& block, int j, LetterOrder order, int sign)
{
    const int n = block.rank();
    require_index(j, 1, n, "lattice");
    if (sign != 1 && sign != -1)
        throw RelationNotApplicable("sign must be +1 or -1");
    if (block.size() < 2 || !block.finite_alphabet())
        throw RelationNotApplicable("block must be a run a_p..a_k with k > p inside a_1..a_n");
    const int p = block[0].index;
    const int k = p + static_cast<int>(block.size()) - 1;
    for (std::size_t t = 0; t < block.size(); ++t)
        if (block[t].index != p + static_cast<int>(t))
            throw RelationNotApplicable("block letters must be consecutive a_p a_{p+1} ... a_k");

    LatticeElement moved = LatticeElement::zero(n);
    std::string label;
    const auto all_inverse = [&] {
        auto e = LatticeElement::zero(n);
        for (int t = p; t <= k; ++t)
            e[t] = -1;
        return e;
    };
    if (j < p - 1 || j > k + 1) {
        moved = g_element(j, n);
        label = order == LetterOrder::CoxeterFirst ? "Delta g_j = g_j Delta (j < p-1 or j > k+1)"
                                                   : "g_j Delta = Delta g_j (j < p-1 or j > k+1)";
    } else if (order == LetterOrder::CoxeterFirst && p <= j && j < k) {
        moved = g_element(j + 1, n);
        label = "Delta g_j = g_{j+1} Delta (p <= j < k)";
    } else if (order == LetterOrder::CoxeterFirst && j == k) {
        moved = all_inverse();
        label = "Delta g_k = g_p^-1 ... g_k^-1 Delta (j = k)";
    } else if (order == LetterOrder::LatticeFirst && p < j && j <= k) {
        moved = g_element(j - 1, n);
        label = "g_j Delta = Delta g_{j-1} (p < j <= k)";
    } else if (order == LetterOrder::LatticeFirst && j == p) {
        moved = all_inverse();
        label = "g_p Delta = Delta g_p^-1 ... g_k^-1 (j = p)";
    } else {
        throw RelationNotApplicable("no tabulated block relation for g_" + std::to_string(j) + " and block a_" +
                                    std::to_string(p) + "..a_" + std::to_string(k));
    }
    const Word g(n, {Letter::g(j, sign)});
    const Word x = lattice_word(scaled(moved, sign), n);
    if (order == LetterOrder::CoxeterFirst)
        return {block + g, x + block, label};
    return {g + block, block + x, label};
}

} // namespace aspectra
