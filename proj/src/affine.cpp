#include "aspectra/affine.hpp"

#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace aspectra {

namespace {

// floor-division representative: x = r + m*q with r in 1..m.
std::pair<std::int64_t, std::int64_t> split_residue(std::int64_t x, std::int64_t m)
{
    std::int64_t r = ((x - 1) % m + m) % m + 1;
    return {r, (x - r) / m};
}

} // namespace

FinitePermutation::FinitePermutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw RankError("finite permutation images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

FinitePermutation FinitePermutation::identity(int size)
{
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 1);
    return FinitePermutation(std::move(v));
}

FinitePermutation FinitePermutation::transposition(int size, int i, int j)
{
    auto p = identity(size);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
}

FinitePermutation FinitePermutation::operator*(const FinitePermutation& other) const
{
    assert(size() == other.size());
    std::vector<int> out(images_.size());
    for (int x = 1; x <= size(); ++x)
        out[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
    return FinitePermutation(std::move(out));
}

FinitePermutation FinitePermutation::inverse() const
{
    std::vector<int> out(images_.size());
    for (int x = 1; x <= size(); ++x)
        out[static_cast<std::size_t>((*this)(x) - 1)] = x;
    return FinitePermutation(std::move(out));
}

bool FinitePermutation::is_identity() const
{
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x)
            return false;
    return true;
}

std::vector<std::vector<int>> FinitePermutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x = 1; x <= size(); ++x) {
        if (seen[static_cast<std::size_t>(x)])
            continue;
        std::vector<int> cycle;
        for (int y = x; !seen[static_cast<std::size_t>(y)]; y = (*this)(y)) {
            seen[static_cast<std::size_t>(y)] = true;
            cycle.push_back(y);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> FinitePermutation::cycle_type() const
{
    std::vector<int> lengths;
    for (const auto& c : cycles())
        lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

int FinitePermutation::sign() const
{
    int s = 1;
    for (const auto& c : cycles())
        if (c.size() % 2 == 0)
            s = -s;
    return s;
}

bool TranslationVector::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

TranslationVector TranslationVector::operator+(const TranslationVector& other) const
{
    assert(coords.size() == other.coords.size());
    TranslationVector out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out.coords[i] += other.coords[i];
    return out;
}

TranslationVector TranslationVector::permuted(const FinitePermutation& s) const
{
    TranslationVector out{std::vector<std::int64_t>(coords.size(), 0)};
    for (int i = 1; i <= s.size(); ++i)
        out.coords[static_cast<std::size_t>(s(i) - 1)] = coords[static_cast<std::size_t>(i - 1)];
    return out;
}

AffinePermutation::AffinePermutation(int rank, std::vector<std::int64_t> window)
    : rank_(rank), window_(std::move(window))
{
    require_rank(rank);
    if (window_.size() != static_cast<std::size_t>(rank + 1))
        throw RankError("window must have n+1 entries");
    if (!invariants_hold())
        throw RankError("window entries must be distinct mod n+1 and sum to (n+1)(n+2)/2");
}

AffinePermutation::AffinePermutation(int rank, std::vector<std::int64_t> window, Unchecked)
    : rank_(rank), window_(std::move(window))
{
    assert(invariants_hold());
}

bool AffinePermutation::invariants_hold() const
{
    const std::int64_t m = rank_ + 1;
    std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
    std::int64_t sum = 0;
    for (std::int64_t v : window_) {
        const auto r = split_residue(v, m).first;
        if (seen[static_cast<std::size_t>(r)])
            return false;
        seen[static_cast<std::size_t>(r)] = true;
        sum += v;
    }
    return sum == m * (m + 1) / 2;
}

AffinePermutation AffinePermutation::identity(int rank)
{
    require_rank(rank);
    std::vector<std::int64_t> w(static_cast<std::size_t>(rank + 1));
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(rank, std::move(w), Unchecked{});
}

std::int64_t AffinePermutation::operator()(std::int64_t x) const
{
    const std::int64_t m = rank_ + 1;
    const auto [r, q] = split_residue(x, m);
    return window_[static_cast<std::size_t>(r - 1)] + m * q;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& other) const
{
    assert(rank_ == other.rank_);
    std::vector<std::int64_t> w(window_.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (*this)(other.window_[i]);
    return AffinePermutation(rank_, std::move(w), Unchecked{});
}

AffinePermutation AffinePermutation::inverse() const
{
    const std::int64_t m = rank_ + 1;
    std::vector<std::int64_t> w(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) {
        const auto [r, q] = split_residue(window_[i], m);
        w[static_cast<std::size_t>(r - 1)] = static_cast<std::int64_t>(i + 1) - m * q;
    }
    return AffinePermutation(rank_, std::move(w), Unchecked{});
}

bool AffinePermutation::is_identity() const
{
    for (std::size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<std::int64_t>(i + 1))
            return false;
    return true;
}

AffinePermutation generator_image(int i, int n)
{
    require_rank(n);
    if (i < 1 || i > n + 1)
        throw RankError("generator index outside 1..n+1");
    auto w = AffinePermutation::identity(n).window();
    if (i <= n) {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    } else {
        w[0] = 0;
        w[static_cast<std::size_t>(n)] = n + 2;
    }
    return AffinePermutation(n, std::move(w));
}

AffinePermutation eval_word(const Word& word)
{
    const int n = word.rank();
    auto result = AffinePermutation::identity(n);
    for (const auto& l : word.letters()) {
        if (l.coxeter()) {
            result = result * generator_image(l.index, n);
        } else {
            const Word def = g_word(l.index, n);
            const auto img = eval_word(l.sign > 0 ? def : def.inverse());
            result = result * img;
        }
    }
    return result;
}

FinitePermutation quotient_to_finite(const AffinePermutation& p)
{
    const std::int64_t m = p.rank() + 1;
    std::vector<int> images;
    images.reserve(p.window().size());
    for (std::int64_t v : p.window())
        images.push_back(static_cast<int>(split_residue(v, m).first));
    return FinitePermutation(std::move(images));
}

TranslationVector translation_vector(const AffinePermutation& p)
{
    const std::int64_t m = p.rank() + 1;
    const auto s_inv = quotient_to_finite(p).inverse();
    TranslationVector t{std::vector<std::int64_t>(static_cast<std::size_t>(m), 0)};
    for (int i = 1; i <= m; ++i) {
        const std::int64_t diff = p(s_inv(i)) - i;
        assert(diff % m == 0);
        t.coords[static_cast<std::size_t>(i - 1)] = diff / m;
    }
    return t;
}

AffinePermutation translation(int rank, const TranslationVector& t)
{
    const std::int64_t m = rank + 1;
    if (t.coords.size() != static_cast<std::size_t>(m))
        throw RankError("translation vector must have n+1 coordinates");
    std::vector<std::int64_t> w(static_cast<std::size_t>(m));
    for (std::int64_t i = 1; i <= m; ++i)
        w[static_cast<std::size_t>(i - 1)] = i + m * t.coords[static_cast<std::size_t>(i - 1)];
    return AffinePermutation(rank, std::move(w));
}

AffinePermutation finite_lift(int rank, const FinitePermutation& s)
{
    if (s.size() != rank + 1)
        throw RankError("finite permutation size must be n+1");
    std::vector<std::int64_t> w(s.images().begin(), s.images().end());
    return AffinePermutation(rank, std::move(w));
}

Word reduced_word(int rank, const FinitePermutation& s)
{
    if (s.size() != rank + 1)
        throw RankError("finite permutation size must be n+1");
    std::vector<int> line = s.images();
    std::vector<Letter> recorded;
    for (;;) {
        int descent = 0;
        for (int i = rank; i >= 1; --i)
            if (line[static_cast<std::size_t>(i - 1)] > line[static_cast<std::size_t>(i)]) {
                descent = i;
                break;
            }
        if (descent == 0)
            break;
        std::swap(line[static_cast<std::size_t>(descent - 1)], line[static_cast<std::size_t>(descent)]);
        recorded.push_back(Letter::a(descent));
    }
    std::reverse(recorded.begin(), recorded.end());
    return Word(rank, std::move(recorded));
}

} // namespace aspectra

std::size_t std::hash<aspectra::AffinePermutation>::operator()(const aspectra::AffinePermutation& p) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.window())
        h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
}
