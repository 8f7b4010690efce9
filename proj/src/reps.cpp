#include "aspectra/reps.hpp"

#include "aspectra/error.hpp"
#include "aspectra/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace aspectra {

MatrixRep::MatrixRep(int rank, std::vector<Matrix> images, std::string name)
    : rank_(rank), dim_(0), name_(std::move(name)), images_(std::move(images))
{
    require_rank(rank);
    if (images_.size() != static_cast<std::size_t>(rank + 1))
        throw InvalidRepresentation("expected " + std::to_string(rank + 1) + " generator images, got " +
                                    std::to_string(images_.size()));
    dim_ = images_.front().rows();
    if (dim_ == 0)
        throw InvalidRepresentation("zero-dimensional representation");
    validate();
    for (int j = 1; j <= rank; ++j) {
        lattice_.push_back(eval(g_word(j, rank)));
        lattice_inverse_.push_back(eval(g_word(j, rank).inverse()));
    }
}

void MatrixRep::validate() const
{
    const int m = rank_ + 1;
    for (int i = 1; i <= m; ++i) {
        const Matrix& a = image(i);
        if (a.rows() != dim_ || a.cols() != dim_)
            throw InvalidRepresentation("image of a" + std::to_string(i) + " has the wrong shape");
        if (!(a * a).is_identity())
            throw InvalidRepresentation("image of a" + std::to_string(i) + " is not an involution");
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const Matrix prod = image(i) * image(j);
            const unsigned order = cycle_adjacent(i, j, rank_) ? 3 : 2;
            if (!prod.power(order).is_identity())
                throw InvalidRepresentation("relation (a" + std::to_string(i) + " a" + std::to_string(j) + ")^" +
                                            std::to_string(order) + " = 1 fails");
        }
}

const Matrix& MatrixRep::lattice_image(int j, int sign) const
{
    if (j < 1 || j > rank_)
        throw RankError("lattice index " + std::to_string(j) + " outside 1.." + std::to_string(rank_));
    const auto idx = static_cast<std::size_t>(j - 1);
    return sign > 0 ? lattice_[idx] : lattice_inverse_[idx];
}

const Matrix& MatrixRep::letter_image(const Letter& letter) const
{
    return letter.coxeter() ? image(letter.index) : lattice_image(letter.index, letter.sign);
}

Matrix MatrixRep::eval(const Word& word) const
{
    if (word.rank() != rank_)
        throw RankError("word rank " + std::to_string(word.rank()) + " differs from representation rank " +
                        std::to_string(rank_));
    Matrix out = Matrix::identity(dim_);
    for (const Letter& letter : word.letters())
        out = out * letter_image(letter);
    return out;
}

Matrix MatrixRep::eval_expanded(const Word& word) const { return eval(expand_lattice(word)); }

void MatrixRep::set_lattice_images(std::vector<Matrix> images)
{
    if (images.size() != static_cast<std::size_t>(rank_))
        throw InvalidRepresentation("expected one image per lattice generator");
    for (int j = 1; j <= rank_; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        if (!(images[idx] == lattice_[idx]))
            throw InvalidRepresentation("direct image of g" + std::to_string(j) +
                                        " disagrees with its defining word");
        lattice_inverse_[idx] = images[idx].inverse();
    }
    lattice_ = std::move(images);
}

Rational character(const MatrixRep& rho, const Word& word) { return rho.eval(word).trace(); }

MatrixRep tits_rep(int n)
{
    require_rank(n);
    const auto m = static_cast<std::size_t>(n + 1);
    std::vector<Matrix> images;
    for (int i = 1; i <= n + 1; ++i) {
        Matrix a = Matrix::identity(m);
        const auto row = static_cast<std::size_t>(i - 1);
        a(row, row) = -1;
        for (int j = 1; j <= n + 1; ++j)
            if (j != i && cycle_adjacent(i, j, n))
                a(row, static_cast<std::size_t>(j - 1)) = 1;
        images.push_back(std::move(a));
    }
    return MatrixRep(n, std::move(images), "tits");
}

namespace {

std::string_view quotient_name(QuotientRep kind)
{
    switch (kind) {
    case QuotientRep::Trivial: return "trivial";
    case QuotientRep::Sign: return "sign";
    case QuotientRep::Standard: return "standard";
    case QuotientRep::Natural: return "natural";
    case QuotientRep::Regular: return "regular";
    }
    return "?";
}

int permutation_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            inversions += perm[i] > perm[j];
    return inversions % 2 == 0 ? 1 : -1;
}

Matrix natural_matrix(const std::vector<int>& perm)
{
    Matrix p(perm.size(), perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x)
        p(static_cast<std::size_t>(perm[x] - 1), x) = 1;
    return p;
}

// Basis f_i = e_i - e_{i+1}; e_a - e_b = f_a + ... + f_{b-1} for a < b.
Matrix standard_matrix(const std::vector<int>& perm)
{
    const std::size_t d = perm.size() - 1;
    Matrix s(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const int a = perm[i];
        const int b = perm[i + 1];
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const int sign = a < b ? 1 : -1;
        for (int k = lo; k < hi; ++k)
            s(static_cast<std::size_t>(k - 1), i) += sign;
    }
    return s;
}

Matrix regular_matrix(const std::vector<int>& perm)
{
    std::vector<int> current(perm.size());
    std::iota(current.begin(), current.end(), 1);
    std::vector<std::vector<int>> elements;
    do
        elements.push_back(current);
    while (std::next_permutation(current.begin(), current.end()));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < elements.size(); ++k)
        index.emplace(elements[k], k);
    Matrix r(elements.size(), elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) {
        std::vector<int> prod(perm.size());
        for (std::size_t x = 0; x < perm.size(); ++x)
            prod[x] = perm[static_cast<std::size_t>(elements[k][x] - 1)];
        r(index.at(prod), k) = 1;
    }
    return r;
}

} // namespace

Matrix quotient_matrix(const std::vector<int>& perm, QuotientRep kind)
{
    switch (kind) {
    case QuotientRep::Trivial: return Matrix{{1}};
    case QuotientRep::Sign: return Matrix{{permutation_sign(perm)}};
    case QuotientRep::Standard: return standard_matrix(perm);
    case QuotientRep::Natural: return natural_matrix(perm);
    case QuotientRep::Regular: return regular_matrix(perm);
    }
    throw InvalidRepresentation("unknown quotient representation");
}

MatrixRep perm_quotient_rep(int n, QuotientRep kind)
{
    require_rank(n);
    if (kind == QuotientRep::Regular && n > 3)
        throw InvalidRepresentation("regular representation is limited to n <= 3");
    std::vector<Matrix> images;
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(n + 1));
        std::iota(perm.begin(), perm.end(), 1);
        if (i <= n)
            std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
        else
            std::swap(perm.front(), perm.back());
        images.push_back(quotient_matrix(perm, kind));
    }
    MatrixRep rho(n, std::move(images), "perm:" + std::string(quotient_name(kind)));
    rho.set_lattice_images(std::vector<Matrix>(static_cast<std::size_t>(n), Matrix::identity(rho.dim())));
    return rho;
}

MatrixRep perm_quotient_rep(int n, std::string_view name)
{
    for (QuotientRep kind : {QuotientRep::Trivial, QuotientRep::Sign, QuotientRep::Standard, QuotientRep::Natural,
                             QuotientRep::Regular})
        if (name == quotient_name(kind))
            return perm_quotient_rep(n, kind);
    throw InvalidRepresentation("unknown quotient representation '" + std::string(name) + "'");
}

namespace {

void require_same_rank(const MatrixRep& r, const MatrixRep& s)
{
    if (r.rank() != s.rank())
        throw InvalidRepresentation("representations have different ranks");
}

template <class Combine>
MatrixRep combine(const MatrixRep& r, const MatrixRep& s, Combine op, const std::string& name)
{
    require_same_rank(r, s);
    std::vector<Matrix> images;
    for (int i = 1; i <= r.rank() + 1; ++i)
        images.push_back(op(r.image(i), s.image(i)));
    return MatrixRep(r.rank(), std::move(images), name);
}

} // namespace

MatrixRep direct_sum(const MatrixRep& r, const MatrixRep& s)
{
    return combine(r, s, block_diagonal, "sum(" + r.name() + "," + s.name() + ")");
}

MatrixRep tensor(const MatrixRep& r, const MatrixRep& s)
{
    return combine(r, s, kronecker, "tensor(" + r.name() + "," + s.name() + ")");
}

MatrixRep conjugate(const MatrixRep& r, const Matrix& c)
{
    if (c.rows() != r.dim() || c.cols() != r.dim())
        throw InvalidRepresentation("conjugating matrix has the wrong shape");
    if (!c.invertible())
        throw InvalidRepresentation("conjugating matrix is singular");
    const Matrix c_inv = c.inverse();
    std::vector<Matrix> images;
    for (int i = 1; i <= r.rank() + 1; ++i)
        images.push_back(c_inv * r.image(i) * c);
    return MatrixRep(r.rank(), std::move(images), "conj(" + r.name() + ")");
}

Matrix random_unimodular(std::size_t dim, Rng& rng)
{
    Matrix c = Matrix::identity(dim);
    if (dim == 1) {
        c(0, 0) = rng.below(2) == 0 ? 1 : -1;
        return c;
    }
    for (std::size_t step = 0; step < 3 * dim; ++step) {
        const std::size_t i = rng.below(dim);
        std::size_t j = rng.below(dim - 1);
        if (j >= i)
            ++j;
        const int k = rng.below(2) == 0 ? 1 : -1;
        for (std::size_t col = 0; col < dim; ++col)
            c(i, col) += k * c(j, col);
    }
    return c;
}

Matrix random_invertible(std::size_t dim, Rng& rng)
{
    for (;;) {
        Matrix c(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t col = 0; col < dim; ++col)
                c(r, col) = Rational(rng.between(-3, 3), rng.between(1, 3));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t col = 0; col < dim; ++col)
                c(r, col).canonicalize();
        if (c.invertible())
            return c;
    }
}

namespace {

class SpecParser {
public:
    SpecParser(std::string_view text, int n) : text_(text), n_(n) {}

    MatrixRep parse()
    {
        MatrixRep rho = spec();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return rho;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("rep spec: " + what, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string identifier()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t integer()
    {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (UINT64_MAX - 9) / 10)
                fail("seed too large");
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_)
            fail("expected an integer");
        return value;
    }

    MatrixRep spec()
    {
        const std::size_t start = pos_;
        const std::string head = identifier();
        if (head == "tits")
            return tits_rep(n_);
        if (head == "perm") {
            expect(':');
            const std::string name = identifier();
            try {
                return perm_quotient_rep(n_, name);
            } catch (const InvalidRepresentation& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (head == "sum") {
            expect('(');
            MatrixRep acc = spec();
            std::string name = "sum(" + acc.name();
            while (accept(',')) {
                MatrixRep next = spec();
                name += "," + next.name();
                acc = direct_sum(acc, next);
            }
            expect(')');
            return MatrixRep(n_, images_of(acc), name + ")");
        }
        if (head == "tensor") {
            expect('(');
            MatrixRep left = spec();
            expect(',');
            MatrixRep right = spec();
            expect(')');
            return tensor(left, right);
        }
        if (head == "conj") {
            expect('(');
            MatrixRep inner = spec();
            expect(',');
            if (identifier() != "seed")
                fail("expected seed=");
            expect('=');
            const std::uint64_t seed = integer();
            expect(')');
            Rng rng(seed);
            MatrixRep out = conjugate(inner, random_unimodular(inner.dim(), rng));
            return MatrixRep(n_, images_of(out),
                             "conj(" + inner.name() + ",seed=" + std::to_string(seed) + ")");
        }
        pos_ = start;
        fail("unknown representation '" + head + "'");
    }

    std::vector<Matrix> images_of(const MatrixRep& rho) const
    {
        std::vector<Matrix> images;
        for (int i = 1; i <= n_ + 1; ++i)
            images.push_back(rho.image(i));
        return images;
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

MatrixRep parse_rep_spec(std::string_view text, int n)
{
    require_rank(n);
    return SpecParser(text, n).parse();
}

std::vector<MatrixRep> battery(int n)
{
    return {tits_rep(n), perm_quotient_rep(n, QuotientRep::Trivial), perm_quotient_rep(n, QuotientRep::Sign),
            perm_quotient_rep(n, QuotientRep::Standard),
            parse_rep_spec("sum(perm:trivial,perm:sign,perm:standard)", n)};
}

} // namespace aspectra
