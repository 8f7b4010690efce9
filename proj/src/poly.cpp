#include "aspectra/poly.hpp"

#include "aspectra/error.hpp"
#include "aspectra/modular.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

namespace aspectra {

namespace {

int degree_of(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0, [](int s, std::uint16_t x) { return s + x; });
}

Exponents add_exponents(const Exponents& a, const Exponents& b)
{
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return out;
}

} // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const
{
    const int da = degree_of(a);
    const int db = degree_of(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c)
{
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index)
{
    if (index >= arity)
        throw ArityMismatch("variable index exceeds arity");
    MultiPoly p(arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

int MultiPoly::total_degree() const
{
    return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first);
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(arity_, 0)); }

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != arity_)
        throw ArityMismatch("exponent vector length differs from arity");
    Rational value = c;
    value.canonicalize();
    if (value == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& other) const
{
    if (arity_ != other.arity_)
        throw ArityMismatch("polynomial arities differ: " + std::to_string(arity_) + " vs " +
                            std::to_string(other.arity_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_arity(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_arity(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const
{
    MultiPoly out = *this;
    out += other;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const
{
    MultiPoly out = *this;
    out -= other;
    return out;
}

MultiPoly MultiPoly::operator-() const { return scale(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& other) const
{
    check_arity(other);
    MultiPoly out(arity_);
    Rational prod;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            prod = ca * cb;
            out.add_term(add_exponents(ea, eb), prod);
        }
    return out;
}

MultiPoly MultiPoly::scale(const Rational& s) const
{
    MultiPoly out(arity_);
    Rational factor = s;
    factor.canonicalize();
    if (factor == 0)
        return out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
    return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const
{
    check_arity(divisor);
    if (divisor.is_zero())
        throw ArityMismatch("division by the zero polynomial");
    MultiPoly remainder = *this;
    MultiPoly quotient(arity_);
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    while (!remainder.is_zero()) {
        const auto [re, rc] = *remainder.terms_.rbegin();
        Exponents shift(arity_);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (re[i] < lead_e[i])
                throw ArityMismatch("polynomial division is not exact");
            shift[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
        }
        const Rational factor = rc / lead_c;
        quotient.add_term(shift, factor);
        for (const auto& [e, c] : divisor.terms_)
            remainder.add_term(add_exponents(e, shift), -(c * factor));
    }
    return quotient;
}

Rational MultiPoly::eval(std::span<const Rational> point) const
{
    if (point.size() != arity_)
        throw ArityMismatch("evaluation point length differs from arity");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < arity_; ++i)
            for (std::uint16_t k = 0; k < e[i]; ++k)
                term *= point[i];
        sum += term;
    }
    return sum;
}

std::uint64_t MultiPoly::eval_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const
{
    if (point.size() != arity_)
        throw ArityMismatch("evaluation point length differs from arity");
    std::uint64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t term = modp::reduce(c, prime);
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i] > 0)
                term = modp::mul(term, modp::pow(point[i], e[i], prime), prime);
        sum = modp::add(sum, term, prime);
    }
    return sum;
}

MultiPoly MultiPoly::restrict_to(std::span<const std::size_t> keep) const
{
    MultiPoly out(keep.size());
    for (const auto& [e, c] : terms_) {
        std::size_t kept_degree = 0;
        Exponents ne(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) {
            if (keep[k] >= arity_)
                throw ArityMismatch("restricted variable index exceeds arity");
            ne[k] = e[keep[k]];
            kept_degree += ne[k];
        }
        if (kept_degree == static_cast<std::size_t>(degree_of(e)))
            out.add_term(ne, c);
    }
    return out;
}

Json MultiPoly::to_json() const
{
    Json terms = Json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back(Json{{"exp", e}, {"coeff", to_fraction_string(c)}});
    return Json{{"arity", arity_}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const Json& j)
{
    MultiPoly p(j.at("arity").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Exponents>(), parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const bool unit = degree_of(e) > 0 && mag == 1;
        if (!unit)
            os << mag.get_str();
        bool need_star = !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (need_star ? "*" : "") << "x" << (i + 1);
            if (e[i] > 1)
                os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), entries_(dim * dim, MultiPoly(arity))
{
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const
{
    if (dim_ != other.dim_ || arity_ != other.arity_)
        throw ArityMismatch("polynomial matrix shapes differ");
    PolyMatrix out(dim_, arity_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            if ((*this)(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!other(k, j).is_zero())
                    out(i, j) += (*this)(i, k) * other(k, j);
        }
    return out;
}

int PolyMatrix::max_entry_degree() const
{
    int d = 0;
    for (const auto& e : entries_)
        d = std::max(d, e.total_degree());
    return d;
}

namespace {

MultiPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row)
{
    const std::size_t remaining = cols.size();
    if (remaining == 0)
        return MultiPoly::constant(m.arity(), 1);
    if (remaining == 1)
        return m(row, cols[0]);
    MultiPoly det(m.arity());
    for (std::size_t k = 0; k < remaining; ++k) {
        const MultiPoly& entry = m(row, cols[k]);
        if (entry.is_zero())
            continue;
        const std::size_t col = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        MultiPoly minor = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        if (minor.is_zero())
            continue;
        if (k % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

} // namespace

MultiPoly det_cofactor(const PolyMatrix& m)
{
    std::vector<std::size_t> cols(m.dim());
    std::iota(cols.begin(), cols.end(), 0);
    return cofactor_rec(m, cols, 0);
}

MultiPoly det_bareiss(const PolyMatrix& input)
{
    const std::size_t n = input.dim();
    if (n == 0)
        return MultiPoly::constant(input.arity(), 1);
    PolyMatrix m = input;

    // Scale each row to a primitive integer row; det(input) = det(m) / product.
    Rational row_factor_product = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer den_lcm = 1;
        Integer num_gcd = 0;
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& [e, coeff] : m(r, c).terms()) {
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.get_num().get_mpz_t());
            }
        if (num_gcd == 0)
            return MultiPoly(input.arity());
        const Rational factor = Rational(den_lcm) / Rational(num_gcd);
        if (factor != 1) {
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = m(r, c).scale(factor);
            row_factor_product *= factor;
        }
    }

    int sign = 1;
    MultiPoly previous = MultiPoly::constant(input.arity(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero())
                ++swap_row;
            if (swap_row == n)
                return MultiPoly(input.arity());
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly value = m(k, k) * m(i, j);
                if (!m(i, k).is_zero() && !m(k, j).is_zero())
                    value -= m(i, k) * m(k, j);
                m(i, j) = k == 0 ? std::move(value) : value.divide_exact(previous);
            }
        previous = m(k, k);
    }
    MultiPoly det = m(n - 1, n - 1);
    Rational scale = Rational(sign) / row_factor_product;
    return det.scale(scale);
}

MultiPoly det_symbolic(const PolyMatrix& m) { return m.dim() <= 4 ? det_cofactor(m) : det_bareiss(m); }

std::uint64_t det_mod(const PolyMatrix& m, std::span<const std::uint64_t> point, std::uint64_t prime)
{
    const std::size_t n = m.dim();
    std::vector<std::uint64_t> values(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            values[r * n + c] = m(r, c).eval_mod(point, prime);
    return modp::determinant(std::move(values), n, prime);
}

PitResult pit_equal(const PolyMatrix& a, const PolyMatrix& b, std::size_t trials, std::uint64_t prime, Rng& rng)
{
    if (a.arity() != b.arity())
        throw ArityMismatch("polynomial matrices have different arity");
    const int degree = std::max(static_cast<int>(a.dim()) * std::max(a.max_entry_degree(), 1),
                                static_cast<int>(b.dim()) * std::max(b.max_entry_degree(), 1));
    if (!modp::is_prime(prime))
        throw ArityMismatch("PIT modulus " + std::to_string(prime) + " is not prime");
    if (prime <= static_cast<std::uint64_t>(degree))
        throw ArityMismatch("prime too small relative to degree " + std::to_string(degree));

    PitResult result;
    result.trials = trials;
    result.prime = prime;
    std::vector<std::uint64_t> point(a.arity());
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& x : point)
            x = rng.below(prime);
        if (det_mod(a, point, prime) != det_mod(b, point, prime)) {
            result.equal = false;
            result.witness = point;
            result.false_equal_bound = 0.0;
            return result;
        }
    }
    result.false_equal_bound =
        std::pow(static_cast<double>(degree) / static_cast<double>(prime), static_cast<double>(trials));
    return result;
}

} // namespace aspectra
