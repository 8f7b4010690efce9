#pragma once

#include <gmpxx.h>

#include <string>

namespace aspectra {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", including integers ("3/1"), so serialized forms are uniform.
inline std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Short human form: "3", "-1/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text)
{
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

} // namespace aspectra
