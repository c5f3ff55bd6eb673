#pragma once

#include <gmpxx.h>

#include <string>

namespace cayley {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

/// Throws std::domain_error if q is not integral.
Integer to_integer(const Rational& q);

}  // namespace cayley
