#pragma once

#include <cstdint>
#include <utility>

#include "posyring/poly.hpp"

namespace posyring {

/// Helpers for arity-1 polynomials over Q with exponents >= 0.

std::int64_t univariate_degree(const Polynomial& f);  // f != 0

/// f = q*g + r with deg r < deg g; g must be nonzero.
std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial univariate_gcd(Polynomial a, Polynomial b);

/// Exact evaluation; `a` may be zero only when every exponent is >= 0.
Rational univariate_eval(const Polynomial& f, const Rational& a);

}  // namespace posyring
