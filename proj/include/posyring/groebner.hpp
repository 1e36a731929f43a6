#pragma once

#include <string>
#include <vector>

#include "posyring/order.hpp"
#include "posyring/poly.hpp"

namespace posyring {

/// Multivariate division: f = sum quotients[i] * divisors[i] + remainder,
/// with no remainder term divisible by any divisor's leading term.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

/// S(f, g) = (L/lt f) f - (L/lt g) g where L is the lcm of the leading
/// monomials; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced Groebner basis: elements monic, mutually irreducible, sorted
/// ascending by leading monomial. Equal ideals produce identical bases.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

/// Like buchberger, but also expresses every basis element as an explicit
/// combination of the input generators: basis.elements[j] equals
/// sum_i representations[j][i] * generators[i]. Roughly doubles the memory
/// footprint; used for membership certificates.
struct ExtendedGroebner {
    GroebnerBasis basis;
    std::vector<std::vector<Polynomial>> representations;
};

ExtendedGroebner buchberger_extended(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order);

/// Subset of a lex basis involving only the kept variables, re-indexed into
/// the smaller ring. `keep` must be a prefix of the basis order's variable
/// sequence (dropped variables are greater than every kept one).
GroebnerBasis eliminate(const GroebnerBasis& basis, const std::vector<std::string>& keep);

/// Normal form of f modulo the basis; zero iff f lies in the ideal.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace posyring
