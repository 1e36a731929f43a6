#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posyring/groebner.hpp"
#include "posyring/poly.hpp"

namespace posyring {

/// A point of K^n with every coordinate nonzero, the natural domain of
/// Laurent polynomial functions.
struct Point {
    std::vector<Rational> coordinates;
};

/// Multiply f by the monomial that lifts the minimum exponent of every
/// occurring variable to zero. The result is an ordinary polynomial with no
/// monomial factor common to all terms; clear_factor(0) = 0.
Polynomial clear_factor(const Polynomial& f);

/// Units of the Laurent ring are exactly the single monomials.
bool is_unit(const Polynomial& f);

/// Exact value of f at p; rejects zero coordinates.
Rational evaluate(const Polynomial& f, const Point& p);

/// True iff every generator vanishes at p (the empty set vacuously).
bool in_variety(const Point& p, const std::vector<Polynomial>& generators);

/// Explicit membership witness: with F the clear-factor map and s the
/// exponent scale (1 for Laurent queries),
///   (x_1...x_n)^lambda * F(scale_s(g)) = sum_i scale_s(cofactors[i]) * F(scale_s(f_i))
/// holds exactly. Cofactor exponents are stored divided by s, so scaling them
/// back by s gives ordinary polynomials.
struct Certificate {
    std::int64_t lambda = 0;
    unsigned long scale = 1;
    std::vector<Posynomial> cofactors;
};

struct MembershipResult {
    bool member = false;
    std::optional<Certificate> certificate;
};

/// Ideal membership in the Laurent ring: g is a member iff the normal form
/// of F(g) vanishes modulo the saturation of <F(f_1), ..., F(f_k)> by
/// x_1...x_n, computed as <F(f_i), 1 - y*x_1...x_n> intersected with K[x]
/// under lex order with y greatest. Certificate tracking roughly doubles
/// memory and is opt-in.
MembershipResult member(const Polynomial& g, const std::vector<Polynomial>& generators,
                        bool with_certificate = false);

/// Re-multiplies a certificate and checks its identity exactly.
bool verify_certificate(const Posynomial& g, const std::vector<Posynomial>& generators,
                        const Certificate& certificate);

/// True iff 1 is not a member, i.e. the ideal is proper. Over Q this is the
/// algebraic test only: a proper ideal may still have no rational points
/// (e.g. <x^2 + 1>).
bool is_proper(const std::vector<Polynomial>& generators);

/// Reduced basis of <F(f_i)> : (x_1...x_n)^inf in the polynomial ring, in the
/// variables of `order`.
GroebnerBasis saturation_basis(const std::vector<Polynomial>& generators,
                               const MonomialOrder& order);

}  // namespace posyring
