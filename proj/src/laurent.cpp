#include "posyring/laurent.hpp"

#include <algorithm>
#include <limits>

#include "posyring/posy.hpp"

namespace posyring {

namespace {

Polynomial embed(const Polynomial& f) {
    Polynomial r(f.arity() + 1);
    for (const auto& [e, c] : f.terms()) {
        IntExponents e2 = e;
        e2.push_back(0);
        r.add_term(std::move(e2), c);
    }
    return r;
}

/// 1 - y * x_1...x_n in the ring with y appended as the greatest variable.
Polynomial saturation_relation(std::size_t n) {
    Polynomial q(n + 1);
    q.add_term(IntExponents(n + 1, 0), Rational(1));
    q.add_term(IntExponents(n + 1, 1), Rational(-1));
    return q;
}

void check_arities(const Polynomial& g, const std::vector<Polynomial>& gens) {
    for (const auto& f : gens)
        if (f.arity() != g.arity())
            throw arity_mismatch("member: generator arity differs from the query");
}

}  // namespace

Polynomial clear_factor(const Polynomial& f) {
    if (f.is_zero()) return f;
    const std::size_t n = f.arity();
    IntExponents mins(n, std::numeric_limits<std::int64_t>::max());
    for (const auto& [e, c] : f.terms())
        for (std::size_t v = 0; v < n; ++v) mins[v] = std::min(mins[v], e[v]);
    Polynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        IntExponents e2(n);
        for (std::size_t v = 0; v < n; ++v) e2[v] = e[v] - mins[v];
        r.add_term(std::move(e2), c);
    }
    return r;
}

bool is_unit(const Polynomial& f) { return f.term_count() == 1; }

Rational evaluate(const Polynomial& f, const Point& p) {
    if (p.coordinates.size() != f.arity())
        throw arity_mismatch("evaluate: point dimension differs from the ring arity");
    for (const auto& a : p.coordinates)
        if (a.is_zero()) throw domain_error("evaluate: zero coordinate");
    Rational acc(0);
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v) t *= p.coordinates[v].pow(e[v]);
        acc += t;
    }
    return acc;
}

bool in_variety(const Point& p, const std::vector<Polynomial>& generators) {
    for (const auto& a : p.coordinates)
        if (a.is_zero()) throw domain_error("in_variety: zero coordinate");
    for (const auto& f : generators)
        if (!evaluate(f, p).is_zero()) return false;
    return true;
}

GroebnerBasis saturation_basis(const std::vector<Polynomial>& generators,
                               const MonomialOrder& order) {
    std::vector<Polynomial> inputs;
    inputs.reserve(generators.size() + 1);
    for (const auto& f : generators) {
        if (f.arity() != order.arity())
            throw arity_mismatch("saturation_basis: generator arity differs from the order");
        inputs.push_back(f.is_zero() ? Polynomial(order.arity() + 1)
                                     : embed(clear_factor(f)));
    }
    inputs.push_back(saturation_relation(order.arity()));
    GroebnerBasis full = buchberger(inputs, order.with_elimination_variable());
    return eliminate(full, order.variables);
}

MembershipResult member(const Polynomial& g, const std::vector<Polynomial>& generators,
                        bool with_certificate) {
    check_arities(g, generators);
    const std::size_t n = g.arity();
    const MonomialOrder full_order = MonomialOrder::standard(n).with_elimination_variable();

    std::vector<Polynomial> inputs;
    inputs.reserve(generators.size() + 1);
    for (const auto& f : generators)
        inputs.push_back(f.is_zero() ? Polynomial(n + 1) : embed(clear_factor(f)));
    inputs.push_back(saturation_relation(n));

    ExtendedGroebner ext;
    if (with_certificate) {
        ext = buchberger_extended(inputs, full_order);
    } else {
        ext.basis = buchberger(inputs, full_order);
    }

    // y is the greatest variable, so an element is y-free iff its leading
    // term is
    std::vector<std::size_t> y_free;
    for (std::size_t i = 0; i < ext.basis.elements.size(); ++i)
        if (ext.basis.elements[i].leading_exponents()[n] == 0) y_free.push_back(i);

    std::vector<Polynomial> b1;
    b1.reserve(y_free.size());
    for (std::size_t i : y_free) b1.push_back(ext.basis.elements[i]);

    const Polynomial fg = embed(clear_factor(g));
    DivisionResult div = divide(fg, b1, full_order);

    MembershipResult out;
    out.member = div.remainder.is_zero();
    if (!out.member || !with_certificate) return out;

    // F(g) = sum_j q_j * b1_j, and each b1_j is a tracked combination of the
    // inputs, so collect one cofactor per original generator (the saturation
    // relation's cofactor vanishes under the substitution below)
    std::vector<Polynomial> combined(generators.size(), Polynomial(n + 1));
    for (std::size_t j = 0; j < b1.size(); ++j) {
        if (div.quotients[j].is_zero()) continue;
        const auto& rep = ext.representations[y_free[j]];
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (!rep[i].is_zero()) combined[i] += div.quotients[j] * rep[i];
    }

    // substitute y = (x_1...x_n)^{-1}: a term c x^a y^e becomes c x^{a - e*1};
    // lambda is the least uniform power making every cofactor a polynomial
    std::int64_t lambda = 0;
    for (const auto& h : combined)
        for (const auto& [e, c] : h.terms())
            for (std::size_t v = 0; v < n; ++v) lambda = std::max(lambda, e[n] - e[v]);

    Certificate cert;
    cert.lambda = lambda;
    cert.scale = 1;
    cert.cofactors.reserve(generators.size());
    for (const auto& h : combined) {
        Polynomial shifted(n);
        for (const auto& [e, c] : h.terms()) {
            IntExponents e2(n);
            for (std::size_t v = 0; v < n; ++v) e2[v] = e[v] - e[n] + lambda;
            shifted.add_term(std::move(e2), c);
        }
        cert.cofactors.push_back(to_posynomial(shifted));
    }
    out.certificate = std::move(cert);
    return out;
}

bool verify_certificate(const Posynomial& g, const std::vector<Posynomial>& generators,
                        const Certificate& certificate) {
    if (certificate.cofactors.size() != generators.size()) return false;
    const std::size_t n = g.arity();
    const Rational s(static_cast<long>(certificate.scale));

    Polynomial fg = clear_factor(to_integer_exponents(scale_exponents(g, s)));
    Polynomial lhs = fg.times_term(IntExponents(n, certificate.lambda), Rational(1));

    Polynomial rhs(n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        Posynomial scaled_cof = scale_exponents(certificate.cofactors[i], s);
        if (!has_integer_exponents(scaled_cof)) return false;
        Polynomial h = to_integer_exponents(scaled_cof);
        if (!has_nonnegative_exponents(h)) return false;
        Polynomial ff = clear_factor(to_integer_exponents(scale_exponents(generators[i], s)));
        rhs += h * ff;
    }
    return lhs == rhs;
}

bool is_proper(const std::vector<Polynomial>& generators) {
    if (generators.empty()) return true;  // the zero ideal
    const Polynomial one = Polynomial::constant(generators.front().arity(), Rational(1));
    return !member(one, generators).member;
}

}  // namespace posyring
