#include "posyring/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace posyring {

namespace {

void check_in_polynomial_ring(const Polynomial& f, const MonomialOrder& order, const char* who) {
    if (f.arity() != order.arity())
        throw arity_mismatch(std::string(who) + ": arity does not match the monomial order");
    if (!has_nonnegative_exponents(f))
        throw domain_error(std::string(who) + ": negative exponent outside the polynomial ring");
}

bool exponents_divide(const IntExponents& d, const IntExponents& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

IntExponents exponents_lcm(const IntExponents& a, const IntExponents& b) {
    IntExponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

IntExponents exponents_diff(const IntExponents& a, const IntExponents& b) {
    IntExponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

struct DivisorSet {
    std::vector<const Polynomial*> polys;
    std::vector<const std::vector<Polynomial>*> reps;  // empty when not tracking
};

/// Full normal form of h against the divisor set. If `rep` is nonnull it is
/// updated so that (returned remainder) = sum rep[i] * generator[i] stays true,
/// assuming it held for h on entry.
Polynomial normal_form(Polynomial h, const DivisorSet& divisors, std::vector<Polynomial>* rep) {
    Polynomial r(h.arity());
    while (!h.is_zero()) {
        const auto& [he, hc] = h.leading();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.polys.size(); ++k) {
            const Polynomial& d = *divisors.polys[k];
            const auto& [de, dc] = d.leading();
            if (!exponents_divide(de, he)) continue;
            IntExponents t = exponents_diff(he, de);
            Rational c = hc / dc;
            h -= d.times_term(t, c);
            if (rep) {
                const auto& drep = *divisors.reps[k];
                for (std::size_t i = 0; i < rep->size(); ++i)
                    (*rep)[i] -= drep[i].times_term(t, c);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = hc;
            r.add_term(he, c);
            h.add_term(he, -c);
        }
    }
    return r;
}

struct GBState {
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> reps;
    bool track = false;

    DivisorSet all() const {
        DivisorSet d;
        d.polys.reserve(basis.size());
        for (const auto& b : basis) d.polys.push_back(&b);
        if (track)
            for (const auto& r : reps) d.reps.push_back(&r);
        return d;
    }
};

struct PairLess {
    bool operator()(const std::tuple<IntExponents, std::size_t, std::size_t>& a,
                    const std::tuple<IntExponents, std::size_t, std::size_t>& b) const {
        int c = lex_compare(std::get<0>(a), std::get<0>(b));
        if (c != 0) return c < 0;
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) < std::get<2>(b);
    }
};

ExtendedGroebner buchberger_core(const std::vector<Polynomial>& generators,
                                 const MonomialOrder& order, bool track) {
    for (const auto& g : generators)
        if (!g.is_zero()) check_in_polynomial_ring(g, order, "buchberger");

    GBState st;
    st.track = track;

    std::set<std::tuple<IntExponents, std::size_t, std::size_t>, PairLess> pending;

    auto push_pairs = [&](std::size_t j) {
        const IntExponents& ej = st.basis[j].leading_exponents();
        for (std::size_t i = 0; i < j; ++i) {
            const IntExponents& ei = st.basis[i].leading_exponents();
            IntExponents l = exponents_lcm(ei, ej);
            // coprime leading monomials: the S-polynomial reduces to zero
            bool coprime = true;
            for (std::size_t v = 0; v < l.size() && coprime; ++v)
                if (ei[v] > 0 && ej[v] > 0) coprime = false;
            if (!coprime) pending.insert({std::move(l), i, j});
        }
    };

    auto append = [&](Polynomial h, std::vector<Polynomial> rep) {
        Rational lc = h.leading_coefficient();
        h.scale(lc.inverse());
        if (track)
            for (auto& p : rep) p.scale(lc.inverse());
        st.basis.push_back(std::move(h));
        st.reps.push_back(std::move(rep));
        push_pairs(st.basis.size() - 1);
    };

    auto unit_rep = [&](std::size_t idx) {
        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(generators.size(), Polynomial(order.arity()));
            rep[idx] = Polynomial::constant(order.arity(), Rational(1));
        }
        return rep;
    };

    for (std::size_t idx = 0; idx < generators.size(); ++idx) {
        if (generators[idx].is_zero()) continue;
        auto rep = unit_rep(idx);
        Polynomial h = normal_form(generators[idx], st.all(), track ? &rep : nullptr);
        if (!h.is_zero()) append(std::move(h), std::move(rep));
    }

    while (!pending.empty()) {
        auto [l, i, j] = *pending.begin();
        pending.erase(pending.begin());

        const Polynomial& f = st.basis[i];
        const Polynomial& g = st.basis[j];
        IntExponents tf = exponents_diff(l, f.leading_exponents());
        IntExponents tg = exponents_diff(l, g.leading_exponents());
        Rational cf = f.leading_coefficient().inverse();
        Rational cg = g.leading_coefficient().inverse();
        Polynomial s = f.times_term(tf, cf) - g.times_term(tg, cg);

        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(generators.size(), Polynomial(order.arity()));
            for (std::size_t c = 0; c < rep.size(); ++c)
                rep[c] = st.reps[i][c].times_term(tf, cf) - st.reps[j][c].times_term(tg, cg);
        }

        Polynomial h = normal_form(std::move(s), st.all(), track ? &rep : nullptr);
        if (!h.is_zero()) append(std::move(h), std::move(rep));
    }

    // minimal basis: drop elements whose leading term another one divides
    std::vector<std::size_t> by_lt(st.basis.size());
    for (std::size_t i = 0; i < by_lt.size(); ++i) by_lt[i] = i;
    std::sort(by_lt.begin(), by_lt.end(), [&](std::size_t a, std::size_t b) {
        int c = lex_compare(st.basis[a].leading_exponents(), st.basis[b].leading_exponents());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : by_lt) {
        bool redundant = false;
        for (std::size_t k : kept)
            if (exponents_divide(st.basis[k].leading_exponents(),
                                 st.basis[idx].leading_exponents())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(idx);
    }

    std::vector<Polynomial> final_basis;
    std::vector<std::vector<Polynomial>> final_reps;
    for (std::size_t idx : kept) {
        final_basis.push_back(st.basis[idx]);
        if (track) final_reps.push_back(st.reps[idx]);
    }

    // interreduce: leading terms are already pairwise indivisible and stay
    // put, so one sweep with in-place updates yields the reduced basis
    for (std::size_t t = 0; t < final_basis.size(); ++t) {
        DivisorSet others;
        for (std::size_t k = 0; k < final_basis.size(); ++k) {
            if (k == t) continue;
            others.polys.push_back(&final_basis[k]);
            if (track) others.reps.push_back(&final_reps[k]);
        }
        std::vector<Polynomial> rep;
        if (track) rep = final_reps[t];
        Polynomial nf = normal_form(final_basis[t], others, track ? &rep : nullptr);
        Rational lc = nf.leading_coefficient();
        nf.scale(lc.inverse());
        if (track) {
            for (auto& p : rep) p.scale(lc.inverse());
            final_reps[t] = std::move(rep);
        }
        final_basis[t] = std::move(nf);
    }

    ExtendedGroebner out;
    out.basis.order = order;
    out.basis.elements = std::move(final_basis);
    out.representations = std::move(final_reps);
    return out;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
    check_in_polynomial_ring(f, order, "divide");
    DivisorSet set;
    for (const auto& d : divisors) {
        if (d.is_zero()) throw domain_error("divide: zero divisor in list");
        check_in_polynomial_ring(d, order, "divide");
        set.polys.push_back(&d);
    }
    DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial(order.arity())),
                       Polynomial(order.arity())};

    Polynomial h = f;
    while (!h.is_zero()) {
        const auto& [he, hc] = h.leading();
        bool reduced = false;
        for (std::size_t k = 0; k < set.polys.size(); ++k) {
            const Polynomial& d = *set.polys[k];
            const auto& [de, dc] = d.leading();
            if (!exponents_divide(de, he)) continue;
            IntExponents t = exponents_diff(he, de);
            Rational c = hc / dc;
            res.quotients[k].add_term(t, c);
            h -= d.times_term(t, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = hc;
            res.remainder.add_term(he, c);
            h.add_term(he, -c);
        }
    }
    return res;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw domain_error("s_polynomial: zero input");
    check_in_polynomial_ring(f, order, "s_polynomial");
    check_in_polynomial_ring(g, order, "s_polynomial");
    IntExponents l = exponents_lcm(f.leading_exponents(), g.leading_exponents());
    return f.times_term(exponents_diff(l, f.leading_exponents()),
                        f.leading_coefficient().inverse()) -
           g.times_term(exponents_diff(l, g.leading_exponents()),
                        g.leading_coefficient().inverse());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    return buchberger_core(generators, order, false).basis;
}

ExtendedGroebner buchberger_extended(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order) {
    return buchberger_core(generators, order, true);
}

GroebnerBasis eliminate(const GroebnerBasis& basis, const std::vector<std::string>& keep) {
    const auto& vars = basis.order.variables;
    if (keep.size() > vars.size())
        throw domain_error("eliminate: more variables kept than the order declares");
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (vars[i] != keep[i])
            throw domain_error(
                "eliminate: kept variables must be a prefix of the order's sequence "
                "(dropped variables must be greatest)");

    const std::size_t k = keep.size();
    GroebnerBasis out;
    out.order.variables = keep;
    for (const auto& f : basis.elements) {
        bool free_of_dropped = true;
        for (const auto& [e, c] : f.terms())
            for (std::size_t v = k; v < e.size() && free_of_dropped; ++v)
                if (e[v] != 0) free_of_dropped = false;
        if (!free_of_dropped) continue;
        Polynomial g(k);
        for (const auto& [e, c] : f.terms())
            g.add_term(IntExponents(e.begin(), e.begin() + k), c);
        out.elements.push_back(std::move(g));
    }
    return out;
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.arity() != basis.order.arity())
        throw arity_mismatch("reduce: arity does not match the basis");
    return divide(f, basis.elements, basis.order).remainder;
}

}  // namespace posyring
