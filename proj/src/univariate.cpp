#include "posyring/univariate.hpp"

#include "posyring/groebner.hpp"

namespace posyring {

std::int64_t univariate_degree(const Polynomial& f) {
    if (f.arity() != 1) throw arity_mismatch("univariate_degree: arity 1 required");
    return f.leading_exponents()[0];
}

std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& f, const Polynomial& g) {
    if (f.arity() != 1 || g.arity() != 1)
        throw arity_mismatch("univariate_divmod: arity 1 required");
    if (g.is_zero()) throw domain_error("univariate_divmod: zero divisor");
    auto res = divide(f, {g}, MonomialOrder::standard(1));
    return {std::move(res.quotients[0]), std::move(res.remainder)};
}

Polynomial univariate_gcd(Polynomial a, Polynomial b) {
    if (a.arity() != 1 || b.arity() != 1)
        throw arity_mismatch("univariate_gcd: arity 1 required");
    while (!b.is_zero()) {
        Polynomial r = univariate_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a.scale(a.leading_coefficient().inverse());
    return a;
}

Rational univariate_eval(const Polynomial& f, const Rational& a) {
    if (f.arity() != 1) throw arity_mismatch("univariate_eval: arity 1 required");
    Rational acc(0);
    for (const auto& [e, c] : f.terms()) acc += c * a.pow(e[0]);
    return acc;
}

}  // namespace posyring
